//! Strict Picard categories `P_{B->D}`, their reductions `(π₀, π₁, k)`,
//! symmetric monoidal functors and obstruction theory.
//!
//! In `P_{B->D}` a morphism `b: x -> y` exists iff `x = d(b) + y`;
//! composition and tensor are both addition in `B`, and every constraint is
//! an identity. Morphism tables below are therefore plain `B'`-values.

use crate::affine::AffineSystem;
use crate::cochain::{combo, Cochain2, Cochain3, Violation};
use crate::cohomology::{H2, H3};
use crate::crossed::{induced_pi1, AbCrossMorphism, AbCrossedModule};
use crate::error::{size_guard, Error, Result};
use crate::group::{Element, FinAbGroup, MAX_ENUM_ORDER};
use crate::hom::GroupHom;

/// The strict Picard category of an abelian crossed module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictPicard {
    base: AbCrossedModule,
}

pub fn picard_of(m: &AbCrossedModule) -> StrictPicard {
    StrictPicard { base: m.clone() }
}

/// Recovers `(B, D, d)`: `D` is the object group, `B` the morphisms into 0,
/// and `d` sends `x -> 0` to `x`.
pub fn base_of(p: &StrictPicard) -> Result<AbCrossedModule> {
    let b = p.morphism_group();
    let objects = p.objects().elements()?;
    let zero = p.objects().zero();
    let images: Vec<Element> = (0..b.rank())
        .map(|j| {
            let g = b.generator(j);
            objects
                .iter()
                .find(|x| p.is_morphism(&g, x, &zero))
                .cloned()
                .expect("every element of B is a morphism into 0")
        })
        .collect();
    Ok(AbCrossedModule::new(GroupHom::from_images(
        b,
        p.objects(),
        &images,
    )?))
}

impl StrictPicard {
    /// `Dis Q`: objects `Q`, identities only.
    pub fn discrete(q: &FinAbGroup) -> Self {
        picard_of(&AbCrossedModule::discrete(q))
    }

    pub fn base(&self) -> &AbCrossedModule {
        &self.base
    }

    pub fn objects(&self) -> &FinAbGroup {
        self.base.d_group()
    }

    pub fn morphism_group(&self) -> &FinAbGroup {
        self.base.b()
    }

    pub fn is_morphism(&self, b: &Element, x: &Element, y: &Element) -> bool {
        let d = self.objects();
        self.base.d().apply(b) == d.sub(x, y)
    }

    /// `Hom(x, y)` in lexicographic order.
    pub fn hom_set(&self, x: &Element, y: &Element) -> Result<Vec<Element>> {
        let d = self.objects();
        if !d.contains(x) || !d.contains(y) {
            return Err(Error::InvalidElement(format!(
                "{x} or {y} is not an object"
            )));
        }
        let Some(b0) = self.base.d().solve_preimage(&d.sub(x, y)) else {
            return Ok(Vec::new());
        };
        let b = self.morphism_group();
        let incl = self.base.pi1_incl();
        let mut out: Vec<Element> = self
            .base
            .pi1()
            .elements()?
            .iter()
            .map(|a| b.add(&b0, &incl.apply(a)))
            .collect();
        out.sort();
        Ok(out)
    }

    /// `(x -b-> y -c-> z) = (x -(b+c)-> z)`.
    pub fn compose(&self, b: &Element, c: &Element) -> Element {
        self.morphism_group().add(b, c)
    }

    pub fn tensor_morphisms(&self, b: &Element, c: &Element) -> Element {
        self.morphism_group().add(b, c)
    }
}

/// `(M, N, ξ, η)` with `(ξ, η) ∈ Z³_s(M, N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedPicard {
    k: Cochain3,
}

impl ReducedPicard {
    pub fn new(k: Cochain3) -> Result<Self> {
        k.check_sym_3cocycle()
            .map_err(|v| Error::NotACocycle(v.to_string()))?;
        Ok(Self { k })
    }

    /// `(M, N, 0, 0)`.
    pub fn split(m: &FinAbGroup, n: &FinAbGroup) -> Result<Self> {
        Ok(Self {
            k: Cochain3::zero(m, n)?,
        })
    }

    pub fn m(&self) -> &FinAbGroup {
        self.k.source()
    }

    pub fn n(&self) -> &FinAbGroup {
        self.k.target()
    }

    pub fn k(&self) -> &Cochain3 {
        &self.k
    }
}

/// The reduction of a strict Picard category with the data of the canonical
/// functor `H: S_P -> P`: `H(s) = u(s)` and `H̃_{s,t} = b_{s,t}`.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub picard: StrictPicard,
    pub reduced: ReducedPicard,
    /// `u(s)` for `s` in the enumeration of `π₀`.
    pub section: Vec<Element>,
    /// `d(b_{s,t}) = u(s) + u(t) - u(s+t)`, values in `B`.
    pub b: Cochain2,
}

/// Reduction using the least section.
pub fn reduce(p: &StrictPicard) -> Result<Reduction> {
    let m = p.base();
    reduce_with(p, |s| m.section(s))
}

/// Lexicographically greatest representative of each `π₀` class.
pub fn greatest_section(m: &AbCrossedModule) -> Result<Vec<Element>> {
    let image: Vec<Element> = m.d().image_elements()?;
    let dg = m.d_group();
    Ok(m.pi0()
        .elements()?
        .iter()
        .map(|s| {
            let u = m.section(s);
            if s.is_zero() {
                return u;
            }
            image
                .iter()
                .map(|i| dg.add(&u, i))
                .max()
                .expect("image contains 0")
        })
        .collect())
}

/// Reduction using an arbitrary section `u` of `D -> π₀` with `u(0) = 0`.
pub fn reduce_with<F: Fn(&Element) -> Element>(p: &StrictPicard, u: F) -> Result<Reduction> {
    let m = p.base();
    let (pi0, dg, bg) = (m.pi0(), m.d_group(), m.b());
    let elems = pi0.elements()?;
    let section: Vec<Element> = elems.iter().map(&u).collect();
    for (s, x) in elems.iter().zip(&section) {
        if !dg.contains(x) || m.pi0_proj().apply(x) != *s {
            return Err(Error::InvalidElement(format!("{x} does not represent {s}")));
        }
    }
    if !section[0].is_zero() {
        return Err(Error::NotNormalized("section must send 0 to 0".into()));
    }
    let size = elems.len();
    let mut table = Vec::with_capacity(size * size);
    for i in 0..size {
        for j in 0..size {
            let sum = pi0.index_of(&pi0.add(&elems[i], &elems[j]));
            let target = combo(
                dg,
                &[(1, &section[i]), (1, &section[j]), (-1, &section[sum])],
            );
            table.push(
                m.d()
                    .solve_preimage(&target)
                    .expect("u(s)+u(t)-u(s+t) lies in Im d"),
            );
        }
    }
    let b = Cochain2::from_table(pi0, bg, table)?;
    let kb = b.coboundary();
    let to_pi1 = |v: &Element| m.pi1_coords(v).expect("coboundary of b lies in Ker d");
    let k = Cochain3::from_tables(
        pi0,
        m.pi1(),
        kb.xi_table().iter().map(to_pi1).collect(),
        kb.eta_table().iter().map(to_pi1).collect(),
    )?;
    Ok(Reduction {
        picard: p.clone(),
        reduced: ReducedPicard::new(k)?,
        section,
        b,
    })
}

/// A pair `(φ, f)` of homomorphisms `M -> M'`, `N -> N'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorTypePair {
    pub phi0: GroupHom,
    pub f: GroupHom,
}

fn check_type(t: &FunctorTypePair, s: &ReducedPicard, sp: &ReducedPicard) -> Result<()> {
    if t.phi0.dom() != s.m() || t.phi0.cod() != sp.m() || t.f.dom() != s.n() || t.f.cod() != sp.n()
    {
        return Err(Error::DomainMismatch(
            "functor type does not match (M, N) -> (M', N')".into(),
        ));
    }
    Ok(())
}

/// `k = φ*(ξ', η') - f_*(ξ, η)`.
pub fn obstruction(t: &FunctorTypePair, s: &ReducedPicard, sp: &ReducedPicard) -> Result<Cochain3> {
    check_type(t, s, sp)?;
    sp.k().pullback(&t.phi0)?.sub(&s.k().pushforward(&t.f)?)
}

/// Class of the obstruction in `H³_s(M, N')`.
pub fn obstruction_class(
    t: &FunctorTypePair,
    s: &ReducedPicard,
    sp: &ReducedPicard,
) -> Result<(H3, Element)> {
    let k = obstruction(t, s, sp)?;
    let h = H3::new(s.m(), sp.n())?;
    let c = h.class_of(&k)?;
    Ok((h, c))
}

pub fn is_realizable(t: &FunctorTypePair, s: &ReducedPicard, sp: &ReducedPicard) -> Result<bool> {
    let (_, c) = obstruction_class(t, s, sp)?;
    Ok(c.is_zero())
}

/// A symmetric monoidal functor `S -> S'` of type `(φ, f)`: `F(x) = φ(x)`,
/// `F(a, x) = (f(a), φ(x))`, with `F̃_{x,y} = tilde(x, y) ∈ N'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedFunctor {
    pub source: ReducedPicard,
    pub target: ReducedPicard,
    pub ty: FunctorTypePair,
    pub tilde: Cochain2,
}

impl ReducedFunctor {
    pub fn new(
        source: &ReducedPicard,
        target: &ReducedPicard,
        ty: FunctorTypePair,
        tilde: Cochain2,
    ) -> Result<Self> {
        check_type(&ty, source, target)?;
        if tilde.source() != source.m() || tilde.target() != target.n() {
            return Err(Error::InvalidFunctor("F̃ is not a table M x M -> N'".into()));
        }
        let f = Self {
            source: source.clone(),
            target: target.clone(),
            ty,
            tilde,
        };
        f.check_coherence()
            .map_err(|v| Error::InvalidFunctor(v.to_string()))?;
        Ok(f)
    }

    /// Compatibility with the associativity and symmetry constraints:
    ///
    /// `F̃(x,y+z) + F̃(y,z) + ξ'(φx,φy,φz) = f(ξ(x,y,z)) + F̃(x+y,z) + F̃(x,y)`
    /// `F̃(y,x) + η'(φx,φy) = f(η(x,y)) + F̃(x,y)`
    pub fn check_coherence(&self) -> std::result::Result<(), Violation> {
        let m = self.source.m();
        let np = self.target.n();
        let elems = m.elements().expect("guarded by cochain construction");
        let (phi, f, t) = (&self.ty.phi0, &self.ty.f, &self.tilde);
        let (k, kp) = (self.source.k(), self.target.k());
        for x in &elems {
            for y in &elems {
                for z in &elems {
                    let (px, py, pz) = (phi.apply(x), phi.apply(y), phi.apply(z));
                    let lhs = combo(
                        np,
                        &[
                            (1, t.get(x, &m.add(y, z))),
                            (1, t.get(y, z)),
                            (1, kp.xi(&px, &py, &pz)),
                        ],
                    );
                    let fx = f.apply(k.xi(x, y, z));
                    let rhs = combo(
                        np,
                        &[(1, &fx), (1, t.get(&m.add(x, y), z)), (1, t.get(x, y))],
                    );
                    if lhs != rhs {
                        return Err(Violation {
                            condition: "associativity coherence",
                            args: vec![x.clone(), y.clone(), z.clone()],
                        });
                    }
                }
                let lhs = np.add(t.get(y, x), kp.eta(&phi.apply(x), &phi.apply(y)));
                let rhs = np.add(&f.apply(k.eta(x, y)), t.get(x, y));
                if lhs != rhs {
                    return Err(Violation {
                        condition: "symmetry coherence",
                        args: vec![x.clone(), y.clone()],
                    });
                }
            }
        }
        Ok(())
    }
}

/// Least `θ: M -> N'` with `F̃ - F̃' = δθ`, if the functors are homotopic.
pub fn are_homotopic_reduced(
    f: &ReducedFunctor,
    g: &ReducedFunctor,
) -> Result<Option<crate::cochain::Cochain1>> {
    if f.source != g.source || f.target != g.target || f.ty != g.ty {
        return Err(Error::DomainMismatch(
            "functors do not share source, target and type".into(),
        ));
    }
    let (m, np) = (f.source.m(), f.target.n());
    let diff = f.tilde.sub(&g.tilde)?;
    let h = H2::new(m, np)?;
    match h.coboundary_map().solve_preimage(&diff.to_coords()) {
        Some(c) => Ok(Some(crate::cochain::Cochain1::from_coords(m, np, &c)?)),
        None => Ok(None),
    }
}

/// One functor per homotopy class of functors `S -> S'` of type `t`, or
/// none when the obstruction class is nonzero.
///
/// The class of the least `F̃` with `δF̃ = -k` is the base point; the others
/// are obtained by adding the least representative of each `H²_s(M, N')`
/// class, in class order.
pub fn functor_classes(
    t: &FunctorTypePair,
    s: &ReducedPicard,
    sp: &ReducedPicard,
) -> Result<Vec<ReducedFunctor>> {
    let k = obstruction(t, s, sp)?;
    let h3 = H3::new(s.m(), sp.n())?;
    let Some(base) = h3.coboundary_witness(&k.neg())? else {
        return Ok(Vec::new());
    };
    let h2 = H2::new(s.m(), sp.n())?;
    h2.all_classes()?
        .into_iter()
        .map(|(_, rep)| ReducedFunctor::new(s, sp, t.clone(), base.add(&rep)?))
        .collect()
}

/// A symmetric monoidal functor between strict Picard categories, with the
/// morphism map given by a homomorphism `f₁: B -> B'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymMonoidalFunctor {
    source: StrictPicard,
    target: StrictPicard,
    objects: Vec<Element>,
    f1: GroupHom,
    tilde: Vec<Element>,
}

impl SymMonoidalFunctor {
    /// `objects[i]` is the image of the `i`-th object of the source;
    /// `tilde[i * |D| + j]` is `F̃` at the `(i, j)`-th pair.
    pub fn new(
        source: &StrictPicard,
        target: &StrictPicard,
        objects: Vec<Element>,
        f1: GroupHom,
        tilde: Vec<Element>,
    ) -> Result<Self> {
        let dg = source.objects();
        size_guard(
            "functor source objects",
            dg.order(),
            MAX_ENUM_ORDER.min(256),
        )?;
        let s = dg.order() as usize;
        if objects.len() != s || tilde.len() != s * s {
            return Err(Error::InvalidFunctor(
                "object or F̃ table has the wrong size".into(),
            ));
        }
        if f1.dom() != source.morphism_group() || f1.cod() != target.morphism_group() {
            return Err(Error::InvalidFunctor("f1 is not a map B -> B'".into()));
        }
        if let Some(x) = objects.iter().find(|x| !target.objects().contains(x)) {
            return Err(Error::InvalidFunctor(format!(
                "{x} is not an object of the target"
            )));
        }
        if let Some(v) = tilde.iter().find(|v| !target.morphism_group().contains(v)) {
            return Err(Error::InvalidFunctor(format!(
                "{v} is not a morphism of the target"
            )));
        }
        let f = Self {
            source: source.clone(),
            target: target.clone(),
            objects,
            f1,
            tilde,
        };
        f.check()
            .map_err(|v| Error::InvalidFunctor(v.to_string()))?;
        Ok(f)
    }

    fn check(&self) -> std::result::Result<(), Violation> {
        let dg = self.source.objects();
        let cay = dg.cayley().expect("guarded");
        let s = cay.len();
        let (bp, dp) = (self.target.morphism_group(), self.target.objects());
        let el = |i: usize| cay.elements[i].clone();
        let fail = |c: &'static str, args: Vec<Element>| Err(Violation { condition: c, args });
        if !self.objects[0].is_zero() {
            return fail("F(0) = 0", vec![el(0)]);
        }
        let b = self.source.morphism_group();
        for j in 0..b.rank() {
            let g = b.generator(j);
            let shift = dg.index_of(&self.source.base().d().apply(&g));
            let fg = self.f1.apply(&g);
            for x in 0..s {
                let y = cay.sub(x, shift);
                if !self
                    .target
                    .is_morphism(&fg, &self.objects[x], &self.objects[y])
                {
                    return fail("F(b): F(x) -> F(y) for b: x -> y", vec![el(x), el(y)]);
                }
                for z in 0..s {
                    if self.t(x, z) != self.t(y, z) {
                        return fail("naturality of F̃", vec![el(x), el(y), el(z)]);
                    }
                }
            }
        }
        for x in 0..s {
            if !self.t(x, 0).is_zero() || !self.t(0, x).is_zero() {
                return fail("F̃ normalized", vec![el(x)]);
            }
            for y in 0..s {
                let xy = cay.add(x, y);
                let expect = combo(
                    dp,
                    &[
                        (1, &self.objects[x]),
                        (1, &self.objects[y]),
                        (-1, &self.objects[xy]),
                    ],
                );
                if self.target.base().d().apply(self.t(x, y)) != expect {
                    return fail("F̃(x,y): F(x)+F(y) -> F(x+y)", vec![el(x), el(y)]);
                }
                if self.t(x, y) != self.t(y, x) {
                    return fail("symmetry: F̃(x,y) = F̃(y,x)", vec![el(x), el(y)]);
                }
                for z in 0..s {
                    let lhs = bp.add(self.t(y, z), self.t(x, cay.add(y, z)));
                    let rhs = bp.add(self.t(x, y), self.t(xy, z));
                    if lhs != rhs {
                        return fail(
                            "associativity: F̃(y,z)+F̃(x,y+z) = F̃(x,y)+F̃(x+y,z)",
                            vec![el(x), el(y), el(z)],
                        );
                    }
                }
            }
        }
        Ok(())
    }

    fn t(&self, i: usize, j: usize) -> &Element {
        &self.tilde[i * self.objects.len() + j]
    }

    pub fn source(&self) -> &StrictPicard {
        &self.source
    }

    pub fn target(&self) -> &StrictPicard {
        &self.target
    }

    pub fn f1(&self) -> &GroupHom {
        &self.f1
    }

    pub fn object(&self, x: &Element) -> &Element {
        &self.objects[self.source.objects().index_of(x)]
    }

    pub fn object_table(&self) -> &[Element] {
        &self.objects
    }

    pub fn tilde(&self, x: &Element, y: &Element) -> &Element {
        let d = self.source.objects();
        self.t(d.index_of(x), d.index_of(y))
    }

    pub fn tilde_table(&self) -> &[Element] {
        &self.tilde
    }

    /// `F(x) + F(y) = F(x + y)` on the nose.
    pub fn is_regular(&self) -> bool {
        self.object_hom().is_some()
    }

    pub fn object_hom(&self) -> Option<GroupHom> {
        let dg = self.source.objects();
        GroupHom::from_fn(dg, self.target.objects(), |x| self.object(x).clone()).ok()
    }

    /// The induced type `(π₀F, π₁F)`.
    pub fn reduced_type(&self) -> Result<FunctorTypePair> {
        let (m, mp) = (self.source.base(), self.target.base());
        let phi0 = GroupHom::from_fn(m.pi0(), mp.pi0(), |s| {
            mp.pi0_proj().apply(self.object(&m.section(s)))
        })?;
        Ok(FunctorTypePair {
            phi0,
            f: induced_pi1(m, mp, &self.f1),
        })
    }
}

/// `F(x) = f₀(x)`, `F(b) = f₁(b)`, `F̃_{x,y} = φ(x̄, ȳ)`.
pub fn functor_of_morphism(m: &AbCrossMorphism) -> Result<SymMonoidalFunctor> {
    let (src, tgt) = (m.source(), m.target());
    let elems = src.d_group().elements()?;
    let objects: Vec<Element> = elems.iter().map(|x| m.f0.apply(x)).collect();
    let classes: Vec<Element> = elems.iter().map(|x| src.pi0_proj().apply(x)).collect();
    let mut tilde = Vec::with_capacity(elems.len() * elems.len());
    for s in &classes {
        for t in &classes {
            tilde.push(tgt.pi1_incl().apply(m.phi.get(s, t)));
        }
    }
    SymMonoidalFunctor::new(
        &picard_of(src),
        &picard_of(tgt),
        objects,
        m.f1.clone(),
        tilde,
    )
}

/// Inverse of [`functor_of_morphism`] on regular functors.
pub fn morphism_of_functor(f: &SymMonoidalFunctor) -> Result<AbCrossMorphism> {
    let f0 = f
        .object_hom()
        .ok_or_else(|| Error::InvalidFunctor("object map is not a homomorphism".into()))?;
    let (src, tgt) = (f.source.base(), f.target.base());
    let phi = Cochain2::from_fn(src.pi0(), tgt.pi1(), |s, t| {
        let v = f.tilde(&src.section(s), &src.section(t));
        tgt.pi1_coords(v).unwrap_or_else(|| tgt.pi1().zero())
    })?;
    for (i, v) in f.tilde.iter().enumerate() {
        if tgt.pi1_coords(v).is_none() {
            let n = f.objects.len();
            return Err(Error::InvalidFunctor(format!(
                "F̃ at pair ({}, {}) is {v}, outside Ker d'",
                src.d_group().element_at(i / n),
                src.d_group().element_at(i % n)
            )));
        }
    }
    AbCrossMorphism::new(src, tgt, f.f1.clone(), f0, phi)
}

/// `G ∘ F` with `(G∘F)~_{x,y} = G(F̃_{x,y}) + G̃_{Fx,Fy}`.
pub fn compose_functors(
    g: &SymMonoidalFunctor,
    f: &SymMonoidalFunctor,
) -> Result<SymMonoidalFunctor> {
    if f.target != g.source {
        return Err(Error::DomainMismatch("functors are not composable".into()));
    }
    let objects: Vec<Element> = f.objects.iter().map(|x| g.object(x).clone()).collect();
    let f1 = g.f1.compose(&f.f1)?;
    let bp = g.target.morphism_group();
    let dg = f.source.objects();
    let elems = dg.elements()?;
    let mut tilde = Vec::with_capacity(elems.len() * elems.len());
    for x in &elems {
        for y in &elems {
            tilde.push(bp.add(
                &g.f1.apply(f.tilde(x, y)),
                g.tilde(f.object(x), f.object(y)),
            ));
        }
    }
    SymMonoidalFunctor::new(&f.source, &g.target, objects, f1, tilde)
}

/// Least natural equivalence `θ: F => G` (one `B'` value per source object,
/// `θ(0) = 0`), if one exists.
///
/// Conditions: `d'(θ_x) = F(x) - G(x)`; `θ_x - θ_y = f₁(b) - g₁(b)` for
/// `b: x -> y`; `θ_x + θ_y - θ_{x+y} = F̃(x,y) - G̃(x,y)`.
pub fn are_homotopic(
    f: &SymMonoidalFunctor,
    g: &SymMonoidalFunctor,
) -> Result<Option<Vec<Element>>> {
    if f.source != g.source || f.target != g.target {
        return Err(Error::DomainMismatch(
            "functors do not share source and target".into(),
        ));
    }
    let dg = f.source.objects();
    let cay = dg.cayley()?;
    let s = cay.len();
    let (bp, dp) = (f.target.morphism_group(), f.target.objects());
    let var = |x: usize| x.checked_sub(1);
    let mut sys = AffineSystem::new(bp, s.saturating_sub(1));
    let dmap = f.target.base().d();
    for x in 0..s {
        let rhs = dp.sub(&f.objects[x], &g.objects[x]);
        let terms: Vec<(usize, &GroupHom)> = var(x).map(|v| (v, dmap)).into_iter().collect();
        sys.hom_equation(dp, &terms, rhs)?;
    }
    let b = f.source.morphism_group();
    for j in 0..b.rank() {
        let gen = b.generator(j);
        let shift = dg.index_of(&f.source.base().d().apply(&gen));
        let rhs = bp.sub(&f.f1.apply(&gen), &g.f1.apply(&gen));
        for x in 0..s {
            let y = cay.sub(x, shift);
            let mut terms = Vec::new();
            if let Some(v) = var(x) {
                terms.push((v, 1));
            }
            if let Some(v) = var(y) {
                terms.push((v, -1));
            }
            sys.scalar_equation(&terms, rhs.clone())?;
        }
    }
    for x in 1..s {
        for y in x..s {
            let xy = cay.add(x, y);
            let mut terms = vec![(x - 1, 1), (y - 1, 1)];
            if let Some(v) = var(xy) {
                terms.push((v, -1));
            }
            sys.scalar_equation(&terms, bp.sub(f.t(x, y), g.t(x, y)))?;
        }
    }
    Ok(sys.solve()?.map(|theta| {
        let mut out = vec![bp.zero()];
        out.extend(theta);
        out
    }))
}

/// Checks the three conditions on `θ` (indexed like the source objects)
/// by direct evaluation.
pub fn is_natural_equivalence(
    f: &SymMonoidalFunctor,
    g: &SymMonoidalFunctor,
    theta: &[Element],
) -> bool {
    let dg = f.source.objects();
    let Ok(cay) = dg.cayley() else { return false };
    let s = cay.len();
    let (bp, dp) = (f.target.morphism_group(), f.target.objects());
    if theta.len() != s || !theta[0].is_zero() || theta.iter().any(|t| !bp.contains(t)) {
        return false;
    }
    let dmap = f.target.base().d();
    if (0..s).any(|x| dmap.apply(&theta[x]) != dp.sub(&f.objects[x], &g.objects[x])) {
        return false;
    }
    let Ok(bs) = f.source.morphism_group().elements() else {
        return false;
    };
    for b in &bs {
        let shift = dg.index_of(&f.source.base().d().apply(b));
        let rhs = bp.sub(&f.f1.apply(b), &g.f1.apply(b));
        if (0..s).any(|x| bp.sub(&theta[x], &theta[cay.sub(x, shift)]) != rhs) {
            return false;
        }
    }
    (0..s).all(|x| {
        (0..s).all(|y| {
            combo(
                bp,
                &[(1, &theta[x]), (1, &theta[y]), (-1, &theta[cay.add(x, y)])],
            ) == bp.sub(f.t(x, y), g.t(x, y))
        })
    })
}

impl Reduction {
    /// `H ∘ Ψ` for a functor `Ψ: (Q, 0, 0) -> S_P` of type `(ψ, 0)`: objects
    /// `u ↦ u(ψu)` and `F̃_{u,v} = Ψ̃(u,v) + b_{ψu,ψv}`.
    pub fn lift_from_discrete(&self, psi: &ReducedFunctor) -> Result<SymMonoidalFunctor> {
        if psi.target != self.reduced {
            return Err(Error::DomainMismatch(
                "functor does not land in this reduction".into(),
            ));
        }
        let q = psi.source.m();
        let m = self.picard.base();
        let elems = q.elements()?;
        let pi0 = m.pi0();
        let images: Vec<usize> = elems
            .iter()
            .map(|u| pi0.index_of(&psi.ty.phi0.apply(u)))
            .collect();
        let objects: Vec<Element> = images.iter().map(|&i| self.section[i].clone()).collect();
        let bg = m.b();
        let mut tilde = Vec::with_capacity(elems.len() * elems.len());
        for (u, &iu) in elems.iter().zip(&images) {
            for (v, &iv) in elems.iter().zip(&images) {
                tilde.push(bg.add(&m.pi1_incl().apply(psi.tilde.get(u, v)), self.b.at(iu, iv)));
            }
        }
        SymMonoidalFunctor::new(
            &StrictPicard::discrete(q),
            &self.picard,
            objects,
            GroupHom::zero(&FinAbGroup::trivial(), bg),
            tilde,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: i64) -> FinAbGroup {
        FinAbGroup::cyclic(n)
    }

    fn e(v: i64) -> Element {
        Element(vec![v])
    }

    fn cm(a: i64, b: i64, k: i64) -> AbCrossedModule {
        AbCrossedModule::from_matrix(&z(a), &z(b), vec![vec![k]]).unwrap()
    }

    #[test]
    fn hom_sets() {
        let p = picard_of(&cm(4, 2, 1));
        assert_eq!(p.hom_set(&e(0), &e(0)).unwrap(), vec![e(0), e(2)]);
        assert_eq!(p.hom_set(&e(1), &e(1)).unwrap(), vec![e(0), e(2)]);
        let p = picard_of(&cm(2, 4, 2));
        assert_eq!(p.hom_set(&e(2), &e(0)).unwrap(), vec![e(1)]);
        assert!(p.hom_set(&e(1), &e(0)).unwrap().is_empty());
        assert_eq!(p.hom_set(&e(3), &e(1)).unwrap(), vec![e(1)]);
        let dis = StrictPicard::discrete(&z(3));
        assert_eq!(dis.hom_set(&e(1), &e(1)).unwrap(), vec![Element(vec![])]);
        assert!(dis.hom_set(&e(1), &e(2)).unwrap().is_empty());
    }

    #[test]
    fn base_round_trip() {
        for m in [
            cm(4, 2, 1),
            cm(2, 4, 2),
            cm(6, 4, 2),
            AbCrossedModule::discrete(&z(3)),
        ] {
            assert_eq!(base_of(&picard_of(&m)).unwrap(), m);
        }
    }

    #[test]
    fn discrete_reduction_is_identity_coordinates() {
        let q = FinAbGroup::new(&[2, 4]).unwrap();
        let m = AbCrossedModule::discrete(&q);
        assert_eq!(m.pi0(), &q);
        assert_eq!(m.pi0_proj(), &GroupHom::identity(&q));
        let r = reduce(&StrictPicard::discrete(&q)).unwrap();
        assert!(r.reduced.k().is_zero());
    }

    #[test]
    fn reduce_examples() {
        for m in [cm(2, 4, 2), cm(2, 2, 0), cm(4, 4, 2)] {
            let r = reduce(&picard_of(&m)).unwrap();
            assert!(r.reduced.k().is_zero(), "{m:?}");
        }
        let r = reduce(&picard_of(&cm(4, 4, 2))).unwrap();
        assert_eq!(r.b.at(1, 1), &e(1));
    }

    #[test]
    fn functor_morphism_round_trip() {
        let m = cm(2, 2, 0);
        let phi = Cochain2::from_entries(m.pi0(), m.pi1(), [(&e(1), &e(1), &e(1))]).unwrap();
        let id = AbCrossMorphism::identity(&m).unwrap();
        let a = AbCrossMorphism::new(&m, &m, id.f1.clone(), id.f0.clone(), phi).unwrap();
        let f = functor_of_morphism(&a).unwrap();
        assert_eq!(morphism_of_functor(&f).unwrap(), a);
        let g = functor_of_morphism(&id).unwrap();
        assert!(g.tilde_table().iter().all(Element::is_zero));
        // phi(1,1) = 1 is not a coboundary on Z/2, so F is not homotopic to id
        assert!(are_homotopic(&f, &g).unwrap().is_none());
        assert_eq!(are_homotopic(&f, &f).unwrap().unwrap(), vec![e(0), e(0)]);
    }

    #[test]
    fn eta_obstruction_blocks_realization() {
        let s = ReducedPicard::split(&z(2), &FinAbGroup::trivial()).unwrap();
        let k =
            Cochain3::from_fns(&z(2), &z(2), |_, _, _| e(0), |x, y| e(x.0[0] * y.0[0])).unwrap();
        let sp = ReducedPicard::new(k.clone()).unwrap();
        let t = FunctorTypePair {
            phi0: GroupHom::identity(&z(2)),
            f: GroupHom::zero(&FinAbGroup::trivial(), &z(2)),
        };
        assert_eq!(obstruction(&t, &s, &sp).unwrap(), k);
        assert!(!is_realizable(&t, &s, &sp).unwrap());
        assert!(functor_classes(&t, &s, &sp).unwrap().is_empty());

        let sp0 = ReducedPicard::split(&z(2), &z(2)).unwrap();
        let classes = functor_classes(&t, &s, &sp0).unwrap();
        assert_eq!(classes.len(), 2);
        assert!(are_homotopic_reduced(&classes[0], &classes[1])
            .unwrap()
            .is_none());
    }
}
