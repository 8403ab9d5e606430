//! Extensions `0 -> B -> E -> Q -> 0` of the type of `d: B -> D`, stored in
//! normal form: `E = B x Q` with `(b,u) + (c,v) = (b + c + f(u,v), u + v)` and
//! `ε(b, u) = d(b) + F(u)`.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::affine::AffineSystem;
use crate::cochain::{combo, Cochain1, Cochain2};
use crate::cohomology::H3;
use crate::crossed::AbCrossedModule;
use crate::error::{Error, Result};
use crate::group::{Element, FinAbGroup};
use crate::hom::GroupHom;
use crate::matrix::Matrix;
use crate::picard::{
    functor_classes, picard_of, reduce, FunctorTypePair, ReducedPicard, StrictPicard,
    SymMonoidalFunctor,
};
use crate::snf::smith_normal_form;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    base: AbCrossedModule,
    q: FinAbGroup,
    f: Cochain2,
    fmap: Vec<Element>,
}

impl Extension {
    /// `fmap[i]` is `F` at the `i`-th element of `Q`.
    pub fn new(base: &AbCrossedModule, f: Cochain2, fmap: Vec<Element>) -> Result<Self> {
        let e = Self {
            base: base.clone(),
            q: f.source().clone(),
            f,
            fmap,
        };
        e.validate()?;
        Ok(e)
    }

    /// First violated invariant, if any.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidExtension(m));
        if self.f.target() != self.base.b() {
            return bad(format!(
                "f takes values in {}, expected B = {}",
                self.f.target(),
                self.base.b()
            ));
        }
        let q = &self.q;
        let elems = q.elements()?;
        if self.fmap.len() != elems.len() {
            return bad(format!(
                "F has {} values for |Q| = {}",
                self.fmap.len(),
                elems.len()
            ));
        }
        let dg = self.base.d_group();
        if let Some(x) = self.fmap.iter().find(|x| !dg.contains(x)) {
            return bad(format!("F value {x} is not in D"));
        }
        if !self.fmap[0].is_zero() {
            return bad("F(0) != 0".into());
        }
        if let Err(v) = self.f.check_sym_2cocycle() {
            return bad(format!("f is not a symmetric 2-cocycle: {v}"));
        }
        for (i, u) in elems.iter().enumerate() {
            for (j, v) in elems.iter().enumerate() {
                let uv = q.index_of(&q.add(u, v));
                let expect = combo(
                    dg,
                    &[(1, &self.fmap[i]), (1, &self.fmap[j]), (-1, &self.fmap[uv])],
                );
                if self.base.d().apply(self.f.at(i, j)) != expect {
                    return bad(format!("d(f({u}, {v})) != F({u}) + F({v}) - F({u}+{v})"));
                }
            }
        }
        Ok(())
    }

    pub fn base(&self) -> &AbCrossedModule {
        &self.base
    }

    pub fn quotient(&self) -> &FinAbGroup {
        &self.q
    }

    pub fn cocycle(&self) -> &Cochain2 {
        &self.f
    }

    pub fn fmap(&self) -> &[Element] {
        &self.fmap
    }

    pub fn fmap_at(&self, u: &Element) -> &Element {
        &self.fmap[self.q.index_of(u)]
    }

    /// `(b,u) + (c,v)`.
    pub fn add(&self, x: &(Element, Element), y: &(Element, Element)) -> (Element, Element) {
        let b = self.base.b();
        let s = b.add(&b.add(&x.0, &y.0), self.f.get(&x.1, &y.1));
        (s, self.q.add(&x.1, &y.1))
    }

    /// `ε(b, u) = d(b) + F(u)`.
    pub fn epsilon(&self, x: &(Element, Element)) -> Element {
        self.base
            .d_group()
            .add(&self.base.d().apply(&x.0), self.fmap_at(&x.1))
    }

    /// `ψ(u) = [ε(0, u)]` in `π₀`.
    pub fn induced_psi(&self) -> Result<GroupHom> {
        GroupHom::from_fn(&self.q, self.base.pi0(), |u| {
            self.base.pi0_proj().apply(self.fmap_at(u))
        })
    }

    /// Invariant factors of `E`, from the presentation on `(b_i, 0)` and
    /// `(0, e_j)` with `m_j (0, e_j) = (Σ_{k<m_j} f(k e_j, e_j), 0)`.
    pub fn total_group_type(&self) -> FinAbGroup {
        let (b, q) = (self.base.b(), &self.q);
        let (rb, rq) = (b.rank(), q.rank());
        let mut rows = Vec::new();
        for (i, &n) in b.factors().iter().enumerate() {
            let mut r = vec![0i64; rb + rq];
            r[i] = n;
            rows.push(r);
        }
        for (j, &m) in q.factors().iter().enumerate() {
            let g = q.generator(j);
            let mut acc = b.zero();
            let mut k = g.clone();
            for _ in 1..m {
                acc = b.add(&acc, self.f.get(&k, &g));
                k = q.add(&k, &g);
            }
            let mut r = vec![0i64; rb + rq];
            for (i, &c) in acc.0.iter().enumerate() {
                r[i] = -c;
            }
            r[rb + j] = m;
            rows.push(r);
        }
        let snf = smith_normal_form(&Matrix::<BigInt>::from_i64_rows(rb + rq, &rows));
        let factors: Vec<i64> = snf
            .diagonal()
            .into_iter()
            .filter(|v| !v.is_one())
            .map(|v| v.to_i64().expect("factor fits in i64"))
            .collect();
        FinAbGroup::new(&factors).expect("positive factors")
    }

    /// `e_u = (0, u)` gives `F(u) = ε(e_u)` and `F̃_{u,v} = f(u,v)`.
    pub fn functor(&self) -> Result<SymMonoidalFunctor> {
        SymMonoidalFunctor::new(
            &StrictPicard::discrete(&self.q),
            &picard_of(&self.base),
            self.fmap.clone(),
            GroupHom::zero(&FinAbGroup::trivial(), self.base.b()),
            self.f.table().to_vec(),
        )
    }
}

/// `f(u,v) = F̃_{u,v}`, `ε(b,u) = d(b) + F(u)`, for a functor `Dis Q -> P`.
pub fn extension_of_functor(functor: &SymMonoidalFunctor) -> Result<Extension> {
    let src = functor.source().base();
    if !src.b().is_trivial() {
        return Err(Error::InvalidFunctor(
            "source is not a discrete category".into(),
        ));
    }
    let q = src.d_group();
    let base = functor.target().base();
    let f = Cochain2::from_table(q, base.b(), functor.tilde_table().to_vec())
        .map_err(|e| Error::InvalidFunctor(e.to_string()))?;
    Extension::new(base, f, functor.object_table().to_vec())
}

pub fn functor_of_extension(e: &Extension) -> Result<SymMonoidalFunctor> {
    e.functor()
}

/// Least `α: Q -> B` with `f(u,v) + α(u+v) = α(u) + α(v) + f'(u,v)` and
/// `d(α(u)) = F(u) - F'(u)`, if the extensions are equivalent.
pub fn are_equivalent(e: &Extension, other: &Extension) -> Result<Option<Cochain1>> {
    if e.base != other.base || e.q != other.q {
        return Err(Error::BaseMismatch(
            "extensions of different crossed modules or quotients".into(),
        ));
    }
    let (q, b, dg) = (&e.q, e.base.b(), e.base.d_group());
    let cay = q.cayley()?;
    let s = cay.len();
    let mut sys = AffineSystem::new(b, s.saturating_sub(1));
    for u in 1..s {
        sys.hom_equation(
            dg,
            &[(u - 1, e.base.d())],
            dg.sub(&e.fmap[u], &other.fmap[u]),
        )?;
    }
    for u in 1..s {
        for v in u..s {
            let mut terms = vec![(u - 1, 1), (v - 1, 1)];
            let uv = cay.add(u, v);
            if uv != 0 {
                terms.push((uv - 1, -1));
            }
            sys.scalar_equation(&terms, b.sub(e.f.at(u, v), other.f.at(u, v)))?;
        }
    }
    match sys.solve()? {
        Some(alpha) => {
            let mut table = vec![b.zero()];
            table.extend(alpha);
            Ok(Some(Cochain1::from_table(q, b, table)?))
        }
        None => Ok(None),
    }
}

/// `α` satisfies `f(u,v) + α(u+v) = α(u) + α(v) + f'(u,v)` and
/// `d(α(u)) = F(u) - F'(u)`, checked entry by entry.
pub fn is_equivalence(e: &Extension, other: &Extension, alpha: &Cochain1) -> bool {
    if e.base != other.base
        || e.q != other.q
        || alpha.source() != &e.q
        || alpha.target() != e.base.b()
    {
        return false;
    }
    let (q, b, dg) = (&e.q, e.base.b(), e.base.d_group());
    let s = q.order() as usize;
    let ok_d = (0..s).all(|u| e.base.d().apply(alpha.at(u)) == dg.sub(&e.fmap[u], &other.fmap[u]));
    ok_d && (0..s).all(|u| {
        (0..s).all(|v| {
            let uv = q.index_of(&q.add(&q.element_at(u), &q.element_at(v)));
            let lhs = b.add(e.f.at(u, v), alpha.at(uv));
            let rhs = combo(
                b,
                &[(1, alpha.at(u)), (1, alpha.at(v)), (1, other.f.at(u, v))],
            );
            lhs == rhs
        })
    })
}

fn check_psi(m: &AbCrossedModule, q: &FinAbGroup, psi: &GroupHom) -> Result<()> {
    if psi.dom() != q || psi.cod() != m.pi0() {
        return Err(Error::DomainMismatch(format!(
            "psi must map Q = {q} to π₀ = {}",
            m.pi0()
        )));
    }
    Ok(())
}

/// Class of `ψ*k` in `H³_s(Q, Ker d)`, with `k` the reduced invariant of
/// `P_{B->D}`.
pub fn obstruction_class(
    m: &AbCrossedModule,
    q: &FinAbGroup,
    psi: &GroupHom,
) -> Result<(H3, Element)> {
    check_psi(m, q, psi)?;
    let k = reduce(&picard_of(m))?.reduced.k().pullback(psi)?;
    let h = H3::new(q, m.pi1())?;
    let c = h.class_of(&k)?;
    Ok((h, c))
}

#[derive(Clone, Debug)]
pub enum ClassificationResult {
    /// Nonzero class of `ψ*k` in `H³_s(Q, Ker d)`.
    Obstructed { class: Element, h3: FinAbGroup },
    /// One extension per element of `H²_s(Q, Ker d)`, in element order.
    Classes {
        h2: FinAbGroup,
        labels: Vec<Element>,
        representatives: Vec<Extension>,
    },
}

impl ClassificationResult {
    pub fn class_count(&self) -> usize {
        match self {
            ClassificationResult::Obstructed { .. } => 0,
            ClassificationResult::Classes {
                representatives, ..
            } => representatives.len(),
        }
    }
}

/// Equivalence classes of extensions of `B` by `Q` of type `d` inducing `ψ`.
pub fn classify_extensions(
    m: &AbCrossedModule,
    q: &FinAbGroup,
    psi: &GroupHom,
) -> Result<ClassificationResult> {
    check_psi(m, q, psi)?;
    let red = reduce(&picard_of(m))?;
    let source = ReducedPicard::split(q, &FinAbGroup::trivial())?;
    let t = FunctorTypePair {
        phi0: psi.clone(),
        f: GroupHom::zero(&FinAbGroup::trivial(), m.pi1()),
    };
    let classes = functor_classes(&t, &source, &red.reduced)?;
    if classes.is_empty() {
        let (h, class) = obstruction_class(m, q, psi)?;
        return Ok(ClassificationResult::Obstructed {
            class,
            h3: h.group().clone(),
        });
    }
    let h2 = crate::cohomology::H2::new(q, m.pi1())?;
    let labels = h2.group().elements()?;
    let representatives = classes
        .iter()
        .map(|c| extension_of_functor(&red.lift_from_discrete(c)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(ClassificationResult::Classes {
        h2: h2.group().clone(),
        labels,
        representatives,
    })
}

/// `B -> D -> Coker d` for injective `d`, with the least section.
pub fn canonical_extension(m: &AbCrossedModule) -> Result<Extension> {
    if !m.pi1().is_trivial() {
        return Err(Error::NotMono);
    }
    let red = reduce(&picard_of(m))?;
    Extension::new(m, red.b.clone(), red.section.clone())
}

/// The induced extension `D_ψ` of an extension of `B` by `π₀`.
pub fn pullback_extension(dext: &Extension, psi: &GroupHom) -> Result<Extension> {
    let m = dext.base();
    if !m.pi1().is_trivial() {
        return Err(Error::NotMono);
    }
    if psi.cod() != dext.quotient() {
        return Err(Error::DomainMismatch(
            "psi does not land in the quotient".into(),
        ));
    }
    let q = psi.dom();
    let f = dext.cocycle().pullback(psi)?;
    let fmap = q
        .elements()?
        .iter()
        .map(|u| dext.fmap_at(&psi.apply(u)).clone())
        .collect();
    Extension::new(m, f, fmap)
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
    fn split_and_twisted() {
        let m = cm(2, 2, 0);
        let split =
            Extension::new(&m, Cochain2::zero(&z(2), &z(2)).unwrap(), vec![e(0), e(1)]).unwrap();
        assert_eq!(split.total_group_type().factors(), &[2, 2]);
        assert_eq!(split.induced_psi().unwrap(), GroupHom::identity(&z(2)));
        let f = Cochain2::from_entries(&z(2), &z(2), [(&e(1), &e(1), &e(1))]).unwrap();
        let tw = Extension::new(&m, f, vec![e(0), e(1)]).unwrap();
        assert_eq!(tw.total_group_type().factors(), &[4]);
        assert_eq!(tw.add(&(e(0), e(1)), &(e(0), e(1))), (e(1), e(0)));
        assert!(are_equivalent(&split, &tw).unwrap().is_none());
        assert_eq!(
            are_equivalent(&tw, &tw).unwrap().unwrap(),
            Cochain1::zero(&z(2), &z(2)).unwrap()
        );
    }

    #[test]
    fn trivial_quotient() {
        let m = cm(4, 2, 1);
        let t = FinAbGroup::trivial();
        let ext = Extension::new(
            &m,
            Cochain2::zero(&t, m.b()).unwrap(),
            vec![Element(vec![0])],
        )
        .unwrap();
        assert_eq!(ext.total_group_type(), *m.b());
        assert!(ext.induced_psi().unwrap().is_zero());
        let r = classify_extensions(&m, &t, &GroupHom::zero(&t, m.pi0())).unwrap();
        assert_eq!(r.class_count(), 1);
    }

    #[test]
    fn invalid_cocycle_is_reported() {
        let m = cm(3, 3, 0);
        let f = Cochain2::from_entries(&z(3), &z(3), [(&e(1), &e(2), &e(1))]).unwrap();
        let err = Extension::new(&m, f, vec![e(0), e(0), e(0)]).unwrap_err();
        assert!(matches!(err, Error::InvalidExtension(_)));
    }

    #[test]
    fn benchmark_instances() {
        let m = cm(2, 2, 0);
        let r = classify_extensions(&m, &z(2), &GroupHom::identity(&z(2))).unwrap();
        let ClassificationResult::Classes {
            representatives, ..
        } = r
        else {
            panic!("obstructed")
        };
        let mut totals: Vec<Vec<i64>> = representatives
            .iter()
            .map(|e| e.total_group_type().factors().to_vec())
            .collect();
        totals.sort();
        assert_eq!(totals, vec![vec![2, 2], vec![4]]);

        let m = cm(2, 4, 2);
        let psi = GroupHom::identity(m.pi0());
        let r = classify_extensions(&m, &z(2), &psi).unwrap();
        let ClassificationResult::Classes {
            representatives, ..
        } = r
        else {
            panic!("obstructed")
        };
        assert_eq!(representatives.len(), 1);
        assert_eq!(representatives[0].total_group_type().factors(), &[4]);
        let pb = pullback_extension(&canonical_extension(&m).unwrap(), &psi).unwrap();
        assert!(are_equivalent(&pb, &representatives[0]).unwrap().is_some());
    }

    #[test]
    fn pullback_requires_mono() {
        let m = cm(2, 2, 0);
        assert!(matches!(canonical_extension(&m), Err(Error::NotMono)));
    }

    #[test]
    fn functor_round_trip() {
        let m = cm(2, 2, 0);
        let f = Cochain2::from_entries(&z(2), &z(2), [(&e(1), &e(1), &e(1))]).unwrap();
        let tw = Extension::new(&m, f, vec![e(0), e(1)]).unwrap();
        let functor = functor_of_extension(&tw).unwrap();
        assert_eq!(functor.tilde(&e(1), &e(1)), &e(1));
        assert_eq!(extension_of_functor(&functor).unwrap(), tw);
    }
}
