//! Abelian crossed modules `d: B -> D` and their morphisms.

use std::fmt;

use crate::cochain::Cochain2;
use crate::error::{Error, Result};
use crate::group::{Element, FinAbGroup};
use crate::hom::{ExactDecomposition, GroupHom};

/// A homomorphism `d: B -> D` of finite abelian groups, read as a crossed
/// module with trivial action.
#[derive(Clone)]
pub struct AbCrossedModule {
    d: GroupHom,
    dec: ExactDecomposition,
}

impl PartialEq for AbCrossedModule {
    fn eq(&self, other: &Self) -> bool {
        self.d == other.d
    }
}

impl Eq for AbCrossedModule {}

impl fmt::Debug for AbCrossedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AbCrossedModule({:?})", self.d)
    }
}

impl AbCrossedModule {
    pub fn new(d: GroupHom) -> Self {
        let dec = d.exact_decomposition();
        Self { d, dec }
    }

    pub fn from_matrix(b: &FinAbGroup, dgrp: &FinAbGroup, matrix: Vec<Vec<i64>>) -> Result<Self> {
        Ok(Self::new(GroupHom::new(b, dgrp, matrix)?))
    }

    /// `0 -> Q`.
    pub fn discrete(q: &FinAbGroup) -> Self {
        Self::new(GroupHom::zero(&FinAbGroup::trivial(), q))
    }

    pub fn b(&self) -> &FinAbGroup {
        self.d.dom()
    }

    pub fn d_group(&self) -> &FinAbGroup {
        self.d.cod()
    }

    pub fn d(&self) -> &GroupHom {
        &self.d
    }

    pub fn decomposition(&self) -> &ExactDecomposition {
        &self.dec
    }

    /// `π₀ = Coker d`.
    pub fn pi0(&self) -> &FinAbGroup {
        &self.dec.coker
    }

    /// `π₁ = Ker d`.
    pub fn pi1(&self) -> &FinAbGroup {
        &self.dec.ker
    }

    pub fn pi0_proj(&self) -> &GroupHom {
        &self.dec.coker_proj
    }

    pub fn pi1_incl(&self) -> &GroupHom {
        &self.dec.ker_incl
    }

    /// Least representative in `D` of a class in `π₀`.
    pub fn section(&self, s: &Element) -> Element {
        self.dec.coker_section(s)
    }

    /// `π₁`-coordinates of an element of `B` lying in `Ker d`.
    pub fn pi1_coords(&self, b: &Element) -> Option<Element> {
        self.dec.ker_incl.solve_preimage(b)
    }
}

/// `(B, D, d)` with a twisting table `g: π₀ x π₁ -> π₁`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedData {
    pub d: GroupHom,
    /// Row-major over the enumerations of `π₀` and `π₁`.
    pub g: Vec<Element>,
}

impl CrossedData {
    /// Checks normalization and biadditivity of `g`.
    pub fn validate(&self) -> Result<()> {
        let m = AbCrossedModule::new(self.d.clone());
        let (p0, p1) = (m.pi0().elements()?, m.pi1().elements()?);
        let (s0, s1) = (p0.len(), p1.len());
        if self.g.len() != s0 * s1 {
            return Err(Error::InvalidTwisting(format!(
                "table has {} entries, expected {}",
                self.g.len(),
                s0 * s1
            )));
        }
        let n = m.pi1();
        if let Some(v) = self.g.iter().find(|v| !n.contains(v)) {
            return Err(Error::InvalidTwisting(format!("value {v} is not in {n}")));
        }
        let at = |i: usize, j: usize| &self.g[i * s1 + j];
        for i in 0..s0 {
            for j in 0..s1 {
                for i2 in 0..s0 {
                    let si = m.pi0().index_of(&m.pi0().add(&p0[i], &p0[i2]));
                    if *at(si, j) != n.add(at(i, j), at(i2, j)) {
                        return Err(Error::InvalidTwisting(format!(
                            "g({}+{}, {}) is not additive in the first argument",
                            p0[i], p0[i2], p1[j]
                        )));
                    }
                }
                for j2 in 0..s1 {
                    let sj = n.index_of(&n.add(&p1[j], &p1[j2]));
                    if *at(i, sj) != n.add(at(i, j), at(i, j2)) {
                        return Err(Error::InvalidTwisting(format!(
                            "g({}, {}+{}) is not additive in the second argument",
                            p0[i], p1[j], p1[j2]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_abelian(&self) -> bool {
        self.g.iter().all(Element::is_zero)
    }

    pub fn to_abelian(&self) -> Result<AbCrossedModule> {
        self.validate()?;
        if !self.is_abelian() {
            return Err(Error::InvalidTwisting(
                "twisting is not identically zero".into(),
            ));
        }
        Ok(AbCrossedModule::new(self.d.clone()))
    }
}

impl From<&AbCrossedModule> for CrossedData {
    fn from(m: &AbCrossedModule) -> Self {
        let count = (m.pi0().order() * m.pi1().order()) as usize;
        CrossedData {
            d: m.d().clone(),
            g: vec![m.pi1().zero(); count],
        }
    }
}

/// `(f₁, f₀, φ): M -> M'` with `f₀ d = d' f₁` and `φ ∈ Z²_s(π₀M, π₁M')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbCrossMorphism {
    source: AbCrossedModule,
    target: AbCrossedModule,
    pub f1: GroupHom,
    pub f0: GroupHom,
    pub phi: Cochain2,
}

/// First failure of the morphism conditions, if any.
pub fn validate_morphism(
    source: &AbCrossedModule,
    target: &AbCrossedModule,
    f1: &GroupHom,
    f0: &GroupHom,
    phi: &Cochain2,
) -> Result<()> {
    if f1.dom() != source.b() || f1.cod() != target.b() {
        return Err(Error::InvalidMorphism("f1 is not a map B -> B'".into()));
    }
    if f0.dom() != source.d_group() || f0.cod() != target.d_group() {
        return Err(Error::InvalidMorphism("f0 is not a map D -> D'".into()));
    }
    if phi.source() != source.pi0() || phi.target() != target.pi1() {
        return Err(Error::InvalidMorphism(
            "phi is not a cochain over (π₀M, π₁M')".into(),
        ));
    }
    let lhs = f0.compose(source.d())?;
    let rhs = target.d().compose(f1)?;
    if lhs != rhs {
        let b = source
            .b()
            .elements()?
            .into_iter()
            .find(|b| lhs.apply(b) != rhs.apply(b))
            .expect("distinct homs differ somewhere");
        return Err(Error::InvalidMorphism(format!(
            "f0(d({b})) = {} but d'(f1({b})) = {}",
            lhs.apply(&b),
            rhs.apply(&b)
        )));
    }
    phi.check_sym_2cocycle()
        .map_err(|v| Error::InvalidMorphism(format!("phi is not a symmetric 2-cocycle: {v}")))
}

impl AbCrossMorphism {
    pub fn new(
        source: &AbCrossedModule,
        target: &AbCrossedModule,
        f1: GroupHom,
        f0: GroupHom,
        phi: Cochain2,
    ) -> Result<Self> {
        validate_morphism(source, target, &f1, &f0, &phi)?;
        Ok(Self {
            source: source.clone(),
            target: target.clone(),
            f1,
            f0,
            phi,
        })
    }

    /// `(f₁, f₀, 0)`.
    pub fn strict(
        source: &AbCrossedModule,
        target: &AbCrossedModule,
        f1: GroupHom,
        f0: GroupHom,
    ) -> Result<Self> {
        let phi = Cochain2::zero(source.pi0(), target.pi1())?;
        Self::new(source, target, f1, f0, phi)
    }

    pub fn identity(m: &AbCrossedModule) -> Result<Self> {
        Self::strict(
            m,
            m,
            GroupHom::identity(m.b()),
            GroupHom::identity(m.d_group()),
        )
    }

    pub fn source(&self) -> &AbCrossedModule {
        &self.source
    }

    pub fn target(&self) -> &AbCrossedModule {
        &self.target
    }

    /// Induced map `π₀M -> π₀M'`.
    pub fn pi0_map(&self) -> GroupHom {
        induced_pi0(&self.source, &self.target, &self.f0)
    }

    /// Induced map `π₁M -> π₁M'`.
    pub fn pi1_map(&self) -> GroupHom {
        induced_pi1(&self.source, &self.target, &self.f1)
    }
}

pub(crate) fn induced_pi0(
    source: &AbCrossedModule,
    target: &AbCrossedModule,
    f0: &GroupHom,
) -> GroupHom {
    let images: Vec<Element> = (0..source.pi0().rank())
        .map(|i| {
            let x = source.section(&source.pi0().generator(i));
            target.pi0_proj().apply(&f0.apply(&x))
        })
        .collect();
    GroupHom::from_images(source.pi0(), target.pi0(), &images).expect("f0 maps Im d into Im d'")
}

pub(crate) fn induced_pi1(
    source: &AbCrossedModule,
    target: &AbCrossedModule,
    f1: &GroupHom,
) -> GroupHom {
    let images: Vec<Element> = (0..source.pi1().rank())
        .map(|i| {
            let b = source.pi1_incl().apply(&source.pi1().generator(i));
            target
                .pi1_coords(&f1.apply(&b))
                .expect("f1 maps Ker d into Ker d'")
        })
        .collect();
    GroupHom::from_images(source.pi1(), target.pi1(), &images).expect("induced map is well defined")
}

/// `n ∘ m`, with `φ''(s,t) = π₁(n.f₁)(m.φ(s,t)) + n.φ(π₀(m.f₀)s, π₀(m.f₀)t)`.
pub fn compose_morphism(n: &AbCrossMorphism, m: &AbCrossMorphism) -> Result<AbCrossMorphism> {
    if m.target != n.source {
        return Err(Error::DomainMismatch("morphisms are not composable".into()));
    }
    let f1 = n.f1.compose(&m.f1)?;
    let f0 = n.f0.compose(&m.f0)?;
    let pushed = m.phi.pushforward(&n.pi1_map())?;
    let pulled = n.phi.pullback(&m.pi0_map())?;
    AbCrossMorphism::new(&m.source, &n.target, f1, f0, pushed.add(&pulled)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: i64) -> FinAbGroup {
        FinAbGroup::cyclic(n)
    }

    fn cm(a: i64, b: i64, k: i64) -> AbCrossedModule {
        AbCrossedModule::from_matrix(&z(a), &z(b), vec![vec![k]]).unwrap()
    }

    #[test]
    fn homotopy_groups() {
        let m = cm(4, 2, 1);
        assert!(m.pi0().is_trivial());
        assert_eq!(m.pi1().factors(), &[2]);
        let m = cm(2, 4, 2);
        assert_eq!(m.pi0().factors(), &[2]);
        assert!(m.pi1().is_trivial());
        let m = cm(3, 3, 1);
        assert!(m.pi0().is_trivial() && m.pi1().is_trivial());
    }

    #[test]
    fn crossed_data_examples() {
        let m = cm(2, 2, 0);
        let mut data = CrossedData::from(&m);
        assert!(data.is_abelian());
        assert_eq!(data.to_abelian().unwrap(), m);
        data.g = vec![
            Element(vec![0]),
            Element(vec![0]),
            Element(vec![0]),
            Element(vec![1]),
        ];
        data.validate().unwrap();
        assert!(!data.is_abelian());
        data.g[1] = Element(vec![1]);
        assert!(matches!(data.validate(), Err(Error::InvalidTwisting(_))));
        let mono = CrossedData::from(&cm(2, 4, 2));
        assert!(mono.g.iter().all(Element::is_zero));
    }

    #[test]
    fn morphism_validation() {
        let (m, mp) = (cm(4, 2, 1), cm(2, 4, 2));
        let f1 = GroupHom::new(&z(4), &z(2), vec![vec![1]]).unwrap();
        let f0 = GroupHom::new(&z(2), &z(4), vec![vec![2]]).unwrap();
        AbCrossMorphism::strict(&m, &mp, f1, f0).unwrap();
        let bad = GroupHom::zero(&z(2), &z(4));
        let f1 = GroupHom::new(&z(4), &z(2), vec![vec![1]]).unwrap();
        assert!(matches!(
            AbCrossMorphism::strict(&m, &mp, f1, bad),
            Err(Error::InvalidMorphism(_))
        ));
        let f = Cochain2::from_entries(m.pi0(), mp.pi1(), []).unwrap();
        AbCrossMorphism::new(
            &m,
            &mp,
            GroupHom::zero(&z(4), &z(2)),
            GroupHom::zero(&z(2), &z(4)),
            f,
        )
        .unwrap();
    }

    #[test]
    fn composition_adds_cocycles() {
        let m = cm(2, 2, 0);
        let e1 = Element(vec![1]);
        let phi = Cochain2::from_entries(m.pi0(), m.pi1(), [(&e1, &e1, &e1)]).unwrap();
        let id = AbCrossMorphism::identity(&m).unwrap();
        let a = AbCrossMorphism::new(&m, &m, id.f1.clone(), id.f0.clone(), phi.clone()).unwrap();
        let c = compose_morphism(&a, &a).unwrap();
        assert!(c.phi.is_zero());
        assert_eq!(compose_morphism(&a, &id).unwrap(), a);
        assert_eq!(compose_morphism(&id, &a).unwrap(), a);
    }
}
