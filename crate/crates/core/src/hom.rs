//! Homomorphisms between finite abelian groups and their kernels, images and
//! cokernels.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{size_guard, Error, Result};
use crate::group::{Element, FinAbGroup, MAX_ENUM_ORDER};
use crate::lattice::{Hermite, HomEchelon};

/// An integer matrix with one column per domain generator and one row per
/// codomain generator; entry `(i, j)` is the coefficient of codomain
/// generator `i` in the image of domain generator `j`.
#[derive(Clone)]
pub struct GroupHom {
    dom: FinAbGroup,
    cod: FinAbGroup,
    matrix: Vec<Vec<i64>>,
    echelon: OnceLock<HomEchelon>,
}

impl PartialEq for GroupHom {
    fn eq(&self, other: &Self) -> bool {
        self.dom == other.dom && self.cod == other.cod && self.matrix == other.matrix
    }
}

impl Eq for GroupHom {}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GroupHom({} -> {}, {:?})",
            self.dom, self.cod, self.matrix
        )
    }
}

impl GroupHom {
    pub fn new(dom: &FinAbGroup, cod: &FinAbGroup, matrix: Vec<Vec<i64>>) -> Result<Self> {
        if matrix.len() != cod.rank() || matrix.iter().any(|r| r.len() != dom.rank()) {
            return Err(Error::DomainMismatch(format!(
                "matrix shape does not match {} generators -> {} generators",
                dom.rank(),
                cod.rank()
            )));
        }
        let (n, m) = (dom.factors(), cod.factors());
        let mut reduced = matrix;
        for (i, row) in reduced.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                if (n[j] as i128 * *v as i128).rem_euclid(m[i] as i128) != 0 {
                    return Err(Error::IllDefinedHom(format!(
                        "generator {j} of order {} maps to coefficient {} modulo {}",
                        n[j], v, m[i]
                    )));
                }
                *v = v.rem_euclid(m[i]);
            }
        }
        Ok(Self {
            dom: dom.clone(),
            cod: cod.clone(),
            matrix: reduced,
            echelon: OnceLock::new(),
        })
    }

    /// The homomorphism sending domain generator `j` to `images[j]`.
    pub fn from_images(dom: &FinAbGroup, cod: &FinAbGroup, images: &[Element]) -> Result<Self> {
        if images.len() != dom.rank() {
            return Err(Error::DomainMismatch(format!(
                "{} generator images given for {}",
                images.len(),
                dom
            )));
        }
        let matrix = (0..cod.rank())
            .map(|i| images.iter().map(|im| im.0[i]).collect())
            .collect();
        Self::new(dom, cod, matrix)
    }

    /// Builds the homomorphism agreeing with `f` on generators and checks
    /// that it agrees with `f` everywhere.
    pub fn from_fn<F: Fn(&Element) -> Element>(
        dom: &FinAbGroup,
        cod: &FinAbGroup,
        f: F,
    ) -> Result<Self> {
        let images: Vec<Element> = (0..dom.rank()).map(|j| f(&dom.generator(j))).collect();
        let h = Self::from_images(dom, cod, &images)?;
        for x in dom.elements()? {
            if h.apply(&x) != f(&x) {
                return Err(Error::IllDefinedHom(format!(
                    "map is not additive: value at {x} is not determined by generators"
                )));
            }
        }
        Ok(h)
    }

    pub fn identity(g: &FinAbGroup) -> Self {
        let k = g.rank();
        let matrix = (0..k)
            .map(|i| (0..k).map(|j| i64::from(i == j)).collect())
            .collect();
        Self::new(g, g, matrix).expect("identity is well defined")
    }

    pub fn zero(dom: &FinAbGroup, cod: &FinAbGroup) -> Self {
        Self::new(dom, cod, vec![vec![0; dom.rank()]; cod.rank()]).expect("zero is well defined")
    }

    pub fn dom(&self) -> &FinAbGroup {
        &self.dom
    }

    pub fn cod(&self) -> &FinAbGroup {
        &self.cod
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    /// Image of domain generator `j`.
    pub fn column(&self, j: usize) -> Element {
        Element(self.matrix.iter().map(|r| r[j]).collect())
    }

    pub fn apply(&self, x: &Element) -> Element {
        debug_assert_eq!(x.0.len(), self.dom.rank());
        let m = self.cod.factors();
        Element(
            self.matrix
                .iter()
                .zip(m)
                .map(|(row, &mi)| {
                    let s: i128 = row
                        .iter()
                        .zip(&x.0)
                        .map(|(&a, &b)| a as i128 * b as i128)
                        .sum();
                    s.rem_euclid(mi as i128) as i64
                })
                .collect(),
        )
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &GroupHom) -> Result<GroupHom> {
        if inner.cod != self.dom {
            return Err(Error::DomainMismatch(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.dom, self.cod, inner.dom, inner.cod
            )));
        }
        let images: Vec<Element> = (0..inner.dom.rank())
            .map(|j| self.apply(&inner.column(j)))
            .collect();
        GroupHom::from_images(&inner.dom, &self.cod, &images)
    }

    fn check_parallel(&self, other: &GroupHom) -> Result<()> {
        if self.dom != other.dom || self.cod != other.cod {
            return Err(Error::DomainMismatch(
                "homomorphisms have different domains or codomains".into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &GroupHom) -> Result<GroupHom> {
        self.check_parallel(other)?;
        let images: Vec<Element> = (0..self.dom.rank())
            .map(|j| self.cod.add(&self.column(j), &other.column(j)))
            .collect();
        GroupHom::from_images(&self.dom, &self.cod, &images)
    }

    pub fn neg(&self) -> GroupHom {
        let images: Vec<Element> = (0..self.dom.rank())
            .map(|j| self.cod.neg(&self.column(j)))
            .collect();
        GroupHom::from_images(&self.dom, &self.cod, &images).expect("negation is well defined")
    }

    pub fn sub(&self, other: &GroupHom) -> Result<GroupHom> {
        self.add(&other.neg())
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().flatten().all(|&v| v == 0)
    }

    fn echelon(&self) -> &HomEchelon {
        self.echelon.get_or_init(|| {
            let cols: Vec<Vec<i64>> = (0..self.dom.rank()).map(|j| self.column(j).0).collect();
            HomEchelon::new(self.cod.factors(), self.dom.factors(), &cols)
        })
    }

    /// The kernel as a subgroup of the domain.
    pub fn kernel_hermite(&self) -> Hermite {
        self.echelon().kernel()
    }

    /// The image as a subgroup of the codomain.
    pub fn image_hermite(&self) -> Hermite {
        self.echelon().image()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel_hermite()
            .rows()
            .iter()
            .enumerate()
            .all(|(i, r)| r[i] == self.dom.factors()[i])
    }

    pub fn is_surjective(&self) -> bool {
        self.image_hermite()
            .rows()
            .iter()
            .enumerate()
            .all(|(i, r)| r[i] == 1)
    }

    pub fn in_image(&self, y: &Element) -> bool {
        self.echelon().particular_solution(&y.0).is_some()
    }

    /// The lexicographically least `x` with `self(x) = y`, if any.
    pub fn solve_preimage(&self, y: &Element) -> Option<Element> {
        let x = self.echelon().particular_solution(&y.0)?;
        Some(Element(self.kernel_hermite().lexmin(&x)))
    }

    /// Elements of the image, in lexicographic order.
    pub fn image_elements(&self) -> Result<Vec<Element>> {
        let img = self.image_hermite();
        Ok(self
            .cod
            .elements()?
            .into_iter()
            .filter(|y| img.contains(&y.0))
            .collect())
    }

    /// The kernel in invariant-factor form with its inclusion.
    pub fn kernel(&self) -> (FinAbGroup, GroupHom) {
        let (kf, kgens) = self.kernel_hermite().subgroup_structure();
        let ker = FinAbGroup::direct_sum(&kf);
        let incl = GroupHom::from_images(
            &ker,
            &self.dom,
            &kgens.into_iter().map(Element).collect::<Vec<_>>(),
        )
        .expect("kernel inclusion is well defined");
        (ker, incl)
    }

    /// The cokernel in invariant-factor form with its projection.
    pub fn cokernel(&self) -> (FinAbGroup, GroupHom) {
        let (cf, proj) = self.image_hermite().quotient_structure();
        let coker = FinAbGroup::direct_sum(&cf);
        let p =
            GroupHom::new(&self.cod, &coker, proj).expect("cokernel projection is well defined");
        (coker, p)
    }

    pub fn exact_decomposition(&self) -> ExactDecomposition {
        let (ker, ker_incl) = self.kernel();
        let (imf, igens) = self.image_hermite().subgroup_structure();
        let img = FinAbGroup::direct_sum(&imf);
        let img_incl = GroupHom::from_images(
            &img,
            &self.cod,
            &igens.into_iter().map(Element).collect::<Vec<_>>(),
        )
        .expect("image inclusion is well defined");
        let (coker, coker_proj) = self.cokernel();
        ExactDecomposition {
            ker,
            ker_incl,
            img,
            img_incl,
            coker,
            coker_proj,
        }
    }
}

/// Kernel, image and cokernel of a homomorphism, each in invariant-factor
/// form, with their structure maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactDecomposition {
    pub ker: FinAbGroup,
    pub ker_incl: GroupHom,
    pub img: FinAbGroup,
    pub img_incl: GroupHom,
    pub coker: FinAbGroup,
    pub coker_proj: GroupHom,
}

impl ExactDecomposition {
    /// Least codomain representative of a cokernel class; maps 0 to 0.
    pub fn coker_section(&self, c: &Element) -> Element {
        self.coker_proj
            .solve_preimage(c)
            .expect("cokernel projection is surjective")
    }

    /// The section evaluated on every cokernel element, in enumeration order.
    pub fn coker_section_table(&self) -> Result<Vec<Element>> {
        Ok(self
            .coker
            .elements()?
            .iter()
            .map(|c| self.coker_section(c))
            .collect())
    }

    /// Coordinates of a kernel element (given in domain coordinates) in the
    /// kernel's own generators.
    pub fn ker_coords(&self, x: &Element) -> Option<Element> {
        let k = self.ker_incl.solve_preimage(x)?;
        Some(k)
    }
}

/// Checks exactness of `ker -> dom -> cod -> coker` by enumeration.
pub fn check_exactness(h: &GroupHom, dec: &ExactDecomposition) -> Result<()> {
    size_guard("domain", h.dom().order(), MAX_ENUM_ORDER)?;
    size_guard("codomain", h.cod().order(), MAX_ENUM_ORDER)?;
    let fail = |m: &str| Err(Error::DomainMismatch(m.to_string()));
    if !h.compose(&dec.ker_incl)?.is_zero() {
        return fail("h after kernel inclusion is not zero");
    }
    if !dec.coker_proj.compose(h)?.is_zero() {
        return fail("cokernel projection after h is not zero");
    }
    if h.dom().order() != dec.ker.order() * dec.img.order() {
        return fail("|dom| != |ker| |img|");
    }
    if h.cod().order() != dec.img.order() * dec.coker.order() {
        return fail("|cod| != |img| |coker|");
    }
    let kernel_elems: Vec<Element> = dec
        .ker
        .elements()?
        .iter()
        .map(|k| dec.ker_incl.apply(k))
        .collect();
    for x in h.dom().elements()? {
        if h.apply(&x).is_zero() != kernel_elems.contains(&x) {
            return fail("kernel inclusion does not hit the kernel");
        }
    }
    let image_elems: Vec<Element> = dec
        .img
        .elements()?
        .iter()
        .map(|k| dec.img_incl.apply(k))
        .collect();
    for y in h.cod().elements()? {
        let in_img = dec.coker_proj.apply(&y).is_zero();
        if in_img != image_elems.contains(&y) || in_img != h.in_image(&y) {
            return fail("image and cokernel disagree");
        }
    }
    for c in dec.coker.elements()? {
        if dec.coker_proj.apply(&dec.coker_section(&c)) != c {
            return fail("section is not a section");
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: i64) -> FinAbGroup {
        FinAbGroup::cyclic(n)
    }

    #[test]
    fn hom_new_examples() {
        assert!(GroupHom::new(&z(4), &z(2), vec![vec![1]]).is_ok());
        assert!(matches!(
            GroupHom::new(&z(2), &z(4), vec![vec![1]]),
            Err(Error::IllDefinedHom(_))
        ));
        let h = GroupHom::new(&z(2), &z(4), vec![vec![2]]).unwrap();
        assert_eq!(h.apply(&Element(vec![1])), Element(vec![2]));
        assert!(GroupHom::new(&z(2), &z(4), vec![vec![2, 0]]).is_err());
    }

    #[test]
    fn compose_examples() {
        let times2 = GroupHom::new(&z(2), &z(4), vec![vec![2]]).unwrap();
        let mod2 = GroupHom::new(&z(4), &z(2), vec![vec![1]]).unwrap();
        assert_eq!(GroupHom::identity(&z(4)).compose(&times2).unwrap(), times2);
        let c = mod2.compose(&times2).unwrap();
        for x in z(2).elements().unwrap() {
            assert!(c.apply(&x).is_zero());
        }
        assert!(c.is_zero());
        assert!(matches!(
            times2.compose(&times2),
            Err(Error::DomainMismatch(_))
        ));
    }

    #[test]
    fn decomposition_examples() {
        let mod2 = GroupHom::new(&z(4), &z(2), vec![vec![1]]).unwrap();
        let d = mod2.exact_decomposition();
        assert_eq!(d.ker.factors(), &[2]);
        assert_eq!(d.ker_incl.apply(&Element(vec![1])), Element(vec![2]));
        assert_eq!(d.img.factors(), &[2]);
        assert!(d.coker.is_trivial());
        check_exactness(&mod2, &d).unwrap();

        let times2 = GroupHom::new(&z(2), &z(4), vec![vec![2]]).unwrap();
        let d = times2.exact_decomposition();
        assert!(d.ker.is_trivial());
        assert_eq!(d.img.factors(), &[2]);
        assert_eq!(d.coker.factors(), &[2]);
        assert_eq!(d.coker_section(&Element(vec![1])), Element(vec![1]));
        assert_eq!(d.coker_section(&Element(vec![0])), Element(vec![0]));
        check_exactness(&times2, &d).unwrap();

        let zero = GroupHom::zero(&z(2), &z(2));
        let d = zero.exact_decomposition();
        assert_eq!(d.ker.factors(), &[2]);
        assert_eq!(d.coker.factors(), &[2]);
    }

    #[test]
    fn preimage_examples() {
        let mod2 = GroupHom::new(&z(4), &z(2), vec![vec![1]]).unwrap();
        assert_eq!(
            mod2.solve_preimage(&Element(vec![1])),
            Some(Element(vec![1]))
        );
        let times2 = GroupHom::new(&z(2), &z(4), vec![vec![2]]).unwrap();
        assert_eq!(times2.solve_preimage(&Element(vec![1])), None);
        assert_eq!(
            times2.solve_preimage(&Element(vec![0])),
            Some(Element(vec![0]))
        );
    }

    #[test]
    fn noncyclic_decomposition() {
        // Z/2 + Z/4 -> Z/4, (a, b) -> 2a + b
        let dom = FinAbGroup::new(&[2, 4]).unwrap();
        let h = GroupHom::new(&dom, &z(4), vec![vec![2, 1]]).unwrap();
        let d = h.exact_decomposition();
        assert_eq!(d.ker.order(), 2);
        assert!(d.coker.is_trivial());
        check_exactness(&h, &d).unwrap();
    }
}
