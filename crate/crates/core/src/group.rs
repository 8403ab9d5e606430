//! Finite abelian groups as direct sums of cyclic groups.

use std::fmt;

use crate::error::{size_guard, Error, Result};
use crate::snf::canonical_factors;

/// Largest group order any element-enumerating operation will accept.
pub const MAX_ENUM_ORDER: u64 = 4096;

/// An element, as residues in generator coordinates. Ordering is
/// lexicographic in those coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Element(pub Vec<i64>);

impl Element {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl From<Vec<i64>> for Element {
    fn from(v: Vec<i64>) -> Self {
        Element(v)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// `Z/n_0 + Z/n_1 + ...`.
///
/// Groups built with [`FinAbGroup::new`] are in invariant-factor form
/// (`n_i >= 2`, `n_i | n_{i+1}`), so two such groups are isomorphic exactly
/// when they compare equal. [`FinAbGroup::direct_sum`] keeps an arbitrary
/// cyclic decomposition; it is used for cochain spaces whose coordinates are
/// table entries.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct FinAbGroup {
    moduli: Vec<i64>,
}

impl FinAbGroup {
    pub fn new(factors: &[i64]) -> Result<Self> {
        if let Some(&bad) = factors.iter().find(|&&n| n < 1) {
            return Err(Error::InvalidGroup(format!(
                "cyclic factor {bad} must be a positive integer"
            )));
        }
        Ok(Self {
            moduli: canonical_factors(factors),
        })
    }

    pub fn trivial() -> Self {
        Self { moduli: Vec::new() }
    }

    pub fn cyclic(n: i64) -> Self {
        Self::new(&[n]).expect("cyclic order must be positive")
    }

    /// The direct sum with exactly this decomposition (units dropped).
    pub fn direct_sum(moduli: &[i64]) -> Self {
        assert!(moduli.iter().all(|&m| m >= 1));
        Self {
            moduli: moduli.iter().copied().filter(|&m| m > 1).collect(),
        }
    }

    /// `self` repeated `times` times.
    pub fn power(&self, times: usize) -> Self {
        let mut moduli = Vec::with_capacity(self.moduli.len() * times);
        for _ in 0..times {
            moduli.extend_from_slice(&self.moduli);
        }
        Self { moduli }
    }

    pub fn factors(&self) -> &[i64] {
        &self.moduli
    }

    /// Number of cyclic generators.
    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.moduli.is_empty()
    }

    pub fn is_canonical(&self) -> bool {
        self.moduli.iter().all(|&m| m >= 2) && self.moduli.windows(2).all(|w| w[1] % w[0] == 0)
    }

    /// The invariant-factor form of this group.
    pub fn canonical(&self) -> Self {
        Self {
            moduli: canonical_factors(&self.moduli),
        }
    }

    /// Group order, or `None` if it does not fit in `u64`.
    pub fn order_checked(&self) -> Option<u64> {
        self.moduli
            .iter()
            .try_fold(1u64, |acc, &m| acc.checked_mul(m as u64))
    }

    /// Group order, saturating at `u64::MAX`.
    pub fn order(&self) -> u64 {
        self.order_checked().unwrap_or(u64::MAX)
    }

    /// Exponent (lcm of the factors).
    pub fn exponent(&self) -> i64 {
        use num_integer::Integer;
        self.moduli.iter().fold(1i64, |acc, &m| acc.lcm(&m))
    }

    pub fn zero(&self) -> Element {
        Element(vec![0; self.moduli.len()])
    }

    pub fn generator(&self, i: usize) -> Element {
        let mut e = self.zero();
        e.0[i] = 1;
        e
    }

    /// Reduces arbitrary integer coordinates into the canonical residues.
    pub fn reduce(&self, coords: &[i64]) -> Element {
        assert_eq!(coords.len(), self.moduli.len(), "coordinate count mismatch");
        Element(
            coords
                .iter()
                .zip(&self.moduli)
                .map(|(&c, &m)| c.rem_euclid(m))
                .collect(),
        )
    }

    pub fn contains(&self, x: &Element) -> bool {
        x.0.len() == self.moduli.len()
            && x.0
                .iter()
                .zip(&self.moduli)
                .all(|(&c, &m)| (0..m).contains(&c))
    }

    /// Validates user coordinates.
    pub fn element(&self, coords: &[i64]) -> Result<Element> {
        let e = Element(coords.to_vec());
        if self.contains(&e) {
            Ok(e)
        } else {
            Err(Error::InvalidElement(format!(
                "{e} is not a reduced element of {self}"
            )))
        }
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        Element(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.moduli)
                .map(|((&x, &y), &m)| (x + y) % m)
                .collect(),
        )
    }

    pub fn neg(&self, a: &Element) -> Element {
        Element(
            a.0.iter()
                .zip(&self.moduli)
                .map(|(&x, &m)| (m - x) % m)
                .collect(),
        )
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Element {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, k: i64, a: &Element) -> Element {
        Element(
            a.0.iter()
                .zip(&self.moduli)
                .map(|(&x, &m)| ((k as i128 * x as i128).rem_euclid(m as i128)) as i64)
                .collect(),
        )
    }

    /// Order of a single element.
    pub fn element_order(&self, a: &Element) -> i64 {
        use num_integer::Integer;
        a.0.iter()
            .zip(&self.moduli)
            .fold(1i64, |acc, (&x, &m)| acc.lcm(&(m / x.gcd(&m))))
    }

    /// Position of `x` in the lexicographic enumeration.
    pub fn index_of(&self, x: &Element) -> usize {
        x.0.iter()
            .zip(&self.moduli)
            .fold(0usize, |acc, (&c, &m)| acc * m as usize + c as usize)
    }

    pub fn element_at(&self, mut idx: usize) -> Element {
        let mut coords = vec![0i64; self.moduli.len()];
        for i in (0..self.moduli.len()).rev() {
            let m = self.moduli[i] as usize;
            coords[i] = (idx % m) as i64;
            idx /= m;
        }
        Element(coords)
    }

    /// All elements in lexicographic order; refuses orders above
    /// [`MAX_ENUM_ORDER`].
    pub fn elements(&self) -> Result<Vec<Element>> {
        self.elements_bounded(MAX_ENUM_ORDER)
    }

    pub fn elements_bounded(&self, limit: u64) -> Result<Vec<Element>> {
        size_guard(&format!("group {self}"), self.order(), limit)?;
        Ok((0..self.order() as usize)
            .map(|i| self.element_at(i))
            .collect())
    }

    /// Addition table over the lexicographic enumeration.
    pub fn cayley(&self) -> Result<Cayley> {
        Cayley::new(self)
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.moduli.is_empty() {
            return write!(f, "0");
        }
        for (i, m) in self.moduli.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "Z/{m}")?;
        }
        Ok(())
    }
}

/// Enumerated group with index-level addition and negation.
#[derive(Clone, Debug)]
pub struct Cayley {
    pub elements: Vec<Element>,
    sum: Vec<usize>,
    neg: Vec<usize>,
}

impl Cayley {
    pub fn new(g: &FinAbGroup) -> Result<Self> {
        let elements = g.elements()?;
        let n = elements.len();
        let mut sum = vec![0usize; n * n];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                sum[i * n + j] = g.index_of(&g.add(a, b));
            }
        }
        let neg = elements.iter().map(|a| g.index_of(&g.neg(a))).collect();
        Ok(Self { elements, sum, neg })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn add(&self, i: usize, j: usize) -> usize {
        self.sum[i * self.elements.len() + j]
    }

    pub fn neg(&self, i: usize) -> usize {
        self.neg[i]
    }

    pub fn sub(&self, i: usize, j: usize) -> usize {
        self.add(i, self.neg[j])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let g = FinAbGroup::new(&[2, 3, 1]).unwrap();
        assert_eq!(g.factors(), &[6]);
        assert!(g.is_canonical());
        assert_eq!(FinAbGroup::new(&[4, 2]).unwrap().factors(), &[2, 4]);
        assert_eq!(FinAbGroup::new(&[]).unwrap(), FinAbGroup::trivial());
        assert_eq!(FinAbGroup::trivial().order(), 1);
        assert!(FinAbGroup::new(&[0]).is_err());
        assert!(FinAbGroup::new(&[-3]).is_err());
    }

    #[test]
    fn order_matches_enumeration() {
        for f in [vec![], vec![2], vec![2, 4], vec![3, 6], vec![2, 2, 2]] {
            let g = FinAbGroup::new(&f).unwrap();
            let elems = g.elements().unwrap();
            assert_eq!(elems.len() as u64, g.order());
            let mut sorted = elems.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted, elems);
            for (i, e) in elems.iter().enumerate() {
                assert_eq!(g.index_of(e), i);
            }
        }
    }

    #[test]
    fn group_laws() {
        let g = FinAbGroup::new(&[2, 6]).unwrap();
        let elems = g.elements().unwrap();
        for a in &elems {
            assert_eq!(g.add(a, &g.neg(a)), g.zero());
            assert_eq!(g.add(a, &g.zero()), *a);
            for b in &elems {
                assert_eq!(g.add(a, b), g.add(b, a));
            }
        }
        assert_eq!(g.element_order(&Element(vec![1, 2])), 6);
    }

    #[test]
    fn enumeration_guard() {
        let big = FinAbGroup::new(&[64, 128]).unwrap();
        assert!(matches!(big.elements(), Err(Error::SizeExceeded { .. })));
    }
}
