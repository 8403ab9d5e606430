//! Affine systems over finite abelian groups.
//!
//! Unknowns `x_0, ..., x_{k-1}` all live in one group `G`. Each equation
//! says `Σ h_j(x_j) = rhs` in its own target group, with each `h_j` either
//! an integer multiple of the identity or a homomorphism out of `G`.

use crate::error::{Error, Result};
use crate::group::{Element, FinAbGroup};
use crate::hom::GroupHom;

struct Equation {
    target: FinAbGroup,
    // (unknown, matrix with target-rank rows and G-rank columns)
    terms: Vec<(usize, Vec<Vec<i64>>)>,
    rhs: Element,
}

pub struct AffineSystem {
    unknown: FinAbGroup,
    count: usize,
    equations: Vec<Equation>,
    infeasible: bool,
}

impl AffineSystem {
    pub fn new(unknown: &FinAbGroup, count: usize) -> Self {
        Self {
            unknown: unknown.clone(),
            count,
            equations: Vec::new(),
            infeasible: false,
        }
    }

    fn push(
        &mut self,
        target: &FinAbGroup,
        terms: Vec<(usize, Vec<Vec<i64>>)>,
        rhs: Element,
    ) -> Result<()> {
        if !target.contains(&rhs) {
            return Err(Error::InvalidElement(format!("{rhs} is not in {target}")));
        }
        if let Some(&(j, _)) = terms.iter().find(|(j, _)| *j >= self.count) {
            return Err(Error::DomainMismatch(format!("unknown {j} out of range")));
        }
        if terms.is_empty() {
            if !rhs.is_zero() {
                self.infeasible = true;
            }
            return Ok(());
        }
        self.equations.push(Equation {
            target: target.clone(),
            terms,
            rhs,
        });
        Ok(())
    }

    /// `Σ c_j x_j = rhs` in the unknowns' own group.
    pub fn scalar_equation(&mut self, terms: &[(usize, i64)], rhs: Element) -> Result<()> {
        let r = self.unknown.rank();
        let mut merged: Vec<(usize, i64)> = Vec::new();
        for &(j, c) in terms {
            match merged.iter_mut().find(|(k, _)| *k == j) {
                Some(e) => e.1 += c,
                None => merged.push((j, c)),
            }
        }
        let mats = merged
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(j, c)| {
                let m = (0..r)
                    .map(|i| (0..r).map(|k| if i == k { c } else { 0 }).collect())
                    .collect();
                (j, m)
            })
            .collect();
        let target = self.unknown.clone();
        self.push(&target, mats, rhs)
    }

    /// `Σ h_j(x_j) = rhs` in `target`.
    pub fn hom_equation(
        &mut self,
        target: &FinAbGroup,
        terms: &[(usize, &GroupHom)],
        rhs: Element,
    ) -> Result<()> {
        let mut mats = Vec::new();
        for &(j, h) in terms {
            if h.dom() != &self.unknown || h.cod() != target {
                return Err(Error::DomainMismatch(
                    "equation map has the wrong shape".into(),
                ));
            }
            if !h.is_zero() {
                mats.push((j, h.matrix().to_vec()));
            }
        }
        self.push(target, mats, rhs)
    }

    /// The lexicographically least solution, if any.
    pub fn solve(&self) -> Result<Option<Vec<Element>>> {
        if self.infeasible {
            return Ok(None);
        }
        let r = self.unknown.rank();
        let dom = self.unknown.power(self.count);
        let mut moduli = Vec::new();
        let mut rhs = Vec::new();
        for e in &self.equations {
            moduli.extend_from_slice(e.target.factors());
            rhs.extend_from_slice(&e.rhs.0);
        }
        let cod = FinAbGroup::direct_sum(&moduli);
        let mut matrix = vec![vec![0i64; dom.rank()]; moduli.len()];
        let mut row0 = 0;
        for e in &self.equations {
            for (j, m) in &e.terms {
                for (i, mrow) in m.iter().enumerate() {
                    for (k, &c) in mrow.iter().enumerate() {
                        matrix[row0 + i][j * r + k] += c;
                    }
                }
            }
            row0 += e.target.rank();
        }
        let h = GroupHom::new(&dom, &cod, matrix)?;
        Ok(h.solve_preimage(&Element(rhs)).map(|x| {
            (0..self.count)
                .map(|j| Element(x.0[j * r..(j + 1) * r].to_vec()))
                .collect()
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_and_hom_equations() {
        let z4 = FinAbGroup::cyclic(4);
        let z2 = FinAbGroup::cyclic(2);
        let mut s = AffineSystem::new(&z4, 2);
        // x0 + x1 = 3, 2 x0 = 2
        s.scalar_equation(&[(0, 1), (1, 1)], Element(vec![3]))
            .unwrap();
        s.scalar_equation(&[(0, 2)], Element(vec![2])).unwrap();
        let x = s.solve().unwrap().unwrap();
        assert_eq!(x, vec![Element(vec![1]), Element(vec![2])]);

        let m = GroupHom::new(&z4, &z2, vec![vec![1]]).unwrap();
        s.hom_equation(&z2, &[(0, &m)], Element(vec![0])).unwrap();
        assert!(s.solve().unwrap().is_none());
    }

    #[test]
    fn empty_equation_with_nonzero_rhs_is_infeasible() {
        let z3 = FinAbGroup::cyclic(3);
        let mut s = AffineSystem::new(&z3, 1);
        s.scalar_equation(&[(0, 3)], Element(vec![1])).unwrap();
        assert!(s.solve().unwrap().is_none());
    }
}
