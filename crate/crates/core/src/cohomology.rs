//! `Z^n_s`, `B^n_s` and `H^n_s` for `n = 2, 3` by integer linear algebra.
//!
//! Cochains are points of `N^k`, one copy of `N` per free table entry. The
//! cocycle conditions and the coboundary are integer-coefficient linear forms
//! in those entries, so both become [`GroupHom`]s and the cohomology is a
//! cokernel.

use std::collections::BTreeMap;
use std::marker::PhantomData;

use crate::cochain::{nonzero_tuples, Cochain1, Cochain2, Cochain3, Violation, MAX_COCHAIN_ORDER};
use crate::error::{size_guard, Error, Result};
use crate::group::{Cayley, Element, FinAbGroup};
use crate::hom::GroupHom;
use crate::lattice::Hermite;

/// Largest number of free `N`-coordinates a cochain space may have.
pub const MAX_FREE_COORDS: u64 = 1500;

type Form = BTreeMap<usize, i64>;

fn push(form: &mut Form, var: Option<usize>, c: i64) {
    if let Some(v) = var {
        *form.entry(v).or_insert(0) += c;
    }
}

/// Variable numbering for free entries of arity `a` over `s` elements.
#[derive(Clone, Copy)]
struct Vars {
    k: usize,
    offset: usize,
}

impl Vars {
    fn at(&self, args: &[usize]) -> Option<usize> {
        let mut idx = 0;
        for &a in args {
            if a == 0 {
                return None;
            }
            idx = idx * self.k + (a - 1);
        }
        Some(self.offset + idx)
    }
}

/// A degree of symmetric cochain that has a cohomology group here.
pub trait SymCocycle: Sized + Clone {
    type Lower: Clone;
    const DEGREE: u32;

    fn source(&self) -> &FinAbGroup;
    fn target(&self) -> &FinAbGroup;
    fn check(&self) -> std::result::Result<(), Violation>;
    fn coords(&self) -> Element;
    fn from_coords(m: &FinAbGroup, n: &FinAbGroup, c: &Element) -> Result<Self>;
    fn lower_coords(l: &Self::Lower) -> Element;
    fn lower_from_coords(m: &FinAbGroup, n: &FinAbGroup, c: &Element) -> Result<Self::Lower>;

    /// Number of free entries of this degree and of the one below.
    fn var_counts(s: usize) -> (usize, usize);
    /// Linear forms whose common zero set is the cocycle group.
    fn condition_forms(cay: &Cayley) -> Vec<Form>;
    /// One form per free entry of the target, over the lower free entries.
    fn coboundary_forms(cay: &Cayley) -> Vec<Form>;
}

impl SymCocycle for Cochain2 {
    type Lower = Cochain1;
    const DEGREE: u32 = 2;

    fn source(&self) -> &FinAbGroup {
        Cochain2::source(self)
    }
    fn target(&self) -> &FinAbGroup {
        Cochain2::target(self)
    }
    fn check(&self) -> std::result::Result<(), Violation> {
        self.check_sym_2cocycle()
    }
    fn coords(&self) -> Element {
        self.to_coords()
    }
    fn from_coords(m: &FinAbGroup, n: &FinAbGroup, c: &Element) -> Result<Self> {
        Cochain2::from_coords(m, n, c)
    }
    fn lower_coords(l: &Cochain1) -> Element {
        l.to_coords()
    }
    fn lower_from_coords(m: &FinAbGroup, n: &FinAbGroup, c: &Element) -> Result<Cochain1> {
        Cochain1::from_coords(m, n, c)
    }

    fn var_counts(s: usize) -> (usize, usize) {
        let k = s.saturating_sub(1);
        (k * k, k)
    }

    fn condition_forms(cay: &Cayley) -> Vec<Form> {
        let s = cay.len();
        let f = Vars {
            k: s - 1,
            offset: 0,
        };
        let mut out = Vec::new();
        for u in 1..s {
            for v in 1..s {
                for t in 1..s {
                    let mut form = Form::new();
                    push(&mut form, f.at(&[v, t]), 1);
                    push(&mut form, f.at(&[u, cay.add(v, t)]), 1);
                    push(&mut form, f.at(&[u, v]), -1);
                    push(&mut form, f.at(&[cay.add(u, v), t]), -1);
                    out.push(form);
                }
            }
        }
        for u in 1..s {
            for v in u + 1..s {
                let mut form = Form::new();
                push(&mut form, f.at(&[u, v]), 1);
                push(&mut form, f.at(&[v, u]), -1);
                out.push(form);
            }
        }
        out
    }

    fn coboundary_forms(cay: &Cayley) -> Vec<Form> {
        let s = cay.len();
        let g = Vars {
            k: s - 1,
            offset: 0,
        };
        nonzero_tuples(s, 2)
            .into_iter()
            .map(|t| {
                let (u, v) = (t[0], t[1]);
                let mut form = Form::new();
                push(&mut form, g.at(&[u]), 1);
                push(&mut form, g.at(&[v]), 1);
                push(&mut form, g.at(&[cay.add(u, v)]), -1);
                form
            })
            .collect()
    }
}

impl SymCocycle for Cochain3 {
    type Lower = Cochain2;
    const DEGREE: u32 = 3;

    fn source(&self) -> &FinAbGroup {
        Cochain3::source(self)
    }
    fn target(&self) -> &FinAbGroup {
        Cochain3::target(self)
    }
    fn check(&self) -> std::result::Result<(), Violation> {
        self.check_sym_3cocycle()
    }
    fn coords(&self) -> Element {
        self.to_coords()
    }
    fn from_coords(m: &FinAbGroup, n: &FinAbGroup, c: &Element) -> Result<Self> {
        Cochain3::from_coords(m, n, c)
    }
    fn lower_coords(l: &Cochain2) -> Element {
        l.to_coords()
    }
    fn lower_from_coords(m: &FinAbGroup, n: &FinAbGroup, c: &Element) -> Result<Cochain2> {
        Cochain2::from_coords(m, n, c)
    }

    fn var_counts(s: usize) -> (usize, usize) {
        let k = s.saturating_sub(1);
        (k * k * k + k * k, k * k)
    }

    fn condition_forms(cay: &Cayley) -> Vec<Form> {
        let s = cay.len();
        let k = s - 1;
        let xi = Vars { k, offset: 0 };
        let eta = Vars {
            k,
            offset: k * k * k,
        };
        let mut out = Vec::new();
        for x in 1..s {
            for y in 1..s {
                for z in 1..s {
                    for t in 1..s {
                        let mut form = Form::new();
                        push(&mut form, xi.at(&[y, z, t]), 1);
                        push(&mut form, xi.at(&[cay.add(x, y), z, t]), -1);
                        push(&mut form, xi.at(&[x, cay.add(y, z), t]), 1);
                        push(&mut form, xi.at(&[x, y, cay.add(z, t)]), -1);
                        push(&mut form, xi.at(&[x, y, z]), 1);
                        out.push(form);
                    }
                }
            }
        }
        for x in 1..s {
            for y in x..s {
                let mut form = Form::new();
                push(&mut form, eta.at(&[x, y]), 1);
                push(&mut form, eta.at(&[y, x]), 1);
                out.push(form);
            }
        }
        for x in 1..s {
            for y in 1..s {
                for z in 1..s {
                    let mut form = Form::new();
                    push(&mut form, xi.at(&[x, y, z]), 1);
                    push(&mut form, xi.at(&[y, x, z]), -1);
                    push(&mut form, xi.at(&[y, z, x]), 1);
                    push(&mut form, eta.at(&[x, cay.add(y, z)]), 1);
                    push(&mut form, eta.at(&[x, y]), -1);
                    push(&mut form, eta.at(&[x, z]), -1);
                    out.push(form);
                }
            }
        }
        out
    }

    fn coboundary_forms(cay: &Cayley) -> Vec<Form> {
        let s = cay.len();
        let g = Vars {
            k: s - 1,
            offset: 0,
        };
        let mut out = Vec::new();
        for t in nonzero_tuples(s, 3) {
            let (x, y, z) = (t[0], t[1], t[2]);
            let mut form = Form::new();
            push(&mut form, g.at(&[y, z]), 1);
            push(&mut form, g.at(&[cay.add(x, y), z]), -1);
            push(&mut form, g.at(&[x, cay.add(y, z)]), 1);
            push(&mut form, g.at(&[x, y]), -1);
            out.push(form);
        }
        for t in nonzero_tuples(s, 2) {
            let mut form = Form::new();
            push(&mut form, g.at(&[t[1], t[0]]), 1);
            push(&mut form, g.at(&[t[0], t[1]]), -1);
            out.push(form);
        }
        out
    }
}

/// The homomorphism `N^vars -> N^forms` given by integer forms.
fn forms_hom(n: &FinAbGroup, vars: usize, forms: &[Vec<i64>]) -> Result<GroupHom> {
    let r = n.rank();
    let dom = n.power(vars);
    let cod = n.power(forms.len());
    let mut matrix = vec![vec![0i64; vars * r]; forms.len() * r];
    for (f, coeffs) in forms.iter().enumerate() {
        for (v, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                for i in 0..r {
                    matrix[f * r + i][v * r + i] = c;
                }
            }
        }
    }
    GroupHom::new(&dom, &cod, matrix)
}

fn dense(form: &Form, vars: usize) -> Vec<i64> {
    let mut row = vec![0i64; vars];
    for (&v, &c) in form {
        row[v] += c;
    }
    row
}

/// Replaces a family of forms by a Hermite basis of their span modulo the
/// exponent of `N`; the common kernel in `N^vars` is unchanged.
fn reduce_forms(forms: &[Form], vars: usize, exponent: i64) -> Vec<Vec<i64>> {
    if exponent == 1 || vars == 0 {
        return Vec::new();
    }
    let h = Hermite::new(&vec![exponent; vars], forms.iter().map(|f| dense(f, vars)));
    h.rows()
        .iter()
        .filter(|r| r.iter().any(|&c| c != 0 && c != exponent))
        .cloned()
        .collect()
}

/// `H^n_s(M, N)` together with the maps needed to classify cocycles.
#[derive(Clone, Debug)]
pub struct SymCohomology<C: SymCocycle> {
    m: FinAbGroup,
    n: FinAbGroup,
    cocycles: FinAbGroup,
    z_incl: GroupHom,
    delta: GroupHom,
    group: FinAbGroup,
    proj: GroupHom,
    boundaries: Hermite,
    _kind: PhantomData<C>,
}

pub type H2 = SymCohomology<Cochain2>;
pub type H3 = SymCohomology<Cochain3>;

impl<C: SymCocycle> SymCohomology<C> {
    pub fn new(m: &FinAbGroup, n: &FinAbGroup) -> Result<Self> {
        size_guard(
            &format!("cohomology source {m}"),
            m.order(),
            MAX_COCHAIN_ORDER,
        )?;
        let s = m.order() as usize;
        let (vars, lower) = C::var_counts(s);
        size_guard(
            "free cochain coordinates",
            ((vars + lower) * n.rank()) as u64,
            MAX_FREE_COORDS,
        )?;
        let cay = m.cayley()?;
        let (cond_forms, delta_forms) = if s > 1 {
            (C::condition_forms(&cay), C::coboundary_forms(&cay))
        } else {
            (Vec::new(), Vec::new())
        };

        let cond = forms_hom(n, vars, &reduce_forms(&cond_forms, vars, n.exponent()))?;
        let (cocycles, z_incl) = cond.kernel();

        let delta_rows: Vec<Vec<i64>> = delta_forms.iter().map(|f| dense(f, lower)).collect();
        let delta = forms_hom(n, lower, &delta_rows)?;

        let lifts: Vec<Element> = (0..delta.dom().rank())
            .map(|j| {
                z_incl
                    .solve_preimage(&delta.column(j))
                    .expect("coboundaries are cocycles")
            })
            .collect();
        let delta_z = GroupHom::from_images(delta.dom(), &cocycles, &lifts)?;
        let (group, proj) = delta_z.cokernel();
        let boundaries = delta.image_hermite();
        Ok(Self {
            m: m.clone(),
            n: n.clone(),
            cocycles,
            z_incl,
            delta,
            group,
            proj,
            boundaries,
            _kind: PhantomData,
        })
    }

    pub fn degree(&self) -> u32 {
        C::DEGREE
    }

    pub fn source(&self) -> &FinAbGroup {
        &self.m
    }

    pub fn target(&self) -> &FinAbGroup {
        &self.n
    }

    /// The cohomology group itself.
    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }

    /// `Z^n_s` in invariant-factor form.
    pub fn cocycle_group(&self) -> &FinAbGroup {
        &self.cocycles
    }

    /// The coboundary as a map of free coordinates.
    pub fn coboundary_map(&self) -> &GroupHom {
        &self.delta
    }

    fn check_shape(&self, k: &C) -> Result<()> {
        if k.source() != &self.m || k.target() != &self.n {
            return Err(Error::DomainMismatch(format!(
                "cochain over ({}, {}) classified in H^{}_s({}, {})",
                k.source(),
                k.target(),
                C::DEGREE,
                self.m,
                self.n
            )));
        }
        Ok(())
    }

    /// Class of a cocycle given by free coordinates.
    pub fn classify_coords(&self, coords: &Element) -> Result<Element> {
        let z = self.z_incl.solve_preimage(coords).ok_or_else(|| {
            Error::NotACocycle("coordinates do not satisfy the cocycle conditions".into())
        })?;
        Ok(self.proj.apply(&z))
    }

    pub fn class_of(&self, k: &C) -> Result<Element> {
        self.check_shape(k)?;
        k.check().map_err(|v| Error::NotACocycle(v.to_string()))?;
        self.classify_coords(&k.coords())
    }

    /// Least cochain `g` with `δg = k`, if `k` is a coboundary.
    pub fn coboundary_witness(&self, k: &C) -> Result<Option<C::Lower>> {
        self.check_shape(k)?;
        k.check().map_err(|v| Error::NotACocycle(v.to_string()))?;
        match self.delta.solve_preimage(&k.coords()) {
            Some(g) => Ok(Some(C::lower_from_coords(&self.m, &self.n, &g)?)),
            None => Ok(None),
        }
    }

    /// Least `g` with `δg = k - k'`, if the two are cohomologous.
    pub fn is_cohomologous(&self, k: &C, other: &C) -> Result<Option<C::Lower>> {
        self.check_shape(k)?;
        self.check_shape(other)?;
        k.check().map_err(|v| Error::NotACocycle(v.to_string()))?;
        other
            .check()
            .map_err(|v| Error::NotACocycle(v.to_string()))?;
        let diff = self.delta.cod().sub(&k.coords(), &other.coords());
        match self.delta.solve_preimage(&diff) {
            Some(g) => Ok(Some(C::lower_from_coords(&self.m, &self.n, &g)?)),
            None => Ok(None),
        }
    }

    /// Lexicographically least cocycle (in free coordinates) of a class.
    pub fn representative(&self, class: &Element) -> Result<C> {
        if !self.group.contains(class) {
            return Err(Error::InvalidElement(format!(
                "{class} is not in {}",
                self.group
            )));
        }
        let z = self
            .proj
            .solve_preimage(class)
            .expect("projection is surjective");
        let x = self.z_incl.apply(&z);
        C::from_coords(&self.m, &self.n, &Element(self.boundaries.lexmin(&x.0)))
    }

    /// One representative per generator of the group.
    pub fn representatives(&self) -> Result<Vec<C>> {
        (0..self.group.rank())
            .map(|i| self.representative(&self.group.generator(i)))
            .collect()
    }

    /// Every class with its least representative, in class order.
    pub fn all_classes(&self) -> Result<Vec<(Element, C)>> {
        self.group
            .elements()?
            .into_iter()
            .map(|h| {
                let r = self.representative(&h)?;
                Ok((h, r))
            })
            .collect()
    }
}

/// Order of `H^degree_s(M, N)` for a runtime degree.
pub fn sym_cohomology_group(degree: u32, m: &FinAbGroup, n: &FinAbGroup) -> Result<FinAbGroup> {
    match degree {
        2 => Ok(H2::new(m, n)?.group().clone()),
        3 => Ok(H3::new(m, n)?.group().clone()),
        d => Err(Error::InvalidGroup(format!(
            "symmetric cohomology of degree {d} is not supported"
        ))),
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

    #[test]
    fn h2_examples() {
        let h = H2::new(&z(2), &z(2)).unwrap();
        assert_eq!(h.group().factors(), &[2]);
        let f = Cochain2::from_entries(&z(2), &z(2), [(&e(1), &e(1), &e(1))]).unwrap();
        assert_eq!(h.representatives().unwrap(), vec![f.clone()]);
        assert_ne!(h.class_of(&f).unwrap(), e(0));
        assert!(H2::new(&z(2), &z(3)).unwrap().group().is_trivial());
        assert_eq!(H2::new(&z(4), &z(2)).unwrap().group().factors(), &[2]);
    }

    #[test]
    fn h2_cyclic_gcd() {
        use num_integer::Integer;
        for a in [2i64, 3, 4, 6] {
            for b in [2i64, 3, 4, 6] {
                let h = H2::new(&z(a), &z(b)).unwrap();
                assert_eq!(h.order() as i64, a.gcd(&b), "({a},{b})");
            }
        }
    }

    #[test]
    fn h3_z2_z2_eta_class() {
        let h = H3::new(&z(2), &z(2)).unwrap();
        let k =
            Cochain3::from_fns(&z(2), &z(2), |_, _, _| e(0), |x, y| e(x.0[0] * y.0[0])).unwrap();
        assert_ne!(h.class_of(&k).unwrap(), h.group().zero());
        assert!(h.coboundary_witness(&k).unwrap().is_none());
    }

    #[test]
    fn coboundaries_classify_to_zero() {
        let h = H3::new(&z(3), &z(3)).unwrap();
        let g =
            Cochain2::from_entries(&z(3), &z(3), [(&e(1), &e(2), &e(2)), (&e(2), &e(2), &e(1))])
                .unwrap();
        let k = g.coboundary();
        assert_eq!(h.class_of(&k).unwrap(), h.group().zero());
        let w = h.coboundary_witness(&k).unwrap().unwrap();
        assert_eq!(w.coboundary(), k);
        let zero = Cochain3::zero(&z(3), &z(3)).unwrap();
        assert_eq!(
            h.is_cohomologous(&k, &k).unwrap().unwrap(),
            Cochain2::zero(&z(3), &z(3)).unwrap()
        );
        assert!(h.is_cohomologous(&k, &zero).unwrap().is_some());
    }

    #[test]
    fn non_cocycle_rejected() {
        let h = H2::new(&z(3), &z(3)).unwrap();
        let f = Cochain2::from_entries(&z(3), &z(3), [(&e(1), &e(2), &e(1))]).unwrap();
        assert!(matches!(h.class_of(&f), Err(Error::NotACocycle(_))));
    }

    #[test]
    fn trivial_groups() {
        let t = FinAbGroup::trivial();
        assert!(H2::new(&t, &z(4)).unwrap().group().is_trivial());
        assert!(H3::new(&z(4), &t).unwrap().group().is_trivial());
    }

    #[test]
    fn representatives_classify_to_unit_vectors() {
        for (a, b) in [(2, 4), (4, 2), (2, 2)] {
            let h = H3::new(&z(a), &z(b)).unwrap();
            for (i, r) in h.representatives().unwrap().iter().enumerate() {
                assert_eq!(h.class_of(r).unwrap(), h.group().generator(i));
            }
        }
    }
}
