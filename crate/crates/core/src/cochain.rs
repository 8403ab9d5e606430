//! Normalized cochains `M^k -> N` and the symmetric cocycle conditions.
//!
//! Tables are stored in full over the lexicographic enumeration of `M`.
//! Coordinates for linear algebra only use the free entries, the ones whose
//! arguments are all nonzero.

use std::fmt;

use crate::error::{size_guard, Error, Result};
use crate::group::{Element, FinAbGroup};
use crate::hom::GroupHom;

/// Largest `|M|` accepted for cochain tables.
pub const MAX_COCHAIN_ORDER: u64 = 64;

/// The first condition a candidate cocycle fails, with its arguments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub condition: &'static str,
    pub args: Vec<Element>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at (", self.condition)?;
        for (i, a) in self.args.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// `Σ c_i v_i` in `n`.
pub(crate) fn combo(n: &FinAbGroup, terms: &[(i64, &Element)]) -> Element {
    let mut acc = vec![0i128; n.rank()];
    for (c, v) in terms {
        for (a, &x) in acc.iter_mut().zip(&v.0) {
            *a += *c as i128 * x as i128;
        }
    }
    Element(
        acc.iter()
            .zip(n.factors())
            .map(|(&a, &m)| a.rem_euclid(m as i128) as i64)
            .collect(),
    )
}

fn check_order(m: &FinAbGroup) -> Result<usize> {
    size_guard(&format!("cochain source {m}"), m.order(), MAX_COCHAIN_ORDER)?;
    Ok(m.order() as usize)
}

fn check_values(n: &FinAbGroup, table: &[Element]) -> Result<()> {
    match table.iter().find(|v| !n.contains(v)) {
        Some(v) => Err(Error::InvalidElement(format!(
            "table value {v} is not in {n}"
        ))),
        None => Ok(()),
    }
}

fn free_count(size: usize, arity: u32) -> usize {
    size.saturating_sub(1).pow(arity)
}

/// Space of free-entry coordinates: one copy of `n` per entry with all
/// `arity` arguments nonzero.
pub fn cochain_space(m: &FinAbGroup, n: &FinAbGroup, arity: u32) -> FinAbGroup {
    n.power(free_count(m.order() as usize, arity))
}

fn flatten(values: impl Iterator<Item = Element>) -> Element {
    Element(values.flat_map(|e| e.0).collect())
}

fn unflatten(n: &FinAbGroup, coords: &Element, count: usize) -> Vec<Element> {
    let r = n.rank();
    assert_eq!(coords.0.len(), r * count, "coordinate length mismatch");
    (0..count)
        .map(|i| Element(coords.0[i * r..(i + 1) * r].to_vec()))
        .collect()
}

/// Index tuples over `0..size` with every entry nonzero, in lex order.
pub(crate) fn nonzero_tuples(size: usize, arity: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if size <= 1 {
        return out;
    }
    let mut t = vec![1usize; arity];
    loop {
        out.push(t.clone());
        let mut i = arity;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < size {
                break;
            }
            t[i] = 1;
        }
    }
}

/// A normalized 1-cochain `M -> N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain1 {
    m: FinAbGroup,
    n: FinAbGroup,
    table: Vec<Element>,
}

impl Cochain1 {
    pub fn from_table(m: &FinAbGroup, n: &FinAbGroup, table: Vec<Element>) -> Result<Self> {
        let size = check_order(m)?;
        if table.len() != size {
            return Err(Error::DomainMismatch(format!(
                "1-cochain table has {} entries, expected {size}",
                table.len()
            )));
        }
        check_values(n, &table)?;
        if !table[0].is_zero() {
            return Err(Error::NotNormalized("g(0) != 0".into()));
        }
        Ok(Self {
            m: m.clone(),
            n: n.clone(),
            table,
        })
    }

    pub fn from_fn<F: Fn(&Element) -> Element>(
        m: &FinAbGroup,
        n: &FinAbGroup,
        f: F,
    ) -> Result<Self> {
        check_order(m)?;
        let table = m.elements()?.iter().map(f).collect();
        Self::from_table(m, n, table)
    }

    pub fn zero(m: &FinAbGroup, n: &FinAbGroup) -> Result<Self> {
        Self::from_fn(m, n, |_| n.zero())
    }

    pub fn source(&self) -> &FinAbGroup {
        &self.m
    }

    pub fn target(&self) -> &FinAbGroup {
        &self.n
    }

    pub fn table(&self) -> &[Element] {
        &self.table
    }

    pub fn get(&self, x: &Element) -> &Element {
        &self.table[self.m.index_of(x)]
    }

    pub fn at(&self, i: usize) -> &Element {
        &self.table[i]
    }

    /// `(δg)(u, v) = g(u) + g(v) - g(u + v)`.
    pub fn coboundary(&self) -> Cochain2 {
        let cay = self.m.cayley().expect("guarded");
        let size = cay.len();
        let mut table = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                table.push(combo(
                    &self.n,
                    &[
                        (1, &self.table[i]),
                        (1, &self.table[j]),
                        (-1, &self.table[cay.add(i, j)]),
                    ],
                ));
            }
        }
        Cochain2 {
            m: self.m.clone(),
            n: self.n.clone(),
            table,
        }
    }

    pub fn to_coords(&self) -> Element {
        flatten(self.table.iter().skip(1).cloned())
    }

    pub fn from_coords(m: &FinAbGroup, n: &FinAbGroup, coords: &Element) -> Result<Self> {
        let size = check_order(m)?;
        let mut table = vec![n.zero()];
        table.extend(unflatten(n, coords, free_count(size, 1)));
        Self::from_table(m, n, table)
    }

    pub fn pullback(&self, phi: &GroupHom) -> Result<Cochain1> {
        if phi.cod() != &self.m {
            return Err(Error::DomainMismatch(
                "pullback map does not land in the source".into(),
            ));
        }
        Cochain1::from_fn(phi.dom(), &self.n, |x| self.get(&phi.apply(x)).clone())
    }

    pub fn pushforward(&self, h: &GroupHom) -> Result<Cochain1> {
        if h.dom() != &self.n {
            return Err(Error::DomainMismatch(
                "pushforward map does not start at the target".into(),
            ));
        }
        Cochain1::from_table(
            &self.m,
            h.cod(),
            self.table.iter().map(|v| h.apply(v)).collect(),
        )
    }
}

/// A normalized 2-cochain `M x M -> N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain2 {
    m: FinAbGroup,
    n: FinAbGroup,
    table: Vec<Element>,
}

impl Cochain2 {
    pub fn from_table(m: &FinAbGroup, n: &FinAbGroup, table: Vec<Element>) -> Result<Self> {
        let size = check_order(m)?;
        if table.len() != size * size {
            return Err(Error::DomainMismatch(format!(
                "2-cochain table has {} entries, expected {}",
                table.len(),
                size * size
            )));
        }
        check_values(n, &table)?;
        for i in 0..size {
            if !table[i].is_zero() || !table[i * size].is_zero() {
                let x = m.element_at(i);
                return Err(Error::NotNormalized(format!(
                    "value at a pair containing 0 and {x} is nonzero"
                )));
            }
        }
        Ok(Self {
            m: m.clone(),
            n: n.clone(),
            table,
        })
    }

    pub fn from_fn<F: Fn(&Element, &Element) -> Element>(
        m: &FinAbGroup,
        n: &FinAbGroup,
        f: F,
    ) -> Result<Self> {
        check_order(m)?;
        let elems = m.elements()?;
        let mut table = Vec::with_capacity(elems.len() * elems.len());
        for x in &elems {
            for y in &elems {
                table.push(f(x, y));
            }
        }
        Self::from_table(m, n, table)
    }

    /// Zero except at the listed entries.
    pub fn from_entries<'a, I>(m: &FinAbGroup, n: &FinAbGroup, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a Element, &'a Element, &'a Element)>,
    {
        let size = check_order(m)?;
        let mut table = vec![n.zero(); size * size];
        for (x, y, v) in entries {
            if !m.contains(x) || !m.contains(y) {
                return Err(Error::InvalidElement(format!(
                    "({x}, {y}) is not a pair in {m}"
                )));
            }
            table[m.index_of(x) * size + m.index_of(y)] = v.clone();
        }
        Self::from_table(m, n, table)
    }

    pub fn zero(m: &FinAbGroup, n: &FinAbGroup) -> Result<Self> {
        let size = check_order(m)?;
        Self::from_table(m, n, vec![n.zero(); size * size])
    }

    pub fn source(&self) -> &FinAbGroup {
        &self.m
    }

    pub fn target(&self) -> &FinAbGroup {
        &self.n
    }

    pub fn table(&self) -> &[Element] {
        &self.table
    }

    fn size(&self) -> usize {
        self.m.order() as usize
    }

    pub fn get(&self, x: &Element, y: &Element) -> &Element {
        &self.table[self.m.index_of(x) * self.size() + self.m.index_of(y)]
    }

    pub fn at(&self, i: usize, j: usize) -> &Element {
        &self.table[i * self.size() + j]
    }

    /// Nonzero entries as `(x, y, value)`, in lexicographic order.
    pub fn nonzero_entries(&self) -> Vec<(Element, Element, Element)> {
        let size = self.size();
        self.table
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| {
                (
                    self.m.element_at(k / size),
                    self.m.element_at(k % size),
                    v.clone(),
                )
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(Element::is_zero)
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.m != other.m || self.n != other.n {
            return Err(Error::DomainMismatch(
                "2-cochains over different groups".into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(Self {
            m: self.m.clone(),
            n: self.n.clone(),
            table: self
                .table
                .iter()
                .zip(&other.table)
                .map(|(a, b)| self.n.add(a, b))
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        Self {
            m: self.m.clone(),
            n: self.n.clone(),
            table: self.table.iter().map(|a| self.n.neg(a)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn transpose(&self) -> Self {
        let size = self.size();
        let mut table = self.table.clone();
        for i in 0..size {
            for j in 0..size {
                table[i * size + j] = self.table[j * size + i].clone();
            }
        }
        Self {
            m: self.m.clone(),
            n: self.n.clone(),
            table,
        }
    }

    /// The 2-cocycle identity `f(v,t) + f(u,v+t) = f(u,v) + f(u+v,t)`.
    pub fn check_2cocycle(&self) -> std::result::Result<(), Violation> {
        let cay = self.m.cayley().expect("guarded");
        let s = cay.len();
        for u in 0..s {
            for v in 0..s {
                for t in 0..s {
                    let lhs = self.n.add(self.at(v, t), self.at(u, cay.add(v, t)));
                    let rhs = self.n.add(self.at(u, v), self.at(cay.add(u, v), t));
                    if lhs != rhs {
                        return Err(Violation {
                            condition: "f(v,t)+f(u,v+t)=f(u,v)+f(u+v,t)",
                            args: vec![
                                cay.elements[u].clone(),
                                cay.elements[v].clone(),
                                cay.elements[t].clone(),
                            ],
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Symmetric 2-cocycle: the 2-cocycle identity plus `f(u,v) = f(v,u)`.
    pub fn check_sym_2cocycle(&self) -> std::result::Result<(), Violation> {
        self.check_2cocycle()?;
        let s = self.size();
        for u in 0..s {
            for v in 0..s {
                if self.at(u, v) != self.at(v, u) {
                    return Err(Violation {
                        condition: "f(u,v)=f(v,u)",
                        args: vec![self.m.element_at(u), self.m.element_at(v)],
                    });
                }
            }
        }
        Ok(())
    }

    pub fn is_sym_2cocycle(&self) -> bool {
        self.check_sym_2cocycle().is_ok()
    }

    /// `ξ = δg`, `η(x,y) = g(y,x) - g(x,y)`.
    pub fn coboundary(&self) -> Cochain3 {
        let cay = self.m.cayley().expect("guarded");
        let s = cay.len();
        let n = &self.n;
        let mut xi = Vec::with_capacity(s * s * s);
        for x in 0..s {
            for y in 0..s {
                for z in 0..s {
                    xi.push(combo(
                        n,
                        &[
                            (1, self.at(y, z)),
                            (-1, self.at(cay.add(x, y), z)),
                            (1, self.at(x, cay.add(y, z))),
                            (-1, self.at(x, y)),
                        ],
                    ));
                }
            }
        }
        let mut eta = Vec::with_capacity(s * s);
        for x in 0..s {
            for y in 0..s {
                eta.push(n.sub(self.at(y, x), self.at(x, y)));
            }
        }
        Cochain3 {
            m: self.m.clone(),
            n: self.n.clone(),
            xi,
            eta,
        }
    }

    pub fn to_coords(&self) -> Element {
        let s = self.size();
        flatten(
            nonzero_tuples(s, 2)
                .into_iter()
                .map(|t| self.at(t[0], t[1]).clone()),
        )
    }

    pub fn from_coords(m: &FinAbGroup, n: &FinAbGroup, coords: &Element) -> Result<Self> {
        let s = check_order(m)?;
        let vals = unflatten(n, coords, free_count(s, 2));
        let mut table = vec![n.zero(); s * s];
        for (t, v) in nonzero_tuples(s, 2).into_iter().zip(vals) {
            table[t[0] * s + t[1]] = v;
        }
        Self::from_table(m, n, table)
    }

    /// `(φ*f)(u, v) = f(φu, φv)` for `φ: Q -> M`.
    pub fn pullback(&self, phi: &GroupHom) -> Result<Cochain2> {
        if phi.cod() != &self.m {
            return Err(Error::DomainMismatch(
                "pullback map does not land in the source".into(),
            ));
        }
        let q = phi.dom();
        check_order(q)?;
        let images: Vec<usize> = q
            .elements()?
            .iter()
            .map(|x| self.m.index_of(&phi.apply(x)))
            .collect();
        let mut table = Vec::with_capacity(images.len() * images.len());
        for &a in &images {
            for &b in &images {
                table.push(self.at(a, b).clone());
            }
        }
        Cochain2::from_table(q, &self.n, table)
    }

    /// `(h_*f)(u, v) = h(f(u, v))` for `h: N -> N'`.
    pub fn pushforward(&self, h: &GroupHom) -> Result<Cochain2> {
        if h.dom() != &self.n {
            return Err(Error::DomainMismatch(
                "pushforward map does not start at the target".into(),
            ));
        }
        Cochain2::from_table(
            &self.m,
            h.cod(),
            self.table.iter().map(|v| h.apply(v)).collect(),
        )
    }
}

/// A pair `(ξ, η)` of tables `M^3 -> N` and `M^2 -> N`, with `ξ` normalized.
///
/// `η` is stored in full and not required to vanish on pairs containing 0;
/// the third symmetric condition forces that for cocycles.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain3 {
    m: FinAbGroup,
    n: FinAbGroup,
    xi: Vec<Element>,
    eta: Vec<Element>,
}

impl Cochain3 {
    pub fn from_tables(
        m: &FinAbGroup,
        n: &FinAbGroup,
        xi: Vec<Element>,
        eta: Vec<Element>,
    ) -> Result<Self> {
        let s = check_order(m)?;
        if xi.len() != s * s * s || eta.len() != s * s {
            return Err(Error::DomainMismatch(
                "3-cochain table sizes do not match |M|".into(),
            ));
        }
        check_values(n, &xi)?;
        check_values(n, &eta)?;
        for a in 0..s {
            for b in 0..s {
                if !xi[a * s + b].is_zero()
                    || !xi[a * s * s + b].is_zero()
                    || !xi[a * s * s + b * s].is_zero()
                {
                    return Err(Error::NotNormalized(
                        "xi is nonzero at a triple containing 0".into(),
                    ));
                }
            }
        }
        Ok(Self {
            m: m.clone(),
            n: n.clone(),
            xi,
            eta,
        })
    }

    pub fn from_fns<X, H>(m: &FinAbGroup, n: &FinAbGroup, xi: X, eta: H) -> Result<Self>
    where
        X: Fn(&Element, &Element, &Element) -> Element,
        H: Fn(&Element, &Element) -> Element,
    {
        check_order(m)?;
        let elems = m.elements()?;
        let mut xs = Vec::new();
        for x in &elems {
            for y in &elems {
                for z in &elems {
                    xs.push(xi(x, y, z));
                }
            }
        }
        let mut es = Vec::new();
        for x in &elems {
            for y in &elems {
                es.push(eta(x, y));
            }
        }
        Self::from_tables(m, n, xs, es)
    }

    pub fn zero(m: &FinAbGroup, n: &FinAbGroup) -> Result<Self> {
        let s = check_order(m)?;
        Self::from_tables(m, n, vec![n.zero(); s * s * s], vec![n.zero(); s * s])
    }

    pub fn source(&self) -> &FinAbGroup {
        &self.m
    }

    pub fn target(&self) -> &FinAbGroup {
        &self.n
    }

    pub fn xi_table(&self) -> &[Element] {
        &self.xi
    }

    pub fn eta_table(&self) -> &[Element] {
        &self.eta
    }

    fn size(&self) -> usize {
        self.m.order() as usize
    }

    pub fn xi_at(&self, a: usize, b: usize, c: usize) -> &Element {
        let s = self.size();
        &self.xi[(a * s + b) * s + c]
    }

    pub fn eta_at(&self, a: usize, b: usize) -> &Element {
        &self.eta[a * self.size() + b]
    }

    pub fn xi(&self, x: &Element, y: &Element, z: &Element) -> &Element {
        self.xi_at(self.m.index_of(x), self.m.index_of(y), self.m.index_of(z))
    }

    pub fn eta(&self, x: &Element, y: &Element) -> &Element {
        self.eta_at(self.m.index_of(x), self.m.index_of(y))
    }

    pub fn is_zero(&self) -> bool {
        self.xi.iter().chain(&self.eta).all(Element::is_zero)
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.m != other.m || self.n != other.n {
            return Err(Error::DomainMismatch(
                "3-cochains over different groups".into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let add = |a: &[Element], b: &[Element]| -> Vec<Element> {
            a.iter().zip(b).map(|(x, y)| self.n.add(x, y)).collect()
        };
        Ok(Self {
            m: self.m.clone(),
            n: self.n.clone(),
            xi: add(&self.xi, &other.xi),
            eta: add(&self.eta, &other.eta),
        })
    }

    pub fn neg(&self) -> Self {
        Self {
            m: self.m.clone(),
            n: self.n.clone(),
            xi: self.xi.iter().map(|a| self.n.neg(a)).collect(),
            eta: self.eta.iter().map(|a| self.n.neg(a)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Symmetric 3-cocycle conditions:
    ///
    /// 1. `ξ(y,z,t) - ξ(x+y,z,t) + ξ(x,y+z,t) - ξ(x,y,z+t) + ξ(x,y,z) = 0`
    /// 2. `η(x,y) + η(y,x) = 0`
    /// 3. `ξ(x,y,z) - ξ(y,x,z) + ξ(y,z,x) + η(x,y+z) - η(x,y) - η(x,z) = 0`
    pub fn check_sym_3cocycle(&self) -> std::result::Result<(), Violation> {
        let cay = self.m.cayley().expect("guarded");
        let s = cay.len();
        let n = &self.n;
        let el = |i: usize| cay.elements[i].clone();
        for x in 0..s {
            for y in 0..s {
                for z in 0..s {
                    for t in 0..s {
                        let v = combo(
                            n,
                            &[
                                (1, self.xi_at(y, z, t)),
                                (-1, self.xi_at(cay.add(x, y), z, t)),
                                (1, self.xi_at(x, cay.add(y, z), t)),
                                (-1, self.xi_at(x, y, cay.add(z, t))),
                                (1, self.xi_at(x, y, z)),
                            ],
                        );
                        if !v.is_zero() {
                            return Err(Violation {
                                condition:
                                    "i) xi(y,z,t)-xi(x+y,z,t)+xi(x,y+z,t)-xi(x,y,z+t)+xi(x,y,z)=0",
                                args: vec![el(x), el(y), el(z), el(t)],
                            });
                        }
                    }
                }
            }
        }
        for x in 0..s {
            for y in 0..s {
                if !n.add(self.eta_at(x, y), self.eta_at(y, x)).is_zero() {
                    return Err(Violation {
                        condition: "ii) eta(x,y)+eta(y,x)=0",
                        args: vec![el(x), el(y)],
                    });
                }
            }
        }
        for x in 0..s {
            for y in 0..s {
                for z in 0..s {
                    let v = combo(
                        n,
                        &[
                            (1, self.xi_at(x, y, z)),
                            (-1, self.xi_at(y, x, z)),
                            (1, self.xi_at(y, z, x)),
                            (1, self.eta_at(x, cay.add(y, z))),
                            (-1, self.eta_at(x, y)),
                            (-1, self.eta_at(x, z)),
                        ],
                    );
                    if !v.is_zero() {
                        return Err(Violation {
                            condition:
                                "iii) xi(x,y,z)-xi(y,x,z)+xi(y,z,x)+eta(x,y+z)-eta(x,y)-eta(x,z)=0",
                            args: vec![el(x), el(y), el(z)],
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_sym_3cocycle(&self) -> bool {
        self.check_sym_3cocycle().is_ok()
    }

    /// Free coordinates: `ξ` on nonzero triples, then `η` on nonzero pairs.
    /// Lossless for cocycles, whose `η` vanishes on pairs containing 0.
    pub fn to_coords(&self) -> Element {
        let s = self.size();
        flatten(
            nonzero_tuples(s, 3)
                .into_iter()
                .map(|t| self.xi_at(t[0], t[1], t[2]).clone())
                .chain(
                    nonzero_tuples(s, 2)
                        .into_iter()
                        .map(|t| self.eta_at(t[0], t[1]).clone()),
                ),
        )
    }

    pub fn from_coords(m: &FinAbGroup, n: &FinAbGroup, coords: &Element) -> Result<Self> {
        let s = check_order(m)?;
        let (c3, c2) = (free_count(s, 3), free_count(s, 2));
        let vals = unflatten(n, coords, c3 + c2);
        let mut xi = vec![n.zero(); s * s * s];
        let mut eta = vec![n.zero(); s * s];
        for (t, v) in nonzero_tuples(s, 3).into_iter().zip(&vals[..c3]) {
            xi[(t[0] * s + t[1]) * s + t[2]] = v.clone();
        }
        for (t, v) in nonzero_tuples(s, 2).into_iter().zip(&vals[c3..]) {
            eta[t[0] * s + t[1]] = v.clone();
        }
        Self::from_tables(m, n, xi, eta)
    }

    pub fn pullback(&self, phi: &GroupHom) -> Result<Cochain3> {
        if phi.cod() != &self.m {
            return Err(Error::DomainMismatch(
                "pullback map does not land in the source".into(),
            ));
        }
        let q = phi.dom();
        check_order(q)?;
        let images: Vec<usize> = q
            .elements()?
            .iter()
            .map(|x| self.m.index_of(&phi.apply(x)))
            .collect();
        let mut xi = Vec::new();
        for &a in &images {
            for &b in &images {
                for &c in &images {
                    xi.push(self.xi_at(a, b, c).clone());
                }
            }
        }
        let mut eta = Vec::new();
        for &a in &images {
            for &b in &images {
                eta.push(self.eta_at(a, b).clone());
            }
        }
        Cochain3::from_tables(q, &self.n, xi, eta)
    }

    pub fn pushforward(&self, h: &GroupHom) -> Result<Cochain3> {
        if h.dom() != &self.n {
            return Err(Error::DomainMismatch(
                "pushforward map does not start at the target".into(),
            ));
        }
        Cochain3::from_tables(
            &self.m,
            h.cod(),
            self.xi.iter().map(|v| h.apply(v)).collect(),
            self.eta.iter().map(|v| h.apply(v)).collect(),
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

    #[test]
    fn sym_2cocycle_examples() {
        let f = Cochain2::from_entries(&z(2), &z(2), [(&e(1), &e(1), &e(1))]).unwrap();
        assert!(f.is_sym_2cocycle());
        assert!(Cochain2::zero(&z(2), &z(2)).unwrap().is_sym_2cocycle());
        let f = Cochain2::from_entries(&z(2), &z(4), [(&e(1), &e(1), &e(1))]).unwrap();
        assert!(f.is_sym_2cocycle());
        let bad =
            Cochain2::from_entries(&z(2), &z(4), [(&e(1), &e(1), &e(1)), (&e(1), &e(0), &e(1))]);
        assert!(matches!(bad, Err(Error::NotNormalized(_))));
    }

    #[test]
    fn non_symmetric_cocycle_is_flagged() {
        // on Z/3, f(1,2)=1 only: not symmetric
        let f = Cochain2::from_entries(&z(3), &z(3), [(&e(1), &e(2), &e(1))]).unwrap();
        let v = f.check_sym_2cocycle().unwrap_err();
        assert!(!v.args.is_empty());
    }

    #[test]
    fn coboundary_examples() {
        let g = Cochain1::from_table(&z(2), &z(2), vec![e(0), e(1)]).unwrap();
        assert!(g.coboundary().is_zero());
        let g = Cochain1::zero(&z(3), &z(5)).unwrap();
        assert!(g.coboundary().is_zero());
        // symmetric g gives eta = 0
        let g =
            Cochain2::from_entries(&z(3), &z(5), [(&e(1), &e(2), &e(3)), (&e(2), &e(1), &e(3))])
                .unwrap();
        let k = g.coboundary();
        assert!(k.eta_table().iter().all(Element::is_zero));
        assert!(k.is_sym_3cocycle());
    }

    #[test]
    fn carry_cocycle_is_not_symmetric() {
        let carry = Cochain3::from_fns(
            &z(2),
            &z(2),
            |x, y, z| e(x.0[0] * i64::from(y.0[0] == 1 && z.0[0] == 1)),
            |_, _| e(0),
        )
        .unwrap();
        let v = carry.check_sym_3cocycle().unwrap_err();
        assert!(v.condition.starts_with("iii)"));
        assert_eq!(v.args, vec![e(1), e(1), e(1)]);
    }

    #[test]
    fn eta_only_cocycle_on_z2() {
        let k =
            Cochain3::from_fns(&z(2), &z(2), |_, _, _| e(0), |x, y| e(x.0[0] * y.0[0])).unwrap();
        assert!(k.is_sym_3cocycle());
    }

    #[test]
    fn coords_round_trip() {
        let g =
            Cochain2::from_entries(&z(3), &z(4), [(&e(1), &e(2), &e(3)), (&e(2), &e(2), &e(1))])
                .unwrap();
        let c = g.to_coords();
        assert!(cochain_space(&z(3), &z(4), 2).contains(&c));
        assert_eq!(Cochain2::from_coords(&z(3), &z(4), &c).unwrap(), g);
        let k = g.coboundary();
        assert_eq!(
            Cochain3::from_coords(&z(3), &z(4), &k.to_coords()).unwrap(),
            k
        );
    }

    #[test]
    fn pullback_identity_and_zero() {
        let f = Cochain2::from_entries(&z(2), &z(2), [(&e(1), &e(1), &e(1))]).unwrap();
        assert_eq!(f.pullback(&GroupHom::identity(&z(2))).unwrap(), f);
        assert!(f.pullback(&GroupHom::zero(&z(4), &z(2))).unwrap().is_zero());
    }
}
