//! Brute-force enumeration of symmetric cocycles and their classes.
//!
//! Independent of the linear-algebra path: cocycles are found by
//! backtracking over table entries, each condition checked as soon as the
//! last entry it touches is assigned, and classes are orbits under the set
//! of all coboundaries of enumerated lower cochains.

use std::collections::{HashMap, HashSet};

use crate::cochain::{Cochain1, Cochain2, Cochain3};
use crate::error::{size_guard, Error, Result};
use crate::group::{Cayley, FinAbGroup};

/// Search nodes visited before giving up with `SizeExceeded`.
pub const ORACLE_NODE_BUDGET: u64 = 1 << 24;
/// Largest number of lower cochains enumerated for the coboundary set.
pub const ORACLE_LOWER_LIMIT: u64 = 1 << 20;

/// All symmetric cocycles of one degree, partitioned into classes.
#[derive(Clone, Debug)]
pub struct OracleResult<C> {
    pub cocycles: Vec<C>,
    /// Class label of each cocycle; labels are `0..class_count` in order of
    /// first appearance.
    pub class_of: Vec<usize>,
    pub class_count: usize,
    pub coboundary_count: usize,
    pub nodes: u64,
}

/// `Σ sign * table[pos] = 0`.
struct Constraint {
    terms: Vec<(bool, usize)>,
}

struct Search<'a> {
    n: &'a Cayley,
    table: Vec<usize>,
    free: Vec<usize>,
    // constraints whose last free entry is free[i]
    buckets: Vec<Vec<Constraint>>,
    nodes: u64,
    found: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn holds(&self, c: &Constraint) -> bool {
        let mut acc = 0usize;
        for &(pos, p) in &c.terms {
            let v = self.table[p];
            acc = if pos {
                self.n.add(acc, v)
            } else {
                self.n.sub(acc, v)
            };
        }
        acc == 0
    }

    fn run(&mut self, i: usize) -> Result<()> {
        if i == self.free.len() {
            self.found.push(self.table.clone());
            return Ok(());
        }
        for v in 0..self.n.len() {
            self.nodes += 1;
            if self.nodes > ORACLE_NODE_BUDGET {
                return Err(Error::SizeExceeded {
                    what: "oracle search nodes".into(),
                    size: self.nodes,
                    limit: ORACLE_NODE_BUDGET,
                });
            }
            self.table[self.free[i]] = v;
            if self.buckets[i].iter().all(|c| self.holds(c)) {
                self.run(i + 1)?;
            }
        }
        self.table[self.free[i]] = 0;
        Ok(())
    }
}

fn search(
    n: &Cayley,
    table_len: usize,
    free: Vec<usize>,
    constraints: Vec<Constraint>,
) -> Result<(Vec<Vec<usize>>, u64)> {
    let mut rank = vec![None; table_len];
    for (i, &p) in free.iter().enumerate() {
        rank[p] = Some(i);
    }
    let mut buckets: Vec<Vec<Constraint>> = (0..free.len()).map(|_| Vec::new()).collect();
    let mut s = Search {
        n,
        table: vec![0; table_len],
        free: Vec::new(),
        buckets: Vec::new(),
        nodes: 0,
        found: Vec::new(),
    };
    for c in constraints {
        match c.terms.iter().filter_map(|&(_, p)| rank[p]).max() {
            Some(last) => buckets[last].push(c),
            // only fixed zero entries: holds trivially but check anyway
            None => {
                if !s.holds(&c) {
                    return Ok((Vec::new(), 0));
                }
            }
        }
    }
    s.free = free;
    s.buckets = buckets;
    s.run(0)?;
    Ok((s.found, s.nodes))
}

fn value_tables(n: &Cayley, len: usize, free: &[usize]) -> Result<Vec<Vec<usize>>> {
    let count = (n.len() as u64)
        .checked_pow(free.len() as u32)
        .unwrap_or(u64::MAX);
    size_guard("oracle lower cochains", count, ORACLE_LOWER_LIMIT)?;
    let mut out = Vec::with_capacity(count as usize);
    let mut t = vec![0usize; len];
    loop {
        out.push(t.clone());
        let mut i = free.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            t[free[i]] += 1;
            if t[free[i]] < n.len() {
                break;
            }
            t[free[i]] = 0;
        }
    }
}

fn partition(
    n: &Cayley,
    cocycles: &[Vec<usize>],
    boundaries: &HashSet<Vec<usize>>,
) -> (Vec<usize>, usize) {
    let index: HashMap<&Vec<usize>, usize> =
        cocycles.iter().enumerate().map(|(i, z)| (z, i)).collect();
    let mut label = vec![usize::MAX; cocycles.len()];
    let mut count = 0;
    for i in 0..cocycles.len() {
        if label[i] != usize::MAX {
            continue;
        }
        for b in boundaries {
            let shifted: Vec<usize> = cocycles[i]
                .iter()
                .zip(b)
                .map(|(&x, &y)| n.add(x, y))
                .collect();
            let j = *index
                .get(&shifted)
                .expect("cocycle plus coboundary is a cocycle");
            label[j] = count;
        }
        count += 1;
    }
    (label, count)
}

fn to_indices(n: &FinAbGroup, values: &[crate::group::Element]) -> Vec<usize> {
    values.iter().map(|v| n.index_of(v)).collect()
}

fn source_cayley(m: &FinAbGroup) -> Result<Cayley> {
    size_guard(&format!("oracle source {m}"), m.order(), 64)?;
    m.cayley()
}

/// Every symmetric 2-cocycle `M x M -> N` and its class.
pub fn oracle_h2(m: &FinAbGroup, n: &FinAbGroup) -> Result<OracleResult<Cochain2>> {
    let mc = source_cayley(m)?;
    let nc = n.cayley()?;
    let s = mc.len();
    let pos = |u: usize, v: usize| u * s + v;
    let free: Vec<usize> = (1..s)
        .flat_map(|u| (1..s).map(move |v| pos(u, v)))
        .collect();
    let mut cons = Vec::new();
    for u in 0..s {
        for v in 0..s {
            for t in 0..s {
                cons.push(Constraint {
                    terms: vec![
                        (true, pos(v, t)),
                        (true, pos(u, mc.add(v, t))),
                        (false, pos(u, v)),
                        (false, pos(mc.add(u, v), t)),
                    ],
                });
            }
            cons.push(Constraint {
                terms: vec![(true, pos(u, v)), (false, pos(v, u))],
            });
        }
    }
    let (found, nodes) = search(&nc, s * s, free, cons)?;

    let lower_free: Vec<usize> = (1..s).collect();
    let mut boundaries = HashSet::new();
    for t in value_tables(&nc, s, &lower_free)? {
        let g = Cochain1::from_table(m, n, t.iter().map(|&i| nc.elements[i].clone()).collect())?;
        boundaries.insert(to_indices(n, g.coboundary().table()));
    }
    let (class_of, class_count) = partition(&nc, &found, &boundaries);
    let cocycles = found
        .iter()
        .map(|t| Cochain2::from_table(m, n, t.iter().map(|&i| nc.elements[i].clone()).collect()))
        .collect::<Result<Vec<_>>>()?;
    Ok(OracleResult {
        cocycles,
        class_of,
        class_count,
        coboundary_count: boundaries.len(),
        nodes,
    })
}

/// Every symmetric 3-cocycle `(ξ, η)` over `(M, N)` and its class.
///
/// `η` is searched over all pairs, including those with a zero argument, so
/// its vanishing there comes out of the conditions rather than being assumed.
pub fn oracle_h3(m: &FinAbGroup, n: &FinAbGroup) -> Result<OracleResult<Cochain3>> {
    let mc = source_cayley(m)?;
    let nc = n.cayley()?;
    let s = mc.len();
    let xi = |x: usize, y: usize, z: usize| (x * s + y) * s + z;
    let eta = |x: usize, y: usize| s * s * s + x * s + y;
    let len = s * s * s + s * s;

    let mut free = Vec::new();
    for x in 1..s {
        for y in 1..s {
            for z in 1..s {
                free.push(xi(x, y, z));
            }
        }
    }
    for x in 0..s {
        for y in 0..s {
            free.push(eta(x, y));
        }
    }

    let mut cons = Vec::new();
    for x in 0..s {
        for y in 0..s {
            for z in 0..s {
                for t in 0..s {
                    cons.push(Constraint {
                        terms: vec![
                            (true, xi(y, z, t)),
                            (false, xi(mc.add(x, y), z, t)),
                            (true, xi(x, mc.add(y, z), t)),
                            (false, xi(x, y, mc.add(z, t))),
                            (true, xi(x, y, z)),
                        ],
                    });
                }
                cons.push(Constraint {
                    terms: vec![
                        (true, xi(x, y, z)),
                        (false, xi(y, x, z)),
                        (true, xi(y, z, x)),
                        (true, eta(x, mc.add(y, z))),
                        (false, eta(x, y)),
                        (false, eta(x, z)),
                    ],
                });
            }
            cons.push(Constraint {
                terms: vec![(true, eta(x, y)), (true, eta(y, x))],
            });
        }
    }
    let (found, nodes) = search(&nc, len, free, cons)?;

    let lower_free: Vec<usize> = (1..s)
        .flat_map(|u| (1..s).map(move |v| u * s + v))
        .collect();
    let mut boundaries = HashSet::new();
    for t in value_tables(&nc, s * s, &lower_free)? {
        let g = Cochain2::from_table(m, n, t.iter().map(|&i| nc.elements[i].clone()).collect())?;
        let k = g.coboundary();
        let mut idx = to_indices(n, k.xi_table());
        idx.extend(to_indices(n, k.eta_table()));
        boundaries.insert(idx);
    }
    let (class_of, class_count) = partition(&nc, &found, &boundaries);
    let cocycles = found
        .iter()
        .map(|t| {
            let vals: Vec<_> = t.iter().map(|&i| nc.elements[i].clone()).collect();
            let (x, e) = vals.split_at(s * s * s);
            Cochain3::from_tables(m, n, x.to_vec(), e.to_vec())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(OracleResult {
        cocycles,
        class_of,
        class_count,
        coboundary_count: boundaries.len(),
        nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: i64) -> FinAbGroup {
        FinAbGroup::cyclic(n)
    }

    #[test]
    fn degree_two_examples() {
        let r = oracle_h2(&z(2), &z(2)).unwrap();
        assert_eq!((r.cocycles.len(), r.class_count), (2, 2));
        let r = oracle_h2(&z(2), &z(3)).unwrap();
        assert_eq!((r.cocycles.len(), r.class_count), (3, 1));
    }

    #[test]
    fn degree_three_z2() {
        let r = oracle_h3(&z(2), &z(2)).unwrap();
        assert!(r.cocycles.iter().all(|k| k.is_sym_3cocycle()));
        assert!(r
            .cocycles
            .iter()
            .all(|k| (0..2).all(|x| k.eta_at(x, 0).is_zero() && k.eta_at(0, x).is_zero())));
        assert_eq!(r.class_count * r.coboundary_count, r.cocycles.len());
    }

    #[test]
    fn node_budget_is_enforced() {
        // |N|^free is astronomically large here; either the search finishes
        // within budget or it reports SizeExceeded, never a silent truncation
        match oracle_h3(&z(6), &z(6)) {
            Ok(r) => assert!(r.nodes <= ORACLE_NODE_BUDGET),
            Err(e) => assert!(matches!(e, Error::SizeExceeded { .. })),
        }
    }
}
