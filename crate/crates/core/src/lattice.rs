//! Hermite echelon forms of subgroups of a product of cyclic groups.
//!
//! A subgroup of `Z/m_0 + ... + Z/m_{k-1}` is handled through its preimage
//! lattice `L` in `Z^k`, which always contains every `m_i e_i`. Because of
//! that, column `i` can be reduced modulo `m_i` at every step, so entries never
//! grow beyond the moduli and `i64` is enough.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::scalar::ext_gcd;
use crate::snf::smith_mod;

/// Upper-triangular basis of a full-rank lattice containing `diag(moduli)`.
///
/// Row `i` has zeros before column `i`, a positive pivot dividing `moduli[i]`
/// at column `i`, and entries right of the pivot reduced modulo the pivot of
/// their column. The basis is unique for a given subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hermite {
    moduli: Vec<i64>,
    rows: Vec<Vec<i64>>,
}

fn rem(v: i128, m: i64) -> i64 {
    v.rem_euclid(m as i128) as i64
}

/// `(a - q*b) mod m` for `a, b` already reduced and `|q| < m`.
fn mulsub(a: i64, q: i64, b: i64, m: i64) -> i64 {
    if m < 1 << 31 {
        (a - q * b).rem_euclid(m)
    } else {
        rem(a as i128 - q as i128 * b as i128, m)
    }
}

impl Hermite {
    /// Hermite basis of the subgroup generated by `gens`.
    pub fn new<I: IntoIterator<Item = Vec<i64>>>(moduli: &[i64], gens: I) -> Self {
        let k = moduli.len();
        let mut pool: Vec<Vec<i64>> = gens
            .into_iter()
            .map(|g| {
                assert_eq!(g.len(), k, "generator length mismatch");
                g.iter()
                    .zip(moduli)
                    .map(|(&v, &m)| rem(v as i128, m))
                    .collect::<Vec<_>>()
            })
            .filter(|g| g.iter().any(|&v| v != 0))
            .collect();

        let mut rows = Vec::with_capacity(k);
        for c in 0..k {
            let mut piv = vec![0i64; k];
            piv[c] = moduli[c];
            let mut next = Vec::with_capacity(pool.len());
            for mut r in pool.drain(..) {
                if r[c] == 0 {
                    next.push(r);
                    continue;
                }
                if r[c] % piv[c] == 0 {
                    let q = r[c] / piv[c];
                    r[c] = 0;
                    let mut live = false;
                    for j in c + 1..k {
                        r[j] = mulsub(r[j], q, piv[j], moduli[j]);
                        live |= r[j] != 0;
                    }
                    if live {
                        next.push(r);
                    }
                    continue;
                }
                let (g, s, t) = ext_gcd(&(piv[c] as i128), &(r[c] as i128));
                let a = piv[c] as i128 / g;
                let b = r[c] as i128 / g;
                let mut np = vec![0i64; k];
                let mut nr = vec![0i64; k];
                np[c] = g as i64;
                for j in c + 1..k {
                    let (pj, rj) = (piv[j] as i128, r[j] as i128);
                    np[j] = rem(s * pj + t * rj, moduli[j]);
                    nr[j] = rem(b * pj - a * rj, moduli[j]);
                }
                piv = np;
                if nr.iter().any(|&v| v != 0) {
                    next.push(nr);
                }
            }
            rows.push(piv);
            pool = next;
        }

        for i in 0..k {
            for j in i + 1..k {
                let p = rows[j][j];
                let q = rows[i][j].div_euclid(p);
                if q == 0 {
                    continue;
                }
                let (head, tail) = rows.split_at_mut(j);
                let (ri, rj) = (&mut head[i], &tail[0]);
                for c in j..k {
                    ri[c] = mulsub(ri[c], q, rj[c], moduli[c]);
                }
            }
        }
        Self {
            moduli: moduli.to_vec(),
            rows,
        }
    }

    pub fn moduli(&self) -> &[i64] {
        &self.moduli
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn pivot(&self, i: usize) -> i64 {
        self.rows[i][i]
    }

    /// Lexicographically least element of the coset `x + subgroup`.
    pub fn lexmin(&self, x: &[i64]) -> Vec<i64> {
        let k = self.moduli.len();
        let mut x: Vec<i64> = x
            .iter()
            .zip(&self.moduli)
            .map(|(&v, &m)| rem(v as i128, m))
            .collect();
        for c in 0..k {
            let q = x[c].div_euclid(self.rows[c][c]);
            if q == 0 {
                continue;
            }
            for ((xj, &h), &m) in x.iter_mut().zip(&self.rows[c]).zip(&self.moduli).skip(c) {
                *xj = mulsub(*xj, q, h, m);
            }
        }
        x
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.lexmin(x).iter().all(|&v| v == 0)
    }

    /// Invariant factors of the quotient `Z^k / L` together with the
    /// projection matrix (one row per kept factor, one column per coordinate).
    pub fn quotient_structure(&self) -> (Vec<i64>, Vec<Vec<i64>>) {
        let k = self.moduli.len();
        let snf = smith_mod(&self.rows, k, self.exponent());
        let mut factors = Vec::new();
        let mut proj = Vec::new();
        for (i, &s) in snf.factors.iter().enumerate() {
            if s == 1 {
                continue;
            }
            factors.push(s);
            proj.push((0..k).map(|j| snf.v[j][i] % s).collect());
        }
        (factors, proj)
    }

    /// Exponent of the ambient group; it kills every quotient and subgroup.
    fn exponent(&self) -> i64 {
        self.moduli.iter().fold(1, |a, &m| num_integer::lcm(a, m))
    }

    /// Solves `c * rows = m_j e_j` exactly; `None` on overflow.
    fn relation_row_i128(&self, j: usize) -> Option<Vec<i128>> {
        let k = self.moduli.len();
        let mut c = vec![0i128; k];
        for col in j..k {
            let mut acc = if col == j { self.moduli[j] as i128 } else { 0 };
            for (i, &ci) in c.iter().enumerate().take(col).skip(j) {
                if ci != 0 {
                    acc = acc.checked_sub(ci.checked_mul(self.rows[i][col] as i128)?)?;
                }
            }
            c[col] = acc / self.rows[col][col] as i128;
        }
        Some(c)
    }

    fn relation_row_big(&self, j: usize) -> Vec<BigInt> {
        let k = self.moduli.len();
        let mut c = vec![BigInt::from(0); k];
        for col in j..k {
            let mut acc = if col == j {
                BigInt::from(self.moduli[j])
            } else {
                BigInt::from(0)
            };
            for (i, ci) in c.iter().enumerate().take(col).skip(j) {
                acc -= ci * self.rows[i][col];
            }
            c[col] = acc / self.rows[col][col];
        }
        c
    }

    /// Invariant factors of the subgroup `L / diag(moduli)` and the images of
    /// its canonical generators in ambient coordinates.
    pub fn subgroup_structure(&self) -> (Vec<i64>, Vec<Vec<i64>>) {
        let k = self.moduli.len();
        // relation rows: coordinates of m_j e_j in the Hermite basis, mod e
        let e = self.exponent();
        let rel: Vec<Vec<i64>> = (0..k)
            .map(|j| {
                self.relation_row_i128(j)
                    .map(|c| c.into_iter().map(|x| rem(x, e)).collect())
                    .unwrap_or_else(|| {
                        let big_e = BigInt::from(e);
                        self.relation_row_big(j)
                            .iter()
                            .map(|x| x.mod_floor(&big_e).to_i64().expect("reduced below e"))
                            .collect()
                    })
            })
            .collect();
        let snf = smith_mod(&rel, k, e);
        let mut factors = Vec::new();
        let mut out = Vec::new();
        for (i, &s) in snf.factors.iter().enumerate() {
            if s == 1 {
                continue;
            }
            factors.push(s);
            out.push(
                (0..k)
                    .map(|j| {
                        let v: i128 = (0..k)
                            .map(|l| snf.v_inv[i][l] as i128 * self.rows[l][j] as i128)
                            .sum();
                        rem(v, self.moduli[j])
                    })
                    .collect(),
            );
        }
        (factors, out)
    }
}

/// Echelon data of a homomorphism `h: Z/n -> Z/m` given by the images of the
/// domain generators. Built from the lattice spanned by `[h(e_j) | e_j]`.
#[derive(Clone, Debug)]
pub struct HomEchelon {
    cod_len: usize,
    dom_len: usize,
    full: Hermite,
}

impl HomEchelon {
    pub fn new(cod_moduli: &[i64], dom_moduli: &[i64], columns: &[Vec<i64>]) -> Self {
        let (l, k) = (cod_moduli.len(), dom_moduli.len());
        assert_eq!(columns.len(), k);
        let moduli: Vec<i64> = cod_moduli.iter().chain(dom_moduli).copied().collect();
        let gens = columns.iter().enumerate().map(|(j, col)| {
            let mut g = vec![0i64; l + k];
            g[..l].copy_from_slice(col);
            g[l + j] = 1;
            g
        });
        Self {
            cod_len: l,
            dom_len: k,
            full: Hermite::new(&moduli, gens),
        }
    }

    pub fn image(&self) -> Hermite {
        let l = self.cod_len;
        Hermite {
            moduli: self.full.moduli[..l].to_vec(),
            rows: self.full.rows[..l]
                .iter()
                .map(|r| r[..l].to_vec())
                .collect(),
        }
    }

    pub fn kernel(&self) -> Hermite {
        let l = self.cod_len;
        Hermite {
            moduli: self.full.moduli[l..].to_vec(),
            rows: self.full.rows[l..]
                .iter()
                .map(|r| r[l..].to_vec())
                .collect(),
        }
    }

    /// Some `x` with `h(x) = y`, or `None` when `y` is not in the image.
    pub fn particular_solution(&self, y: &[i64]) -> Option<Vec<i64>> {
        let (l, k) = (self.cod_len, self.dom_len);
        let m = &self.full.moduli;
        let mut r: Vec<i64> = y
            .iter()
            .zip(m)
            .map(|(&v, &mi)| rem(v as i128, mi))
            .collect();
        let mut x = vec![0i64; k];
        for c in 0..l {
            let row = &self.full.rows[c];
            let p = row[c];
            if r[c] % p != 0 {
                return None;
            }
            let q = (r[c] / p) as i128;
            if q == 0 {
                continue;
            }
            for j in c..l {
                r[j] = rem(r[j] as i128 - q * row[j] as i128, m[j]);
            }
            for j in 0..k {
                x[j] = rem(x[j] as i128 + q * row[l + j] as i128, m[l + j]);
            }
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subgroup_elements(moduli: &[i64], h: &Hermite) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        let mut x = vec![0i64; moduli.len()];
        loop {
            if h.contains(&x) {
                out.push(x.clone());
            }
            let mut i = moduli.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                x[i] += 1;
                if x[i] < moduli[i] {
                    break;
                }
                x[i] = 0;
            }
        }
    }

    #[test]
    fn hermite_of_generated_subgroup() {
        // <(2, 1)> in Z/4 + Z/2 = {(0,0), (2,1)}
        let h = Hermite::new(&[4, 2], vec![vec![2, 1]]);
        let elems = subgroup_elements(&[4, 2], &h);
        assert_eq!(elems, vec![vec![0, 0], vec![2, 1]]);
        let (f, gens) = h.subgroup_structure();
        assert_eq!(f, vec![2]);
        assert_eq!(gens, vec![vec![2, 1]]);
    }

    #[test]
    fn lexmin_picks_least_coset_member() {
        let h = Hermite::new(&[6], vec![vec![4]]);
        // subgroup {0, 2, 4}; coset of 5 is {1, 3, 5}
        assert_eq!(h.lexmin(&[5]), vec![1]);
        let (f, proj) = h.quotient_structure();
        assert_eq!(f, vec![2]);
        assert_eq!(proj.len(), 1);
    }

    #[test]
    fn hom_echelon_mod_two() {
        // Z/4 -> Z/2, 1 -> 1
        let e = HomEchelon::new(&[2], &[4], &[vec![1]]);
        assert_eq!(e.kernel().lexmin(&[3]), vec![1]);
        let k = e.kernel();
        assert!(k.contains(&[2]) && !k.contains(&[1]));
        let x = e.particular_solution(&[1]).unwrap();
        assert_eq!(x[0] % 2, 1);
    }

    #[test]
    fn hom_echelon_times_two() {
        // Z/2 -> Z/4, 1 -> 2
        let e = HomEchelon::new(&[4], &[2], &[vec![2]]);
        assert!(e.particular_solution(&[1]).is_none());
        assert_eq!(e.particular_solution(&[2]), Some(vec![1]));
        assert!(e.image().contains(&[2]));
        assert!(!e.image().contains(&[1]));
    }
}
