//! Smith normal form over the integers.

use crate::matrix::Matrix;
use crate::scalar::IntScalar;

/// `u * a * v == s` with `u`, `v` unimodular and `s` diagonal, non-negative,
/// each diagonal entry dividing the next. `v_inv` is the inverse of `v`.
#[derive(Clone, Debug)]
pub struct SmithForm<T> {
    pub u: Matrix<T>,
    pub s: Matrix<T>,
    pub v: Matrix<T>,
    pub v_inv: Matrix<T>,
}

impl<T: IntScalar> SmithForm<T> {
    /// Diagonal entries of `s` (length `min(rows, cols)`).
    pub fn diagonal(&self) -> Vec<T> {
        (0..self.s.rows().min(self.s.cols()))
            .map(|i| self.s[(i, i)].clone())
            .collect()
    }
}

/// Computes the Smith normal form of `a` by exact elimination, accumulating
/// both transforms.
pub fn smith_normal_form<T: IntScalar>(a: &Matrix<T>) -> SmithForm<T> {
    let (m, n) = (a.rows(), a.cols());
    let mut s = a.clone();
    let mut u = Matrix::identity(m);
    let mut v = Matrix::identity(n);
    let mut v_inv = Matrix::identity(n);

    for t in 0..m.min(n) {
        loop {
            let Some((pi, pj)) = min_nonzero(&s, t) else {
                return SmithForm { u, s, v, v_inv };
            };
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);
            v_inv.swap_rows(t, pj);

            let mut clean = true;
            for i in t + 1..m {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let q = -s[(i, t)].div_floor(&s[(t, t)]);
                s.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                clean &= s[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let q = -s[(t, j)].div_floor(&s[(t, t)]);
                s.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                v_inv.add_row_multiple(t, j, &(-q));
                clean &= s[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }

            let pivot = s[(t, t)].clone();
            let bad_row =
                (t + 1..m).find(|&i| (t + 1..n).any(|j| !s[(i, j)].is_multiple_of(&pivot)));
            match bad_row {
                Some(i) => {
                    s.add_row_multiple(t, i, &T::one());
                    u.add_row_multiple(t, i, &T::one());
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm { u, s, v, v_inv }
}

fn min_nonzero<T: IntScalar>(s: &Matrix<T>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, T)> = None;
    for i in t..s.rows() {
        for j in t..s.cols() {
            let a = s[(i, j)].abs();
            if a.is_zero() {
                continue;
            }
            if best.as_ref().is_none_or(|(_, _, b)| a < *b) {
                best = Some((i, j, a));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Smith form of a relation matrix over `Z/e`, for presentations
/// `Z^k / (rowspan(a) + eZ^k)`. Entries stay below `e`, so no big integers
/// are needed. Only the column transform is tracked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModSmith {
    /// One factor per column, each dividing `e` and the next; `e` stands in
    /// for a zero diagonal entry.
    pub factors: Vec<i64>,
    pub v: Vec<Vec<i64>>,
    pub v_inv: Vec<Vec<i64>>,
}

pub fn smith_mod(a: &[Vec<i64>], cols: usize, e: i64) -> ModSmith {
    assert!(e > 0, "modulus must be positive");
    let m = a.len();
    let md = |x: i128| x.rem_euclid(e as i128) as i64;
    let mut s: Vec<Vec<i64>> = a
        .iter()
        .map(|r| {
            assert_eq!(r.len(), cols, "row length mismatch");
            r.iter().map(|&x| md(x as i128)).collect()
        })
        .collect();
    let ident = |n: usize| -> Vec<Vec<i64>> {
        (0..n)
            .map(|i| (0..n).map(|j| md((i == j) as i128)).collect())
            .collect()
    };
    let mut v = ident(cols);
    let mut v_inv = ident(cols);
    let axpy = |dst: &mut [i64], src: &[i64], q: i64| {
        if q != 0 {
            for (d, &x) in dst.iter_mut().zip(src) {
                if x != 0 {
                    *d = md(*d as i128 + q as i128 * x as i128);
                }
            }
        }
    };
    let add_col = |rows: &mut Vec<Vec<i64>>, j: usize, t: usize, q: i64| {
        for r in rows.iter_mut() {
            if r[t] != 0 {
                r[j] = md(r[j] as i128 + q as i128 * r[t] as i128);
            }
        }
    };
    let mut factors = Vec::with_capacity(cols);

    for t in 0..m.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for (i, row) in s.iter().enumerate().skip(t) {
                for (j, &x) in row.iter().enumerate().skip(t) {
                    if x != 0 && best.is_none_or(|(bi, bj)| x < s[bi][bj]) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                factors.resize(cols, e);
                return ModSmith { factors, v, v_inv };
            };
            s.swap(t, pi);
            for r in s.iter_mut().chain(v.iter_mut()) {
                r.swap(t, pj);
            }
            v_inv.swap(t, pj);

            let p = s[t][t];
            let mut clean = true;
            for i in t + 1..m {
                if s[i][t] != 0 {
                    let q = -(s[i][t] / p);
                    let (head, tail) = s.split_at_mut(i);
                    axpy(&mut tail[0][t..], &head[t][t..], md(q as i128));
                    clean &= s[i][t] == 0;
                }
            }
            for j in t + 1..cols {
                if s[t][j] != 0 {
                    let q = -(s[t][j] / p);
                    add_col(&mut s, j, t, md(q as i128));
                    add_col(&mut v, j, t, md(q as i128));
                    let (head, tail) = v_inv.split_at_mut(j);
                    axpy(&mut head[t], &tail[0], md(-(q as i128)));
                    clean &= s[t][j] == 0;
                }
            }
            if !clean {
                continue;
            }
            // p is a unit multiple of gcd(p, e) in Z/e; scaling row t is free.
            let g = num_integer::gcd(p, e);
            s[t][t] = g % e;
            let bad_row = (t + 1..m).find(|&i| s[i][t + 1..].iter().any(|&x| x % g != 0));
            match bad_row {
                Some(i) => {
                    let (head, tail) = s.split_at_mut(i);
                    axpy(&mut head[t], &tail[0], 1);
                }
                None => break,
            }
        }
        factors.push(if s[t][t] == 0 { e } else { s[t][t] });
    }
    factors.resize(cols, e);
    ModSmith { factors, v, v_inv }
}

/// Invariant factors of the abelian group presented by the diagonal
/// relations `factors` (each entry a cyclic order), with units dropped.
pub fn canonical_factors(factors: &[i64]) -> Vec<i64> {
    let d = Matrix::<i128>::diagonal(&factors.iter().map(|&f| f as i128).collect::<Vec<_>>());
    smith_normal_form(&d)
        .diagonal()
        .into_iter()
        .map(|x| x as i64)
        .filter(|&x| x != 1)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn check<T: IntScalar>(a: &Matrix<T>) -> SmithForm<T> {
        let f = smith_normal_form(a);
        assert_eq!(&(&f.u * a) * &f.v, f.s);
        assert!(f.s.is_diagonal());
        assert!(f.u.determinant().abs().is_one());
        assert!(f.v.determinant().abs().is_one());
        assert_eq!(&f.v * &f.v_inv, Matrix::identity(a.cols()));
        let d = f.diagonal();
        for w in d.windows(2) {
            assert!(!w[0].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            } else {
                assert!(w[1].is_multiple_of(&w[0]));
            }
        }
        f
    }

    #[test]
    fn diag_two_three() {
        let f = check(&Matrix::<i64>::from_rows(2, vec![vec![2, 0], vec![0, 3]]));
        assert_eq!(f.diagonal(), vec![1, 6]);
    }

    #[test]
    fn zero_one_by_one() {
        let f = check(&Matrix::<i64>::from_rows(1, vec![vec![0]]));
        assert_eq!(f.diagonal(), vec![0]);
        assert_eq!(f.u, Matrix::identity(1));
        assert_eq!(f.v, Matrix::identity(1));
    }

    #[test]
    fn four_two_two_two() {
        let f = check(&Matrix::<BigInt>::from_i64_rows(
            2,
            &[vec![4, 2], vec![2, 2]],
        ));
        assert_eq!(f.diagonal(), vec![BigInt::from(2), BigInt::from(2)]);
    }

    #[test]
    fn empty_matrices() {
        check(&Matrix::<i64>::zeros(0, 3));
        check(&Matrix::<i64>::zeros(2, 0));
    }

    #[test]
    fn canonical_factor_lists() {
        assert_eq!(canonical_factors(&[2, 3]), vec![6]);
        assert_eq!(canonical_factors(&[4, 2]), vec![2, 4]);
        assert_eq!(canonical_factors(&[1, 1]), Vec::<i64>::new());
        assert_eq!(canonical_factors(&[6, 4]), vec![2, 12]);
    }

    #[test]
    fn smith_mod_small() {
        // Z^2 / <(2, 0), (0, 3)> + 6Z^2 = Z/6
        let f = smith_mod(&[vec![2, 0], vec![0, 3]], 2, 6);
        assert_eq!(f.factors, vec![1, 6]);
        // a unit multiple of 2 mod 4
        assert_eq!(smith_mod(&[vec![6]], 1, 4).factors, vec![2]);
        assert_eq!(smith_mod(&[], 2, 5).factors, vec![5, 5]);
    }

    proptest! {
        #[test]
        fn smith_mod_matches_integer_form(
            rows in 0usize..5,
            cols in 1usize..5,
            e in 1i64..13,
            seed in proptest::collection::vec(-20i64..20, 25),
        ) {
            let data: Vec<Vec<i64>> = (0..rows).map(|i| (0..cols).map(|j| seed[i * 5 + j]).collect()).collect();
            let mut stacked = data.clone();
            for j in 0..cols {
                let mut r = vec![0; cols];
                r[j] = e;
                stacked.push(r);
            }
            let exact = smith_normal_form(&Matrix::<i128>::from_i64_rows(cols, &stacked));
            let want: Vec<i64> = exact.diagonal().iter().map(|&x| x as i64).collect();
            let f = smith_mod(&data, cols, e);
            prop_assert_eq!(&f.factors, &want);
            // v and v_inv are mutually inverse mod e
            for i in 0..cols {
                for j in 0..cols {
                    let x: i64 = (0..cols).map(|l| f.v[i][l] * f.v_inv[l][j]).sum();
                    prop_assert_eq!(x.rem_euclid(e), ((i == j) as i64).rem_euclid(e));
                }
            }
            // the transformed relations a * v lie in the diagonal lattice
            for r in &data {
                for (j, &d) in f.factors.iter().enumerate() {
                    let x: i64 = (0..cols).map(|l| r[l] * f.v[l][j]).sum();
                    prop_assert_eq!(x.rem_euclid(d), 0);
                }
            }
        }

        #[test]
        fn snf_is_valid(rows in 0usize..5, cols in 0usize..5, seed in proptest::collection::vec(-9i64..10, 25)) {
            let data: Vec<Vec<i64>> = (0..rows).map(|i| (0..cols).map(|j| seed[i * 5 + j]).collect()).collect();
            let a = Matrix::<i128>::from_i64_rows(cols, &data);
            let f = check(&a);
            let big = check(&a.cast::<BigInt>());
            prop_assert_eq!(f.diagonal().iter().map(|x| BigInt::from(*x)).collect::<Vec<_>>(), big.diagonal());
        }
    }
}
