//! Integer scalars usable by the matrix layer.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact Euclidean integer type.
///
/// Implemented for `i64`, `i128` and `BigInt`. The fixed-width types are
/// faster but may overflow on adversarial inputs; `BigInt` never does.
pub trait IntScalar:
    Integer + Signed + Clone + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("i64 fits every IntScalar")
    }

    /// Narrow to `i64`, panicking if the value does not fit.
    fn to_i64_exact(&self) -> i64 {
        self.to_i64()
            .unwrap_or_else(|| panic!("integer {self} does not fit in i64"))
    }
}

impl IntScalar for i64 {}
impl IntScalar for i128 {}
impl IntScalar for BigInt {}

/// Extended gcd: returns `(g, s, t)` with `s*a + t*b = g` and `g >= 0`.
pub fn ext_gcd<T: IntScalar>(a: &T, b: &T) -> (T, T, T) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (T::one(), T::zero());
    let (mut old_t, mut t) = (T::zero(), T::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let nr = old_r - q.clone() * r.clone();
        old_r = std::mem::replace(&mut r, nr);
        let ns = old_s - q.clone() * s.clone();
        old_s = std::mem::replace(&mut s, ns);
        let nt = old_t - q * t.clone();
        old_t = std::mem::replace(&mut t, nt);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ext_gcd_bezout() {
        for a in -20i64..20 {
            for b in -20i64..20 {
                let (g, s, t) = ext_gcd(&a, &b);
                assert_eq!(s * a + t * b, g);
                assert_eq!(g, a.gcd(&b));
            }
        }
    }

    #[test]
    fn ext_gcd_bigint() {
        let a = BigInt::from(240);
        let b = BigInt::from(46);
        let (g, s, t) = ext_gcd(&a, &b);
        assert_eq!(g, BigInt::from(2));
        assert_eq!(s * a + t * b, g);
    }
}
