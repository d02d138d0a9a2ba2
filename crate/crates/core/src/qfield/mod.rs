//! Prime-field arithmetic, q-integers and q-binomial coefficients.
//!
//! `[l] = (q^l - 1)/(q - 1)` is evaluated through the rational formula, so
//! negative `l` is accepted as well.

mod field;
mod identities;
mod sqrtq;

pub use field::{FieldContext, FieldElem};
pub use identities::{verify_q_identities, IdentityVerdict, QIdentityReport};
pub use sqrtq::SqrtQScalar;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

/// `q^e` as an exact rational; `e` may be negative.
pub fn q_pow(q: u64, e: i64) -> BigRational {
    let base = BigInt::from(q);
    let p = Pow::pow(&base, e.unsigned_abs());
    if e >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

/// The q-integer `[l] = (q^l - 1)/(q - 1)`.
pub fn q_int(l: i64, q: u64) -> BigRational {
    assert!(q >= 2, "q-integers need q >= 2");
    (q_pow(q, l) - BigRational::one()) / BigRational::from_integer(BigInt::from(q - 1))
}

/// `[l]` for `l >= 0` as an integer.
pub fn q_int_int(l: u32, q: u64) -> BigInt {
    assert!(q >= 2, "q-integers need q >= 2");
    (Pow::pow(&BigInt::from(q), l) - 1u32) / BigInt::from(q - 1)
}

/// Gaussian binomial coefficient, zero whenever `l < n` or `n < 0`.
pub fn q_binomial(l: i64, n: i64, q: u64) -> BigInt {
    assert!(q >= 2, "q-binomials need q >= 2");
    if n < 0 || l < n {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for k in 0..n {
        num *= q_int_int((l - k) as u32, q);
        den *= q_int_int((n - k) as u32, q);
    }
    let (quo, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero());
    quo
}

/// `q_binomial` as a `usize`, for counts that index tables.
pub fn q_binomial_usize(l: usize, n: usize, q: u64) -> Option<usize> {
    usize::try_from(q_binomial(l as i64, n as i64, q)).ok()
}

/// Binomial coefficient `C(n, 2)` on integers, as used in q-exponents.
pub(crate) fn choose2(n: i64) -> i64 {
    n * (n - 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn q_int_values() {
        assert_eq!(q_int(0, 2), r(0));
        // 1 + 2 + 4
        assert_eq!(q_int(3, 2), r(1 + 2 + 4));
        // 1 + 3 + 9 + 27
        assert_eq!(q_int(4, 3), r(1 + 3 + 9 + 27));
        assert_eq!(q_int(-1, 2), BigRational::new((-1).into(), 2.into()));
    }

    #[test]
    fn q_binomial_basic() {
        for l in 0..8 {
            assert_eq!(q_binomial(l, 0, 3), BigInt::one());
        }
        assert_eq!(q_binomial(5, 2, 2), BigInt::from(155));
        assert_eq!(q_binomial(2, 3, 2), BigInt::zero());
        assert_eq!(q_binomial(4, -1, 2), BigInt::zero());
        assert_eq!(q_binomial(6, 2, 2), BigInt::from(651));
        assert_eq!(q_binomial(4, 1, 3), BigInt::from(40));
    }

    #[test]
    fn q_binomial_symmetric() {
        for q in [2u64, 3, 5] {
            for l in 0..10 {
                for n in 0..=l {
                    assert_eq!(q_binomial(l, n, q), q_binomial(l, l - n, q));
                }
            }
        }
    }

    #[test]
    fn q_int_increasing() {
        for q in [2u64, 3, 7] {
            for l in 0..20 {
                assert!(q_int(l + 1, q) > q_int(l, q));
                assert!(q_int(l, q).is_integer());
            }
        }
    }
}
