//! Integer scalars for fraction-free kernels: a checked `i128` fast path and
//! an unbounded `BigInt` fallback.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

pub(crate) trait IntScalar: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn from_big(v: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    /// `a*b - c*d`.
    fn cross(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_one(&self) -> bool;
}

impl IntScalar for i128 {
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn from_big(v: &BigInt) -> Option<Self> {
        v.to_i128()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn cross(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self> {
        a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
}

impl IntScalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn from_big(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn cross(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self> {
        Some(a * b - c * d)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_one(&self) -> bool {
        num_traits::One::is_one(self)
    }
}

/// Divides a row by the gcd of its entries and makes its first nonzero entry positive.
pub(crate) fn remove_content<T: IntScalar>(row: &mut [T]) {
    let mut g = T::zero();
    for a in row.iter() {
        if !a.is_zero() {
            g = g.gcd(a);
            if g.is_one() {
                break;
            }
        }
    }
    let flip = row.iter().find(|a| !a.is_zero()).is_some_and(IntScalar::is_negative);
    if g.is_zero() {
        return;
    }
    if !g.is_one() || flip {
        let g = if flip { g.neg() } else { g };
        for a in row.iter_mut() {
            if !a.is_zero() {
                *a = a.div_exact(&g);
            }
        }
    }
}
