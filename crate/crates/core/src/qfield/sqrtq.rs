use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::q_pow;

/// An element `coeff * q^(half_exponent/2)`.
///
/// Stored normalised: `half_exponent` is 0 or 1 and the even part has been
/// folded into `coeff`, so structural equality is value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SqrtQScalar {
    q: u64,
    coeff: BigRational,
    half_exponent: i64,
}

impl SqrtQScalar {
    pub fn new(q: u64, coeff: BigRational, half_exponent: i64) -> Self {
        assert!(q >= 2);
        let mut s = Self {
            q,
            coeff,
            half_exponent,
        };
        s.normalize();
        s
    }

    /// `q^(half_exponent/2)`.
    pub fn q_power(q: u64, half_exponent: i64) -> Self {
        Self::new(q, BigRational::one(), half_exponent)
    }

    pub fn from_rational(q: u64, coeff: BigRational) -> Self {
        Self::new(q, coeff, 0)
    }

    fn normalize(&mut self) {
        if self.coeff.is_zero() {
            self.half_exponent = 0;
            return;
        }
        let odd = self.half_exponent.rem_euclid(2);
        let even_half = (self.half_exponent - odd) / 2;
        if even_half != 0 {
            self.coeff = &self.coeff * q_pow(self.q, even_half);
        }
        self.half_exponent = odd;
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn coeff(&self) -> &BigRational {
        &self.coeff
    }

    /// 0 or 1 after normalisation.
    pub fn half_exponent(&self) -> i64 {
        self.half_exponent
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// The value as a rational, when the residual exponent is even.
    pub fn to_rational(&self) -> Option<BigRational> {
        (self.half_exponent == 0).then(|| self.coeff.clone())
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::new(self.q, self.coeff.recip(), -self.half_exponent))
    }

    /// Sum of two scalars with the same residual exponent.
    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        assert_eq!(self.q, other.q);
        if self.is_zero() {
            return Some(other.clone());
        }
        if other.is_zero() {
            return Some(self.clone());
        }
        (self.half_exponent == other.half_exponent)
            .then(|| Self::new(self.q, &self.coeff + &other.coeff, self.half_exponent))
    }
}

impl Mul for &SqrtQScalar {
    type Output = SqrtQScalar;

    fn mul(self, rhs: &SqrtQScalar) -> SqrtQScalar {
        assert_eq!(self.q, rhs.q, "mixing scalars over different q");
        SqrtQScalar::new(self.q, &self.coeff * &rhs.coeff, self.half_exponent + rhs.half_exponent)
    }
}

impl Mul for SqrtQScalar {
    type Output = SqrtQScalar;

    fn mul(self, rhs: SqrtQScalar) -> SqrtQScalar {
        &self * &rhs
    }
}

impl fmt::Display for SqrtQScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.half_exponent == 0 {
            write!(f, "{}", self.coeff)
        } else {
            write!(f, "{}*{}^(1/2)", self.coeff, self.q)
        }
    }
}

impl From<(u64, i64)> for SqrtQScalar {
    fn from((q, n): (u64, i64)) -> Self {
        Self::from_rational(q, BigRational::from_integer(BigInt::from(n)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn sqrt_q_squares_to_q() {
        for q in [2u64, 3, 5] {
            let s = SqrtQScalar::q_power(q, 1);
            assert_eq!((&s * &s).to_rational(), Some(rat(q as i64, 1)));
            assert_eq!(s.to_rational(), None);
        }
    }

    #[test]
    fn normalisation_makes_equality_structural() {
        let a = SqrtQScalar::new(2, rat(1, 1), 4);
        let b = SqrtQScalar::new(2, rat(4, 1), 0);
        assert_eq!(a, b);
        let c = SqrtQScalar::new(3, rat(1, 1), -3);
        assert_eq!(c, SqrtQScalar::new(3, rat(1, 3), -1));
        assert_eq!(c.half_exponent(), 1);
        assert_eq!(c.coeff(), &rat(1, 9));
        assert_eq!(SqrtQScalar::new(2, rat(0, 1), 5).half_exponent(), 0);
    }

    #[test]
    fn inverse_and_add() {
        let s = SqrtQScalar::new(5, rat(3, 2), 3);
        assert_eq!((&s * &s.inverse().unwrap()).to_rational(), Some(rat(1, 1)));
        let t = SqrtQScalar::new(5, rat(1, 2), 1);
        assert!(s.checked_add(&SqrtQScalar::from((5, 1))).is_none());
        assert_eq!(
            s.checked_add(&t).unwrap(),
            SqrtQScalar::new(5, rat(15, 2) + rat(1, 2), 1)
        );
    }

    fn scalar() -> impl Strategy<Value = SqrtQScalar> {
        (-20i64..20, 1i64..6, -7i64..7).prop_map(|(n, d, e)| SqrtQScalar::new(3, rat(n, d), e))
    }

    proptest! {
        #[test]
        fn multiplication_is_commutative_and_associative(a in scalar(), b in scalar(), c in scalar()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }
    }
}
