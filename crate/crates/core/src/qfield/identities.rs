//! Pascal-type recursion and the two alternating sums of q-binomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{choose2, q_binomial, q_pow};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct IdentityVerdict {
    pub name: &'static str,
    pub cases_checked: usize,
    /// First failing case as a human readable description, if any.
    pub counterexample: Option<String>,
}

impl IdentityVerdict {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct QIdentityReport {
    pub q: u64,
    pub l_max: i64,
    pub pascal: IdentityVerdict,
    pub alternating: IdentityVerdict,
    pub shifted_alternating: IdentityVerdict,
}

impl QIdentityReport {
    pub fn all_passed(&self) -> bool {
        self.pascal.passed() && self.alternating.passed() && self.shifted_alternating.passed()
    }

    pub fn verdicts(&self) -> [&IdentityVerdict; 3] {
        [&self.pascal, &self.alternating, &self.shifted_alternating]
    }
}

fn sign(j: i64) -> BigRational {
    if j % 2 == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

fn qb(l: i64, n: i64, q: u64) -> BigRational {
    BigRational::from_integer(q_binomial(l, n, q))
}

/// `sum_{j=0}^{l} (-1)^j q^{C(j,2)} [l choose j]_q`.
pub fn alternating_sum(l: i64, q: u64) -> BigRational {
    (0..=l)
        .map(|j| sign(j) * q_pow(q, choose2(j)) * qb(l, j, q))
        .fold(BigRational::zero(), |a, b| a + b)
}

/// `sum_{j=0}^{l} (-1)^j q^{C(j,2) - j} [l choose j]_q`.
pub fn shifted_alternating_sum(l: i64, q: u64) -> BigRational {
    (0..=l)
        .map(|j| sign(j) * q_pow(q, choose2(j) - j) * qb(l, j, q))
        .fold(BigRational::zero(), |a, b| a + b)
}

pub fn verify_q_identities(l_max: i64, q: u64) -> Result<QIdentityReport> {
    if l_max < 2 {
        return Err(Error::InvalidParameters(format!("l_max must be >= 2, got {l_max}")));
    }
    if q < 2 {
        return Err(Error::InvalidParameters(format!("q must be >= 2, got {q}")));
    }

    let mut pascal = IdentityVerdict {
        name: "pascal",
        cases_checked: 0,
        counterexample: None,
    };
    for l in 0..=l_max {
        for j in 0..=l {
            if l == 0 && j == 0 {
                continue;
            }
            pascal.cases_checked += 1;
            let lhs = q_binomial(l, j, q);
            let rhs = BigInt::from(q).pow(j as u32) * q_binomial(l - 1, j, q) + q_binomial(l - 1, j - 1, q);
            if lhs != rhs && pascal.counterexample.is_none() {
                pascal.counterexample = Some(format!("l={l} j={j}: {lhs} != {rhs}"));
            }
        }
    }

    let mut alternating = IdentityVerdict {
        name: "alternating",
        cases_checked: 0,
        counterexample: None,
    };
    for l in 0..=l_max {
        alternating.cases_checked += 1;
        let s = alternating_sum(l, q);
        let want = if l == 0 { BigRational::one() } else { BigRational::zero() };
        if s != want && alternating.counterexample.is_none() {
            alternating.counterexample = Some(format!("l={l}: sum is {s}, expected {want}"));
        }
    }

    let mut shifted = IdentityVerdict {
        name: "shifted_alternating",
        cases_checked: 0,
        counterexample: None,
    };
    for l in 2..=l_max {
        shifted.cases_checked += 1;
        let s = shifted_alternating_sum(l, q);
        if !s.is_zero() && shifted.counterexample.is_none() {
            shifted.counterexample = Some(format!("l={l}: sum is {s}, expected 0"));
        }
    }

    Ok(QIdentityReport {
        q,
        l_max,
        pascal,
        alternating,
        shifted_alternating: shifted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternating_sum_examples() {
        assert_eq!(alternating_sum(0, 2), BigRational::one());
        assert_eq!(alternating_sum(3, 2), BigRational::zero());
        assert_eq!(shifted_alternating_sum(2, 3), BigRational::zero());
        // l = 1: 1 - q^{-1} != 0, which is why the shifted identity starts at 2
        assert_eq!(
            shifted_alternating_sum(1, 2),
            BigRational::new(1.into(), 2.into())
        );
    }

    #[test]
    fn full_suite_passes() {
        for q in [2, 3, 5] {
            let rep = verify_q_identities(12, q).unwrap();
            assert!(rep.all_passed(), "{rep:?}");
            assert_eq!(rep.pascal.cases_checked, (13 * 14) / 2 - 1);
            assert_eq!(rep.shifted_alternating.cases_checked, 11);
        }
    }

    #[test]
    fn rejects_small_lmax() {
        assert!(verify_q_identities(1, 2).is_err());
    }
}
