use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grassmann::TModuleParams;
use crate::qfield::q_binomial;

/// Type `(α, β, ρ)` of an irreducible H-module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ModuleType {
    pub alpha: i64,
    pub beta: i64,
    pub rho: i64,
}

/// Which of the three conversion cases a type falls in, by `β - α`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ConversionCase {
    /// `β - α <= 0`.
    C1,
    /// `0 < β - α <= N - 2D`.
    C2,
    /// `N - 2D < β - α`.
    C3,
}

impl ModuleType {
    pub fn new(alpha: i64, beta: i64, rho: i64) -> Self {
        Self { alpha, beta, rho }
    }

    /// Alpha-dominant type `(α, 0, 0)`.
    pub fn alpha_dominant(alpha: i64) -> Self {
        Self::new(alpha, 0, 0)
    }

    pub fn validate(&self, n: usize, d: usize) -> Result<()> {
        let (n, d) = (n as i64, d as i64);
        let Self { alpha, beta, rho } = *self;
        let ok = rho >= 0 && alpha >= 0 && 2 * alpha <= d - rho && beta >= 0 && 2 * beta <= n - d - rho;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidType((alpha, beta, rho)))
        }
    }

    pub fn case(&self, n: usize, d: usize) -> ConversionCase {
        let gap = self.beta - self.alpha;
        if gap <= 0 {
            ConversionCase::C1
        } else if gap <= n as i64 - 2 * d as i64 {
            ConversionCase::C2
        } else {
            ConversionCase::C3
        }
    }

    /// Every valid type for `(N, D)`.
    pub fn all(n: usize, d: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for rho in 0..=d as i64 {
            for alpha in 0..=(d as i64 - rho) / 2 {
                for beta in 0..=(n as i64 - d as i64 - rho) / 2 {
                    out.push(Self::new(alpha, beta, rho));
                }
            }
        }
        out
    }
}

/// Endpoint, dual endpoint, diameter and auxiliary parameter of the
/// T-module obtained from an H-module of type `mt`.
pub fn type_to_parameters(mt: ModuleType, n: usize, d: usize) -> Result<TModuleParams> {
    mt.validate(n, d)?;
    let ModuleType { alpha, beta, rho } = mt;
    let (cn, cd) = (n as i64, d as i64);
    Ok(match mt.case(n, d) {
        ConversionCase::C1 => TModuleParams::new(rho + alpha, rho + alpha + beta, cd - rho - 2 * alpha, rho),
        ConversionCase::C2 => TModuleParams::new(rho + beta, rho + alpha + beta, cd - rho - alpha - beta, rho + alpha - beta),
        ConversionCase::C3 => TModuleParams::new(rho + beta, rho + alpha + beta, cn - cd - rho - 2 * beta, rho - cn + 2 * cd),
    })
}

/// `μ_α = [D choose α]_q - [D choose α-1]_q`, the number of alpha-dominant
/// summands of gap `α`.
pub fn alpha_dominant_multiplicity(alpha: i64, q: u64, d: usize) -> BigInt {
    q_binomial(d as i64, alpha, q) - q_binomial(d as i64, alpha - 1, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn conversion_examples() {
        assert_eq!(type_to_parameters(ModuleType::new(0, 0, 0), 5, 2).unwrap(), TModuleParams::new(0, 0, 2, 0));
        for alpha in 0..=2 {
            assert_eq!(
                type_to_parameters(ModuleType::alpha_dominant(alpha), 9, 4).unwrap(),
                TModuleParams::new(alpha, alpha, 4 - 2 * alpha, 0)
            );
        }
        for beta in 1..=3 {
            assert_eq!(
                type_to_parameters(ModuleType::new(0, beta, 0), 9, 3).unwrap(),
                TModuleParams::new(beta, beta, 3 - beta, -beta)
            );
        }
        assert!(matches!(type_to_parameters(ModuleType::new(2, 0, 0), 5, 2), Err(Error::InvalidType(_))));
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(alpha_dominant_multiplicity(0, 3, 4), 1.into());
        assert_eq!(alpha_dominant_multiplicity(1, 2, 2), 2.into());
        for (q, d) in [(2u64, 4usize), (3, 5), (5, 6)] {
            let total: BigInt = (0..=(d as i64) / 2).map(|a| alpha_dominant_multiplicity(a, q, d)).sum();
            assert_eq!(total, q_binomial(d as i64, d as i64 / 2, q));
        }
    }

    proptest! {
        #[test]
        fn converted_parameters_are_admissible(d in 1usize..7, extra in 0usize..6, pick in 0usize..1000) {
            let n = 2 * d + extra;
            let types = ModuleType::all(n, d);
            let mt = types[pick % types.len()];
            let p = type_to_parameters(mt, n, d).unwrap();
            prop_assert!(p.validate(n, d).is_ok(), "{:?} -> {:?}: {:?}", mt, p, p.validate(n, d));
        }
    }
}
