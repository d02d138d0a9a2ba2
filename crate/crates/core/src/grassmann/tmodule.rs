use num_rational::BigRational;
use serde::Serialize;

use super::params::valency;
use crate::error::{Error, Result};
use crate::qfield::{q_int, q_pow};

/// Endpoint `r`, dual endpoint `t`, diameter `d` and auxiliary parameter `e`
/// of an irreducible T-module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TModuleParams {
    pub r: i64,
    pub t: i64,
    pub d: i64,
    pub e: i64,
}

impl TModuleParams {
    pub fn new(r: i64, t: i64, d: i64, e: i64) -> Self {
        Self { r, t, d, e }
    }

    /// The primary module: `(0, 0, D, 0)`.
    pub fn primary(diameter: usize) -> Self {
        Self::new(0, 0, diameter as i64, 0)
    }

    pub fn displacement(&self, diameter: usize) -> i64 {
        self.r + self.t - diameter as i64 + self.d
    }

    fn tuple(&self) -> (i64, i64, i64, i64) {
        (self.r, self.t, self.d, self.e)
    }

    /// Checks the four admissibility conditions for `J_q(N,D)`.
    pub fn validate(&self, n: usize, diameter: usize) -> Result<()> {
        let (cap_n, cap_d) = (n as i64, diameter as i64);
        let Self { r, t, d, e } = *self;
        let fail = |why: &str| Err(Error::InvalidQuadruple(self.tuple(), why.to_string()));
        let half = cap_d - d;
        if !(half >= 0 && half <= 2 * r && r <= t && t <= cap_d - d && d <= cap_d) {
            return fail("need 0 <= (D-d)/2 <= r <= t <= D-d <= D");
        }
        if (e + d + cap_d).rem_euclid(2) != 0 {
            return fail("e + d + D must be even");
        }
        if e.abs() > 2 * r - cap_d + d {
            return fail("need |e| <= 2r - D + d");
        }
        let first = e + cap_d - 2 * r;
        let second = (cap_d - t).min(e + cap_d - 2 * r + 2 * (cap_n - 2 * cap_d));
        if d != first && d != second {
            return fail("d must equal e+D-2r or min{D-t, e+D-2r+2(N-2D)}");
        }
        Ok(())
    }
}

/// `(a_i(W), b_i(W), c_i(W))` for a module with the given parameters.
pub fn tmodule_intersection_numbers(
    q: u64,
    n: usize,
    diameter: usize,
    p: TModuleParams,
    i: i64,
) -> Result<(BigRational, BigRational, BigRational)> {
    p.validate(n, diameter)?;
    if !(0..=p.d).contains(&i) {
        return Err(Error::InvalidParameters(format!("index {i} outside 0..={}", p.d)));
    }
    let (cap_n, cap_d) = (n as i64, diameter as i64);
    let TModuleParams { r, t, d, e } = p;
    // (D - d - e) is even by the parity condition
    let s = (cap_d - d - e) / 2;
    let b = if i < d {
        q_pow(q, 2 * i + 1 + r + s) * q_int(d - i, q) * q_int(cap_n - i - r - t - (cap_d + d - e) / 2, q)
    } else {
        BigRational::from_integer(0.into())
    };
    let c = if i > 0 {
        q_pow(q, t) * q_int(i, q) * q_int(i + r - t + s, q)
    } else {
        BigRational::from_integer(0.into())
    };
    let a = BigRational::from_integer(valency(q, n, diameter)) - q_int(t, q) * q_int(cap_n + 1 - t, q) - &b - &c;
    Ok((a, b, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::params::{a_closed, b_closed, c_closed};

    #[test]
    fn primary_module_matches_graph() {
        for (q, n, d) in [(2u64, 5usize, 2usize), (3, 7, 3), (2, 6, 2), (5, 9, 4)] {
            let p = TModuleParams::primary(d);
            p.validate(n, d).unwrap();
            assert_eq!(p.displacement(d), 0);
            for i in 0..=d {
                let (a, b, c) = tmodule_intersection_numbers(q, n, d, p, i as i64).unwrap();
                assert_eq!(a, BigRational::from_integer(a_closed(q, n, d, i)));
                assert_eq!(b, BigRational::from_integer(b_closed(q, n, d, i)));
                assert_eq!(c, BigRational::from_integer(c_closed(q, i)));
            }
        }
    }

    #[test]
    fn rejects_bad_quadruples() {
        assert!(TModuleParams::new(0, 0, 1, 0).validate(5, 2).is_err());
        assert!(TModuleParams::new(1, 0, 1, 1).validate(5, 2).is_err());
        assert!(tmodule_intersection_numbers(2, 5, 2, TModuleParams::primary(2), 3).is_err());
    }
}
