//! Closed-form parameters of `J_q(N,D)`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::qfield::{q_int, q_int_int, q_pow};

fn qi(l: usize, q: u64) -> BigInt {
    q_int_int(l as u32, q)
}

/// `k = q[D][N-D]`.
pub fn valency(q: u64, n: usize, d: usize) -> BigInt {
    BigInt::from(q) * qi(d, q) * qi(n - d, q)
}

/// `b_i = q^{2i+1}[D-i][N-D-i]`, zero at `i = D`.
pub fn b_closed(q: u64, n: usize, d: usize, i: usize) -> BigInt {
    if i >= d {
        return BigInt::from(0);
    }
    BigInt::from(q).pow(2 * i as u32 + 1) * qi(d - i, q) * qi(n - d - i, q)
}

/// `c_i = [i]^2`.
pub fn c_closed(q: u64, i: usize) -> BigInt {
    let c = qi(i, q);
    &c * &c
}

pub fn a_closed(q: u64, n: usize, d: usize, i: usize) -> BigInt {
    valency(q, n, d) - b_closed(q, n, d, i) - c_closed(q, i)
}

/// `θ_i = q[D][N-D] - [i][N-i+1]`.
pub fn eigenvalue(q: u64, n: usize, d: usize, i: usize) -> BigInt {
    valency(q, n, d) - qi(i, q) * qi(n + 1 - i, q)
}

/// Dual eigenvalue `θ*_i` of the Q-polynomial ordering `E_0, ..., E_D`.
pub fn dual_eigenvalue(q: u64, n: usize, d: usize, i: usize) -> BigRational {
    let (n, d) = (n as i64, d as i64);
    let qr = BigRational::from_integer(q.into());
    let denom = (&qr - BigRational::from_integer(1.into())) * q_int(d, q) * q_int(n - d, q);
    let first = &qr * q_int(n - 1, q) * (q_int(d, q) + q_int(n - d, q)) / &denom;
    let second = &qr * q_int(n, q) * q_int(n - 1, q) / &denom * q_pow(q, -(i as i64));
    second - first
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j2_5_2_values() {
        assert_eq!(valency(2, 5, 2), 42.into());
        assert_eq!(b_closed(2, 5, 2, 1), 24.into());
        assert_eq!(c_closed(2, 2), 9.into());
        let theta: Vec<BigInt> = (0..=2).map(|i| eigenvalue(2, 5, 2, i)).collect();
        assert_eq!(theta, vec![42.into(), 11.into(), (-3).into()]);
        assert_eq!(dual_eigenvalue(2, 5, 2, 0), BigRational::from_integer(30.into()));
    }

    #[test]
    fn endpoint_values() {
        for (q, n, d) in [(2, 5, 2), (3, 7, 3), (5, 4, 1)] {
            assert_eq!(c_closed(q, 1), 1.into());
            assert_eq!(b_closed(q, n, d, d), 0.into());
            assert_eq!(a_closed(q, n, d, 0), 0.into());
            assert_eq!(eigenvalue(q, n, d, 0), valency(q, n, d));
        }
    }
}
