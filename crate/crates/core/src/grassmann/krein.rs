use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::spectral::SpectralSystem;
use crate::check::CheckList;
use crate::error::Result;
use crate::exactla::{hadamard, trace_of_product, ExactMatrix};

/// Up to this many vertices the Hadamard products are also formed as matrices.
pub const FULL_KREIN_CHECK_MAX: usize = 200;

#[derive(Clone, Debug)]
pub struct KreinReport {
    /// `krein[h][i][j] = q^h_{ij}`.
    pub krein: Vec<Vec<Vec<BigRational>>>,
    pub checks: CheckList,
}

impl KreinReport {
    pub fn get(&self, h: usize, i: usize, j: usize) -> &BigRational {
        &self.krein[h][i][j]
    }
}

/// Solves `E_i ∘ E_j = |X|^-1 Σ_h q^h_{ij} E_h` and checks the Q-polynomial
/// vanishing pattern for the ordering `E_0, ..., E_D`.
///
/// `q^h_{ij} = |X| tr((E_i ∘ E_j) E_h) / m_h`. The trace is summed over
/// distance classes, which is exact once every `E_i` has been checked to be
/// constant on them.
pub fn krein_qpoly_check(ss: &SpectralSystem) -> Result<KreinReport> {
    let d = ss.d();
    let nv = BigRational::from_integer(ss.n_vertices().into());
    let vals = ss.class_values();
    let sizes = ss.class_sizes();
    let trace = |i: usize, j: usize, h: usize| -> BigRational {
        let per_vertex = (0..=d).fold(BigRational::zero(), |acc, l| {
            acc + BigRational::from_integer(sizes[l].into()) * &vals[i][l] * &vals[j][l] * &vals[h][l]
        });
        &nv * per_vertex
    };
    let mut checks = CheckList::new();
    let mut krein = vec![vec![vec![BigRational::zero(); d + 1]; d + 1]; d + 1];
    for h in 0..=d {
        let m_h = BigRational::from_integer(ss.mult()[h].into());
        for i in 0..=d {
            for j in 0..=d {
                krein[h][i][j] = &nv * trace(i, j, h) / &m_h;
            }
        }
    }

    let mut bad_recon = None;
    for i in 0..=d {
        for j in i..=d {
            for l in 0..=d {
                let lhs = &vals[i][l] * &vals[j][l];
                let rhs = (0..=d).fold(BigRational::zero(), |acc, h| acc + &krein[h][i][j] * &vals[h][l]) / &nv;
                if lhs != rhs && bad_recon.is_none() {
                    bad_recon = Some(format!("E_{i} ∘ E_{j} at distance {l}"));
                }
            }
        }
    }
    checks.expect(
        "E_i ∘ E_j = |X|^-1 sum_h q^h_ij E_h",
        bad_recon.is_none(),
        bad_recon.unwrap_or_default(),
    );

    if ss.n_vertices() <= FULL_KREIN_CHECK_MAX {
        let mut bad = None;
        for i in 0..=d {
            for j in i..=d {
                let had = hadamard(ss.idempotent(i), ss.idempotent(j))?;
                let mut rhs = ExactMatrix::zeros(ss.n_vertices(), ss.n_vertices());
                for h in 0..=d {
                    rhs = rhs.add_scaled(&(&krein[h][i][j] / &nv), ss.idempotent(h))?;
                    let tr = trace_of_product(&had, ss.idempotent(h))?;
                    if tr != trace(i, j, h) && bad.is_none() {
                        bad = Some(format!("trace for (h,i,j)=({h},{i},{j})"));
                    }
                }
                if had != rhs && bad.is_none() {
                    bad = Some(format!("E_{i} ∘ E_{j} as matrices"));
                }
            }
        }
        checks.expect(
            "Hadamard expansion on full matrices",
            bad.is_none(),
            bad.unwrap_or_default(),
        );
    }

    let mut bad_symmetry = None;
    let mut bad_zero = None;
    let mut bad_nonzero = None;
    let mut negative = None;
    for h in 0..=d {
        for i in 0..=d {
            for j in 0..=d {
                let v = &krein[h][i][j];
                if *v != krein[h][j][i] && bad_symmetry.is_none() {
                    bad_symmetry = Some(format!("({h},{i},{j})"));
                }
                if v.is_negative() && negative.is_none() {
                    negative = Some(format!("q^{h}_{{{i},{j}}} = {v}"));
                }
                let trip = [h, i, j];
                let total: usize = trip.iter().sum();
                let exceeds = trip.iter().any(|&t| 2 * t > total);
                let equals = trip.iter().any(|&t| 2 * t == total);
                if exceeds && !v.is_zero() && bad_zero.is_none() {
                    bad_zero = Some(format!("q^{h}_{{{i},{j}}} = {v}"));
                }
                if equals && v.is_zero() && bad_nonzero.is_none() {
                    bad_nonzero = Some(format!("q^{h}_{{{i},{j}}} = 0"));
                }
            }
        }
    }
    checks.expect("q^h_ij = q^h_ji", bad_symmetry.is_none(), bad_symmetry.unwrap_or_default());
    checks.expect(
        "q^h_ij = 0 when one index exceeds the sum of the other two",
        bad_zero.is_none(),
        bad_zero.unwrap_or_default(),
    );
    checks.expect(
        "q^h_ij != 0 when one index equals the sum of the other two",
        bad_nonzero.is_none(),
        bad_nonzero.unwrap_or_default(),
    );
    checks.observe(
        "Krein parameters nonnegative",
        "nonnegative",
        negative.unwrap_or_else(|| "nonnegative".into()),
    );
    let e0_row_ok = (0..=d).all(|h| (0..=d).all(|j| krein[h][0][j] == BigRational::from_integer(BigInt::from(u8::from(h == j)))));
    checks.expect("q^h_0j = δ_hj", e0_row_ok, "E_0 ∘ E_j differs from |X|^-1 E_j");
    Ok(KreinReport { krein, checks })
}
