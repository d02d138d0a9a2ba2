use num_bigint::BigInt;
use num_rational::BigRational;

use crate::check::CheckList;
use crate::error::Result;
use crate::exactla::{intersect_column_spaces, linear_combination, mat_product, rank, EchelonBasis, ExactMatrix, ExactVector};
use crate::grassmann::SpectralSystem;
use crate::halgebra::alpha_dominant_multiplicity;
use crate::qfield::q_binomial;

/// `N_i = (E*_0 V + … + E*_i V) ∩ (E_0 V + … + E_{D-i} V)` for `0 ≤ i ≤ D`.
#[derive(Clone, Debug)]
pub struct NucleusData {
    pub bases: Vec<Vec<ExactVector>>,
    pub dims: Vec<usize>,
    /// `dim N_r - dim N_{r-1}` for `0 ≤ r ≤ ⌊D/2⌋`.
    pub mult_r: Vec<i64>,
    pub total_dim: usize,
    checks: CheckList,
}

impl NucleusData {
    pub fn checks(&self) -> &CheckList {
        &self.checks
    }

    /// The concatenated bases of every `N_i`.
    pub fn basis(&self) -> Vec<ExactVector> {
        self.bases.iter().flatten().cloned().collect()
    }
}

/// A basis of `E_0 V + … + E_top V` chosen among the columns of the sum of those idempotents.
fn eigenspace_sum_basis(ss: &SpectralSystem, top: usize) -> Result<Vec<ExactVector>> {
    let n = ss.n_vertices();
    let target: usize = ss.mult()[..=top].iter().sum();
    if target == n {
        return Ok((0..n).map(|y| ExactVector::unit(n, y)).collect());
    }
    let one = BigRational::from_integer(1.into());
    let f = if top == 0 {
        ss.idempotent(0).clone()
    } else {
        let terms: Vec<(BigRational, &ExactMatrix)> = (0..=top).map(|j| (one.clone(), ss.idempotent(j))).collect();
        linear_combination(&terms)?
    };
    let mut echelon = EchelonBasis::new(n);
    let mut out = Vec::with_capacity(target);
    for y in 0..n {
        if echelon.rank() == target {
            break;
        }
        let col = f.column(y);
        if echelon.insert(&col)? {
            out.push(col);
        }
    }
    Ok(out)
}

pub fn compute_nucleus(ss: &SpectralSystem) -> Result<NucleusData> {
    let (q, d, n) = (ss.q(), ss.d(), ss.n_vertices());
    let mut bases = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let local: Vec<ExactVector> = (0..n).filter(|&y| ss.dist_from_x(y) <= i).map(|y| ExactVector::unit(n, y)).collect();
        let spectral = eigenspace_sum_basis(ss, d - i)?;
        bases.push(intersect_column_spaces(&local, &spectral)?);
    }
    let dims: Vec<usize> = bases.iter().map(Vec::len).collect();
    let total_dim = dims.iter().sum();
    let mult_r: Vec<i64> = (0..=d / 2)
        .map(|r| dims[r] as i64 - if r == 0 { 0 } else { dims[r - 1] as i64 })
        .collect();

    let mut checks = CheckList::new();
    for (i, &dim) in dims.iter().enumerate() {
        checks.expect_eq(format!("dim N_{i} = [D, {i}]_q"), q_binomial(d as i64, i as i64, q), BigInt::from(dim));
    }
    let all: Vec<ExactVector> = bases.iter().flatten().cloned().collect();
    let joined = ExactMatrix::from_columns(n, &all)?;
    checks.expect_eq("sum of N_i is direct", total_dim, rank(&joined));
    checks.expect_eq(
        "dim N = Σ_i [D, i]_q",
        (0..=d as i64).map(|i| q_binomial(d as i64, i, q)).sum::<BigInt>(),
        BigInt::from(total_dim),
    );
    for (r, &m) in mult_r.iter().enumerate() {
        checks.expect_eq(
            format!("mult_{r} = [D,{r}]_q - [D,{}]_q", r as i64 - 1),
            alpha_dominant_multiplicity(r as i64, q, d),
            BigInt::from(m),
        );
    }

    if total_dim > 0 {
        for i in 0..=d {
            let spectral = mat_product(ss.idempotent(i), &joined)?;
            checks.expect_eq(format!("dim E_{i}N = [D, {i}]_q"), q_binomial(d as i64, i as i64, q), BigInt::from(rank(&spectral)));
            let rows: Vec<Vec<(usize, BigRational)>> = (0..n)
                .map(|y| {
                    if ss.dist_from_x(y) == i {
                        joined.row_nonzeros(y).into_iter().map(|(c, v)| (c, v.clone())).collect()
                    } else {
                        Vec::new()
                    }
                })
                .collect();
            let local = ExactMatrix::from_sparse_rows(n, total_dim, rows)?;
            checks.expect_eq(format!("dim E*_{i}N = [D, {i}]_q"), q_binomial(d as i64, i as i64, q), BigInt::from(rank(&local)));
        }
    }

    Ok(NucleusData {
        bases,
        dims,
        mult_r,
        total_dim,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::{build_graph, spectral_system, GraphOptions};

    #[test]
    fn eigenspace_sums() {
        let gc = build_graph(2, 3, 1, &GraphOptions::default()).unwrap();
        let ss = spectral_system(&gc).unwrap();
        let w0 = eigenspace_sum_basis(&ss, 0).unwrap();
        assert_eq!(w0.len(), 1);
        assert!(w0[0].entries().iter().all(|v| v == w0[0].get(0)));
        assert_eq!(eigenspace_sum_basis(&ss, 1).unwrap().len(), 7);
    }
}
