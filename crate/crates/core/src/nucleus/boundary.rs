use num_bigint::BigInt;
use serde::Serialize;

use crate::check::CheckList;
use crate::error::{Error, Result};
use crate::grassmann::{spectral_system, GraphContext};

use crate::qfield::q_binomial;

use super::compute::compute_nucleus;
use super::family::alpha_family;

/// The nucleus computed at `N = 2D`, where every assertion is recorded as an observation.
#[derive(Clone, Debug, Serialize)]
pub struct BoundaryReport {
    pub q: u64,
    pub d: usize,
    pub nucleus_dims: Vec<usize>,
    pub mult_r: Vec<i64>,
    pub n_alpha: usize,
    pub total_dim: usize,
    /// `Σ_i [D, i]_q`, the dimension predicted when `N > 2D`.
    pub formula_total: String,
    pub matches_formula: bool,
    pub checks: CheckList,
}

pub fn boundary_case_report(gc: &GraphContext) -> Result<BoundaryReport> {
    if !gc.is_boundary() {
        return Err(Error::InvalidParameters(format!(
            "boundary report needs N = 2D, got N={} D={}",
            gc.n(),
            gc.d()
        )));
    }
    let ss = spectral_system(gc)?;
    let nucleus = compute_nucleus(&ss)?;
    let fam = alpha_family(gc);
    let formula_total: BigInt = (0..=gc.d() as i64).map(|i| q_binomial(gc.d() as i64, i, gc.q())).sum();
    let mut checks = CheckList::new();
    checks.extend(ss.checks().clone());
    checks.extend(nucleus.checks().clone());
    checks.extend(fam.checks().clone());
    Ok(BoundaryReport {
        q: gc.q(),
        d: gc.d(),
        nucleus_dims: nucleus.dims.clone(),
        mult_r: nucleus.mult_r.clone(),
        n_alpha: fam.len(),
        total_dim: nucleus.total_dim,
        matches_formula: BigInt::from(nucleus.total_dim) == formula_total,
        formula_total: formula_total.to_string(),
        checks: checks.into_observations(),
    })
}
