use serde::Serialize;

use crate::check::CheckList;
use crate::error::Result;
use crate::exactla::{mat_product, rank, EchelonBasis, ExactMatrix, ExactVector};

use super::compute::NucleusData;
use super::family::AlphaFamily;

#[derive(Clone, Debug, Serialize)]
pub struct BasisStatus {
    pub size: usize,
    pub rank: usize,
    pub inside_nucleus: bool,
    pub is_basis: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BasesReport {
    pub vee: BasisStatus,
    pub nuc: BasisStatus,
    /// `ζ M = M ζ = I` for the two transition matrices.
    pub transitions_inverse: bool,
    #[serde(skip)]
    pub checks: CheckList,
}

fn status(family: &[ExactVector], nucleus: &EchelonBasis, dim: usize, nv: usize) -> Result<BasisStatus> {
    let r = rank(&ExactMatrix::from_columns(nv, family)?);
    let mut inside = true;
    for v in family {
        inside &= nucleus.contains(v)?;
    }
    Ok(BasisStatus {
        size: family.len(),
        rank: r,
        inside_nucleus: inside,
        is_basis: inside && r == family.len() && r == dim,
    })
}

/// Checks that `{α^∨}` and `{α^N}` are bases of `N` and that the two
/// transition matrices between them are mutually inverse.
pub fn verify_bases(nucleus: &NucleusData, fam: &AlphaFamily, q: u64) -> Result<BasesReport> {
    let nv = fam.vee.first().map_or(0, ExactVector::len);
    let mut span = EchelonBasis::new(nv);
    for v in nucleus.basis() {
        span.insert(&v)?;
    }
    let vee = status(&fam.vee, &span, nucleus.total_dim, nv)?;
    let nuc = status(&fam.nuc, &span, nucleus.total_dim, nv)?;

    let mut outside = None;
    for (i, basis) in nucleus.bases.iter().enumerate() {
        let mut span_i = EchelonBasis::new(nv);
        for v in basis {
            span_i.insert(v)?;
        }
        for a in fam.of_dim(nucleus.bases.len() - 1 - i) {
            if !span_i.contains(&fam.vee[a])? {
                outside.get_or_insert(a);
            }
        }
    }

    let zeta = fam.zeta_matrix();
    let mobius = fam.mobius_matrix(q);
    let forward = mat_product(&zeta, &mobius)?;
    let backward = mat_product(&mobius, &zeta)?;
    let transitions_inverse = forward.is_identity() && backward.is_identity();

    // Column a of V equals Σ_b ζ[a][b] (column b of N).
    let as_columns = |fam: &[ExactVector]| ExactMatrix::from_columns(nv, fam);
    let vee_m = as_columns(&fam.vee)?;
    let nuc_m = as_columns(&fam.nuc)?;
    let vee_from_nuc = mat_product(&nuc_m, &zeta.transpose())? == vee_m;
    let nuc_from_vee = mat_product(&vee_m, &mobius.transpose())? == nuc_m;

    let mut checks = CheckList::new();
    checks.expect_eq("{α^∨} independent", vee.size, vee.rank);
    checks.expect("{α^∨} ⊆ N", vee.inside_nucleus, "outside N");
    checks.expect_eq("|{α^∨}| = dim N", nucleus.total_dim, vee.size);
    checks.expect_eq("{α^N} independent", nuc.size, nuc.rank);
    checks.expect("{α^N} ⊆ N", nuc.inside_nucleus, "outside N");
    checks.expect_eq("|{α^N}| = dim N", nucleus.total_dim, nuc.size);
    checks.expect(
        "α^∨ ∈ N_(D-dim α)",
        outside.is_none(),
        outside.map_or_else(String::new, |a| format!("fails at α #{a}")),
    );
    checks.expect("transition matrices mutually inverse", transitions_inverse, "ζM or Mζ is not I");
    checks.expect("α^∨ basis = α^N basis · ζ^T", vee_from_nuc, "mismatch");
    checks.expect("α^N basis = α^∨ basis · M^T", nuc_from_vee, "mismatch");
    Ok(BasesReport {
        vee,
        nuc,
        transitions_inverse,
        checks,
    })
}
