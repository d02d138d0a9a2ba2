use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::graph::GraphContext;
use super::params::{a_closed, b_closed, c_closed, valency};
use crate::check::CheckList;
use crate::error::Result;
use crate::exactla::mat_product;

#[derive(Clone, Debug)]
pub struct IntersectionNumbers {
    pub k: BigInt,
    pub b: Vec<BigInt>,
    pub c: Vec<BigInt>,
    pub a: Vec<BigInt>,
    /// `p[h][i][j]`, read off `A_i A_j = Σ_h p^h_{ij} A_h`.
    pub p: Vec<Vec<Vec<BigInt>>>,
    pub checks: CheckList,
}

/// Counts `p^h_{ij}` from exact products of distance matrices and compares
/// the resulting `k, b_i, c_i, a_i` with their closed forms.
pub fn intersection_numbers(gc: &GraphContext) -> Result<IntersectionNumbers> {
    let (q, n, d) = (gc.q(), gc.n(), gc.d());
    let nv = gc.n_vertices();
    let x = gc.x_vertex();
    let reps: Vec<usize> = (0..=d)
        .map(|h| (0..nv).find(|&z| gc.dist(x, z) == h).expect("every distance occurs"))
        .collect();
    let a_mats: Vec<_> = (0..=d).map(|i| gc.distance_matrix(i)).collect();
    let mut checks = CheckList::new();
    let mut p = vec![vec![vec![BigInt::zero(); d + 1]; d + 1]; d + 1];
    let mut bad_expansion = None;
    let mut bad_integrality = None;
    for i in 0..=d {
        for j in i..=d {
            let prod = mat_product(&a_mats[i], &a_mats[j])?;
            let coeffs: Vec<BigRational> = (0..=d).map(|h| prod.get(x, reps[h])).collect();
            for h in 0..=d {
                let c = &coeffs[h];
                if (!c.is_integer() || c.is_negative()) && bad_integrality.is_none() {
                    bad_integrality = Some(format!("p^{h}_{{{i},{j}}} = {c}"));
                }
                p[h][i][j] = c.to_integer();
                p[h][j][i] = c.to_integer();
            }
            let ok = (0..nv).into_par_iter().all(|y| {
                let mut row = vec![BigRational::zero(); nv];
                for (z, v) in prod.row_nonzeros(y) {
                    row[z] = v.clone();
                }
                (0..nv).all(|z| row[z] == coeffs[gc.dist(y, z)])
            });
            if !ok && bad_expansion.is_none() {
                bad_expansion = Some(format!("A_{i} A_{j}"));
            }
        }
    }
    checks.expect(
        "A_i A_j = sum_h p^h_ij A_h",
        bad_expansion.is_none(),
        bad_expansion.unwrap_or_default(),
    );
    checks.expect(
        "p^h_ij are nonnegative integers",
        bad_integrality.is_none(),
        bad_integrality.unwrap_or_default(),
    );

    let k = p[0][1][1].clone();
    let b: Vec<BigInt> = (0..=d).map(|i| if i < d { p[i][1][i + 1].clone() } else { BigInt::zero() }).collect();
    let c: Vec<BigInt> = (0..=d).map(|i| if i > 0 { p[i][1][i - 1].clone() } else { BigInt::zero() }).collect();
    let a: Vec<BigInt> = (0..=d).map(|i| p[i][1][i].clone()).collect();

    checks.expect_eq("k = q[D][N-D]", valency(q, n, d), k.clone());
    for i in 0..=d {
        checks.expect_eq(format!("b_{i} = q^(2i+1)[D-i][N-D-i]"), b_closed(q, n, d, i), b[i].clone());
        checks.expect_eq(format!("c_{i} = [i]^2"), c_closed(q, i), c[i].clone());
        checks.expect_eq(format!("a_{i} = k - b_{i} - c_{i}"), a_closed(q, n, d, i), a[i].clone());
    }
    checks.expect_eq("c_1 = 1", BigInt::from(1), c[1].clone());
    checks.expect_eq("a_0 = 0", BigInt::zero(), a[0].clone());
    Ok(IntersectionNumbers { k, b, c, a, p, checks })
}
