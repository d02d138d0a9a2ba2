use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::graph::GraphContext;
use super::params::{dual_eigenvalue, eigenvalue};
use crate::check::CheckList;
use crate::error::{Error, Result};
use crate::exactla::{linear_combination, mat_product, rank, ExactMatrix};

/// Above this many vertices `E_i E_j = δ_ij E_i` is not multiplied out; it
/// then follows from the asserted `A E_i = θ_i E_i` and `Σ E_i = I`.
pub const FULL_PRODUCT_CHECK_MAX: usize = 700;
/// Up to this many vertices `rank E_i` is computed by elimination as well as by trace.
pub const RANK_CHECK_MAX: usize = 200;

#[derive(Clone, Debug)]
pub struct SpectralSystem {
    q: u64,
    n: usize,
    d: usize,
    n_vertices: usize,
    x_vertex: usize,
    theta: Vec<BigInt>,
    theta_star: Vec<BigRational>,
    idempotents: Vec<ExactMatrix>,
    mult: Vec<usize>,
    /// `class_values[i][h]`: the entry of `E_i` at any pair at distance `h`.
    class_values: Vec<Vec<BigRational>>,
    /// Number of vertices at distance `h` from a vertex.
    class_sizes: Vec<usize>,
    /// `∂(x, y)` for every vertex `y`.
    dist_from_x: Vec<usize>,
    a_star: Vec<BigRational>,
    checks: CheckList,
}

fn rat(v: &BigInt) -> BigRational {
    BigRational::from_integer(v.clone())
}

/// `∏_{j ∈ skip^c} (A - θ_j I)` as an exact integer matrix.
fn shifted_product(a: &ExactMatrix, theta: &[BigInt], skip: Option<usize>) -> Result<ExactMatrix> {
    let nv = a.rows();
    let mut acc: Option<ExactMatrix> = None;
    for (j, t) in theta.iter().enumerate() {
        if Some(j) == skip {
            continue;
        }
        let factor = a.shift_diagonal(&rat(t))?;
        acc = Some(match acc {
            None => factor,
            Some(m) => mat_product(&m, &factor)?,
        });
    }
    Ok(acc.unwrap_or_else(|| ExactMatrix::identity(nv)))
}

pub fn spectral_system(gc: &GraphContext) -> Result<SpectralSystem> {
    let (q, n, d) = (gc.q(), gc.n(), gc.d());
    let nv = gc.n_vertices();
    let x = gc.x_vertex();
    let theta: Vec<BigInt> = (0..=d).map(|i| eigenvalue(q, n, d, i)).collect();
    for i in 0..=d {
        for j in 0..i {
            if theta[i] == theta[j] {
                return Err(Error::EigenvalueCollision { i: j, j: i });
            }
        }
    }
    let mut checks = CheckList::new();
    checks.expect(
        "θ_0 > θ_1 > ... > θ_D",
        theta.windows(2).all(|w| w[0] > w[1]),
        format!("{theta:?}"),
    );
    let adj = gc.adjacency_matrix();

    let numerators: Vec<ExactMatrix> = (0..=d)
        .into_par_iter()
        .map(|i| shifted_product(&adj, &theta, Some(i)))
        .collect::<Result<_>>()?;
    let minimal = mat_product(&numerators[0], &adj.shift_diagonal(&rat(&theta[0]))?)?;
    checks.expect("∏_i (A - θ_i I) = 0", minimal.is_zero(), format!("{} nonzero entries", minimal.nnz()));

    let idempotents: Vec<ExactMatrix> = numerators
        .into_par_iter()
        .enumerate()
        .map(|(i, m)| {
            let den = (0..=d)
                .filter(|&j| j != i)
                .fold(BigInt::one(), |acc, j| acc * (&theta[i] - &theta[j]));
            m.scale(&BigRational::new(BigInt::one(), den)).to_dense()
        })
        .collect();

    for (i, e) in idempotents.iter().enumerate() {
        let residual = mat_product(&adj.shift_diagonal(&rat(&theta[i]))?, e)?;
        checks.expect(format!("A E_{i} = θ_{i} E_{i}"), residual.is_zero(), "residual nonzero");
        checks.expect(format!("E_{i} symmetric"), e.is_symmetric(), "asymmetric");
    }
    let one = BigRational::one();
    let sum = linear_combination(&idempotents.iter().map(|e| (one.clone(), e)).collect::<Vec<_>>())?;
    checks.expect("sum of E_i = I", sum.is_identity(), "sum differs from I");
    let mut terms: Vec<(BigRational, &ExactMatrix)> = theta.iter().map(rat).zip(idempotents.iter()).collect();
    terms.push((-one, &adj));
    let recon = linear_combination(&terms)?;
    checks.expect("A = sum of θ_i E_i", recon.is_zero(), "reconstruction differs");
    let inv_n = BigRational::new(BigInt::one(), BigInt::from(nv));
    let e0_ok = (0..nv).all(|y| (0..nv).all(|z| idempotents[0].get(y, z) == inv_n));
    checks.expect("E_0 = |X|^-1 J", e0_ok, "entry differs from 1/|X|");

    if nv <= FULL_PRODUCT_CHECK_MAX {
        let mut bad = None;
        for i in 0..=d {
            for j in i..=d {
                let p = mat_product(&idempotents[i], &idempotents[j])?;
                let ok = if i == j {
                    linear_combination(&[(BigRational::one(), &p), (-BigRational::one(), &idempotents[i])])?.is_zero()
                } else {
                    p.is_zero()
                };
                if !ok && bad.is_none() {
                    bad = Some(format!("E_{i} E_{j}"));
                }
            }
        }
        checks.expect("E_i E_j = δ_ij E_i", bad.is_none(), bad.unwrap_or_default());
    } else {
        checks.observe(
            "E_i E_j = δ_ij E_i",
            "implied by A E_i = θ_i E_i and sum E_i = I",
            "product not formed at this size",
        );
    }

    let mut mult = Vec::with_capacity(d + 1);
    for (i, e) in idempotents.iter().enumerate() {
        let tr = e.trace();
        if !tr.is_integer() {
            checks.expect(format!("trace E_{i} is an integer"), false, tr.to_string());
            mult.push(0);
            continue;
        }
        let m: usize = tr.to_integer().try_into().unwrap_or(0);
        if nv <= RANK_CHECK_MAX {
            checks.expect_eq(format!("rank E_{i} = trace E_{i}"), m, rank(e));
        }
        mult.push(m);
    }
    checks.expect_eq("sum of m_i = |X|", nv, mult.iter().sum());
    checks.expect_eq("m_0 = 1", 1, mult[0]);

    // entries of E_i depend only on the distance
    let dist_from_x: Vec<usize> = (0..nv).map(|y| gc.dist(x, y)).collect();
    let mut reps = vec![usize::MAX; d + 1];
    for (y, &h) in dist_from_x.iter().enumerate() {
        if reps[h] == usize::MAX {
            reps[h] = y;
        }
    }
    let class_values: Vec<Vec<BigRational>> = idempotents
        .iter()
        .map(|e| reps.iter().map(|&z| e.get(x, z)).collect())
        .collect();
    let bm_ok = idempotents.par_iter().enumerate().all(|(i, e)| {
        (0..nv).all(|y| (0..nv).all(|z| e.get(y, z) == class_values[i][gc.dist(y, z)]))
    });
    checks.expect("each E_i is constant on distance classes", bm_ok, "entry varies within a class");
    let class_sizes: Vec<usize> = (0..=d).map(|h| dist_from_x.iter().filter(|&&v| v == h).count()).collect();
    let regular = (0..nv).into_par_iter().all(|y| {
        let mut counts = vec![0usize; d + 1];
        for z in 0..nv {
            counts[gc.dist(y, z)] += 1;
        }
        counts == class_sizes
    });
    checks.expect("|Γ_h(y)| independent of y", regular, "sphere sizes vary");

    let nv_r = BigRational::from_integer(nv.into());
    let a_star: Vec<BigRational> = (0..nv).map(|y| &nv_r * idempotents[1].get(x, y)).collect();
    let theta_star: Vec<BigRational> = (0..=d).map(|h| a_star[reps[h]].clone()).collect();
    let a_star_ok = (0..nv).all(|y| a_star[y] == theta_star[dist_from_x[y]]);
    checks.expect("A* = sum of θ*_i E*_i", a_star_ok, "diagonal of A* not constant on spheres");
    for (i, t) in theta_star.iter().enumerate() {
        checks.expect_eq(format!("θ*_{i} closed form"), dual_eigenvalue(q, n, d, i), t.clone());
    }
    let distinct = (0..=d).all(|i| (0..i).all(|j| theta_star[i] != theta_star[j]));
    checks.expect("θ*_i mutually distinct", distinct, "repeated dual eigenvalue");
    checks.expect_eq("θ*_0 = m_1", BigRational::from_integer(mult[1].into()), theta_star[0].clone());

    Ok(SpectralSystem {
        q,
        n,
        d,
        n_vertices: nv,
        x_vertex: x,
        theta,
        theta_star,
        idempotents,
        mult,
        class_values,
        class_sizes,
        dist_from_x,
        a_star,
        checks,
    })
}

impl SpectralSystem {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn x_vertex(&self) -> usize {
        self.x_vertex
    }

    pub fn theta(&self) -> &[BigInt] {
        &self.theta
    }

    pub fn theta_star(&self) -> &[BigRational] {
        &self.theta_star
    }

    pub fn mult(&self) -> &[usize] {
        &self.mult
    }

    pub fn idempotent(&self, i: usize) -> &ExactMatrix {
        &self.idempotents[i]
    }

    pub fn idempotents(&self) -> &[ExactMatrix] {
        &self.idempotents
    }

    pub fn class_values(&self) -> &[Vec<BigRational>] {
        &self.class_values
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn dist_from_x(&self, y: usize) -> usize {
        self.dist_from_x[y]
    }

    /// Diagonal of `A* = A*(x)`.
    pub fn a_star_diagonal(&self) -> &[BigRational] {
        &self.a_star
    }

    pub fn a_star(&self) -> ExactMatrix {
        ExactMatrix::diagonal(self.a_star.clone())
    }

    /// `E*_i = E*_i(x)`, projecting onto `Γ_i(x)`; zero outside `0..=D`.
    pub fn dual_idempotent(&self, i: i64) -> ExactMatrix {
        let diag = self
            .dist_from_x
            .iter()
            .map(|&h| if h as i64 == i { BigRational::one() } else { BigRational::zero() })
            .collect();
        ExactMatrix::diagonal(diag)
    }

    pub fn checks(&self) -> &CheckList {
        &self.checks
    }
}
