use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::check::{CheckList, Verdict};
use crate::error::Result;
use crate::exactla::{ExactMatrix, ExactVector};
use crate::grassmann::SpectralSystem;
use crate::qfield::{q_int, q_pow};

use super::family::AlphaFamily;

/// Residual status for one action formula, across every `α ⊆ x`.
#[derive(Clone, Debug, Serialize)]
pub struct ActionResidual {
    pub verdict: Verdict,
    pub checked: usize,
    /// Indices of `α` whose residual is nonzero.
    pub nonzero_at: Vec<usize>,
    /// First offending `α` and the first vertex where its residual is nonzero.
    pub witness: Option<(usize, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ActionReport {
    pub a_vee: ActionResidual,
    pub a_nuc: ActionResidual,
    pub astar_nuc: ActionResidual,
    pub astar_vee: ActionResidual,
    #[serde(skip)]
    pub checks: CheckList,
}

fn residual(bad: Vec<(usize, usize)>, checked: usize) -> ActionResidual {
    ActionResidual {
        verdict: if bad.is_empty() { Verdict::Pass } else { Verdict::Fail },
        checked,
        nonzero_at: bad.iter().map(|&(a, _)| a).collect(),
        witness: bad.first().copied(),
    }
}

/// Records `(a, first nonzero coordinate)` when `lhs != rhs`.
fn compare(bad: &mut Vec<(usize, usize)>, a: usize, lhs: &ExactVector, rhs: &ExactVector) -> Result<()> {
    if lhs != rhs {
        let y = lhs.sub(rhs)?.support()[0];
        bad.push((a, y));
    }
    Ok(())
}

fn combination(fam: &[ExactVector], n: usize, terms: impl IntoIterator<Item = (BigRational, usize)>) -> ExactVector {
    let mut out = ExactVector::zeros(n);
    for (c, b) in terms {
        out.add_scaled(&c, &fam[b]).expect("same length");
    }
    out
}

/// Checks the actions of `A` and `A* = A*(x)` on `{α^∨}` and `{α^N}` by forming
/// each residual vector exactly.
pub fn verify_actions(adjacency: &ExactMatrix, ss: &SpectralSystem, fam: &AlphaFamily) -> Result<ActionReport> {
    let (q, n_amb, d, nv) = (ss.q(), ss.n() as i64, ss.d() as i64, ss.n_vertices());
    let a_star = ss.a_star();
    let one = BigRational::one();
    let qi = |l: i64| q_int(l, q);
    let mut bad = [Vec::new(), Vec::new(), Vec::new(), Vec::new()];

    for a in 0..fam.len() {
        let i = fam.dim(a) as i64;
        let below: Vec<usize> = (0..fam.len()).filter(|&b| fam.covers(a, b)).collect();
        let above: Vec<usize> = (0..fam.len()).filter(|&b| fam.covers(b, a)).collect();

        // A α^∨ = θ_i α^∨ + [D-i+1] Σ_{α covers β} β^∨
        let theta = BigRational::from_integer(ss.theta()[i as usize].clone());
        let mut rhs = combination(&fam.vee, nv, std::iter::once((theta, a)));
        rhs.add_scaled(&qi(d - i + 1), &combination(&fam.vee, nv, below.iter().map(|&b| (one.clone(), b))))?;
        compare(&mut bad[0], a, &adjacency.mul_vec(&fam.vee[a])?, &rhs)?;

        // A α^N
        let sideways: Vec<usize> = (0..fam.len())
            .filter(|&b| b != a && fam.dim(b) as i64 == i)
            .filter(|&b| (0..fam.len()).any(|c| fam.covers(a, c) && fam.covers(b, c)))
            .collect();
        let diag = qi(d - i) * (BigRational::from_integer(q.into()) * qi(n_amb - d) - qi(d - i));
        let up_coeff = q_pow(q, 2 * d - 2 * i - 1) * qi(n_amb - 2 * d + i + 1);
        let side_coeff = q_pow(q, d - i);
        let terms = std::iter::once((diag, a))
            .chain(above.iter().map(|&b| (up_coeff.clone(), b)))
            .chain(sideways.iter().map(|&b| (side_coeff.clone(), b)))
            .chain(below.iter().map(|&b| (qi(d - i + 1), b)));
        compare(&mut bad[1], a, &adjacency.mul_vec(&fam.nuc[a])?, &combination(&fam.nuc, nv, terms))?;

        // A* α^N = θ*_{D-i} α^N
        let theta_star = ss.theta_star()[(d - i) as usize].clone();
        compare(&mut bad[2], a, &a_star.mul_vec(&fam.nuc[a])?, &fam.nuc[a].scale(&theta_star))?;

        // A* α^∨ = θ*_{D-i} α^∨ + q^{-D+i+1}[N][N-1]/([D][N-D]) Σ_{γ ⊆ x covers α} γ^∨
        let coeff = q_pow(q, -d + i + 1) * qi(n_amb) * qi(n_amb - 1) / (qi(d) * qi(n_amb - d));
        let terms = std::iter::once((theta_star, a)).chain(above.iter().map(|&b| (coeff.clone(), b)));
        compare(&mut bad[3], a, &a_star.mul_vec(&fam.vee[a])?, &combination(&fam.vee, nv, terms))?;
    }

    let m = fam.len();
    let [b0, b1, b2, b3] = bad;
    let report = ActionReport {
        a_vee: residual(b0, m),
        a_nuc: residual(b1, m),
        astar_nuc: residual(b2, m),
        astar_vee: residual(b3, m),
        checks: CheckList::new(),
    };
    let mut checks = CheckList::new();
    for (name, r) in [
        ("A α^∨ residual zero for every α", &report.a_vee),
        ("A α^N residual zero for every α", &report.a_nuc),
        ("A* α^N residual zero for every α", &report.astar_nuc),
        ("A* α^∨ residual zero for every α", &report.astar_vee),
    ] {
        let detail = r.witness.map_or_else(String::new, |(a, y)| format!("α #{a} nonzero at vertex {y}"));
        checks.expect(name, r.nonzero_at.is_empty(), detail);
    }
    Ok(ActionReport { checks, ..report })
}
