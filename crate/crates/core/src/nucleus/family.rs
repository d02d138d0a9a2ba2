use num_bigint::BigInt;
use num_rational::BigRational;

use crate::check::CheckList;
use crate::exactla::{rank, ExactMatrix, ExactVector};
use crate::grassmann::GraphContext;
use crate::projgeom::{intersect, subspaces_within, CanonicalSubspace};
use crate::qfield::{choose2, q_binomial};

/// The vectors `α^∨` and `α^N` for every subspace `α ⊆ x`, with the sets
/// `H_α = {y : α ⊆ y}` and `G_α = {y : y ∩ x = α}`.
///
/// Subspaces are ordered by dimension, then canonically.
#[derive(Clone, Debug)]
pub struct AlphaFamily {
    alphas: Vec<CanonicalSubspace>,
    /// `contains[a][b]`: whether `alphas[a] ⊆ alphas[b]`.
    contains: Vec<Vec<bool>>,
    pub h_sets: Vec<Vec<usize>>,
    pub g_sets: Vec<Vec<usize>>,
    pub vee: Vec<ExactVector>,
    pub nuc: Vec<ExactVector>,
    checks: CheckList,
}

impl AlphaFamily {
    pub fn len(&self) -> usize {
        self.alphas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alphas.is_empty()
    }

    pub fn alpha(&self, a: usize) -> &CanonicalSubspace {
        &self.alphas[a]
    }

    pub fn alphas(&self) -> &[CanonicalSubspace] {
        &self.alphas
    }

    pub fn dim(&self, a: usize) -> usize {
        self.alphas[a].dim()
    }

    /// Indices of the subspaces of `x` of dimension `l`.
    pub fn of_dim(&self, l: usize) -> Vec<usize> {
        (0..self.len()).filter(|&a| self.dim(a) == l).collect()
    }

    pub fn index_of(&self, alpha: &CanonicalSubspace) -> Option<usize> {
        self.alphas.iter().position(|b| b == alpha)
    }

    pub fn is_subspace(&self, a: usize, b: usize) -> bool {
        self.contains[a][b]
    }

    /// Whether `alphas[b]` covers `alphas[a]`.
    pub fn covers(&self, b: usize, a: usize) -> bool {
        self.contains[a][b] && self.dim(b) == self.dim(a) + 1
    }

    pub fn checks(&self) -> &CheckList {
        &self.checks
    }

    /// `ζ[a][b] = 1` iff `α_a ⊆ α_b`.
    pub fn zeta_matrix(&self) -> ExactMatrix {
        let pattern: Vec<Vec<usize>> = (0..self.len())
            .map(|a| (0..self.len()).filter(|&b| self.contains[a][b]).collect())
            .collect();
        ExactMatrix::from_pattern(self.len(), self.len(), &pattern).expect("square pattern")
    }

    /// `(-1)^{dim β - dim α} q^{C(dim β - dim α, 2)}` on pairs `α ⊆ β`.
    pub fn mobius_matrix(&self, q: u64) -> ExactMatrix {
        let rows = (0..self.len())
            .map(|a| {
                (0..self.len())
                    .filter(|&b| self.contains[a][b])
                    .map(|b| (b, signed_coefficient(q, self.dim(b) as i64 - self.dim(a) as i64)))
                    .collect()
            })
            .collect();
        ExactMatrix::from_sparse_rows(self.len(), self.len(), rows).expect("square pattern")
    }
}

pub(crate) fn signed_coefficient(q: u64, delta: i64) -> BigRational {
    let mag = BigInt::from(q).pow(choose2(delta) as u32);
    BigRational::from_integer(if delta % 2 == 0 { mag } else { -mag })
}

pub fn alpha_family(gc: &GraphContext) -> AlphaFamily {
    let f = gc.geometry().field().clone();
    let (q, n, d) = (gc.q(), gc.n(), gc.d());
    let x = gc.geometry().x().clone();
    let nv = gc.n_vertices();
    let alphas: Vec<CanonicalSubspace> = (0..=d).flat_map(|l| subspaces_within(&f, &x, l)).collect();
    let fam_len = alphas.len();
    let contains: Vec<Vec<bool>> = (0..fam_len)
        .map(|a| (0..fam_len).map(|b| alphas[b].contains(&f, &alphas[a])).collect())
        .collect();

    let h_sets: Vec<Vec<usize>> = alphas
        .iter()
        .map(|alpha| (0..nv).filter(|&y| gc.vertex(y).contains(&f, alpha)).collect())
        .collect();
    let mut g_sets = vec![Vec::new(); fam_len];
    let mut unmatched = 0usize;
    for y in 0..nv {
        let meet = intersect(&f, gc.vertex(y), &x);
        match alphas.iter().position(|a| *a == meet) {
            Some(a) => g_sets[a].push(y),
            None => unmatched += 1,
        }
    }
    let vee: Vec<ExactVector> = h_sets.iter().map(|h| ExactVector::indicator(nv, h.iter().copied())).collect();
    let nuc: Vec<ExactVector> = g_sets.iter().map(|g| ExactVector::indicator(nv, g.iter().copied())).collect();

    let mut checks = CheckList::new();
    checks.expect_eq(
        "number of subspaces of x",
        (0..=d as i64).map(|l| q_binomial(d as i64, l, q)).sum::<BigInt>(),
        BigInt::from(fam_len),
    );
    checks.expect_eq("every y ∩ x is a subspace of x", 0, unmatched);

    // G_α for dim α = D - i partition Γ_i(x)
    let mut partition_ok = true;
    for i in 0..=d {
        let mut covered: Vec<usize> = (0..fam_len).filter(|&a| alphas[a].dim() == d - i).flat_map(|a| g_sets[a].clone()).collect();
        covered.sort_unstable();
        partition_ok &= covered == gc.sphere(i);
    }
    checks.expect("G_α with dim α = D-i partition Γ_i(x)", partition_ok, "partition fails");

    let mut size_bad = None;
    for (a, alpha) in alphas.iter().enumerate() {
        let l = alpha.dim();
        let i = d - l;
        let want_h = q_binomial((n - l) as i64, i as i64, q);
        let want_g = BigInt::from(q).pow((i * i) as u32) * q_binomial((n - d) as i64, i as i64, q);
        if BigInt::from(h_sets[a].len()) != want_h || BigInt::from(g_sets[a].len()) != want_g {
            size_bad.get_or_insert(format!("α #{a}: |H|={}, |G|={}", h_sets[a].len(), g_sets[a].len()));
        }
    }
    checks.expect(
        "|H_α| = [N-dim α, D-dim α]_q and |G_α| = q^(i^2)[N-D, i]_q",
        size_bad.is_none(),
        size_bad.unwrap_or_default(),
    );

    let mut veeton_bad = None;
    let mut ntovee_bad = None;
    let mut estar_bad = None;
    for a in 0..fam_len {
        let mut sum = ExactVector::zeros(nv);
        let mut alt = ExactVector::zeros(nv);
        for b in (0..fam_len).filter(|&b| contains[a][b]) {
            sum.add_scaled(&BigRational::from_integer(1.into()), &nuc[b]).expect("same length");
            let c = signed_coefficient(q, alphas[b].dim() as i64 - alphas[a].dim() as i64);
            alt.add_scaled(&c, &vee[b]).expect("same length");
        }
        if sum != vee[a] {
            veeton_bad.get_or_insert(a);
        }
        if alt != nuc[a] {
            ntovee_bad.get_or_insert(a);
        }
        let level = d - alphas[a].dim();
        let projected: Vec<usize> = h_sets[a].iter().copied().filter(|&y| gc.dist(gc.x_vertex(), y) == level).collect();
        if ExactVector::indicator(nv, projected) != nuc[a] {
            estar_bad.get_or_insert(a);
        }
    }
    let show = |o: Option<usize>| o.map_or_else(String::new, |a| format!("fails at α #{a}"));
    checks.expect("α^∨ = Σ_{α⊆β⊆x} β^N", veeton_bad.is_none(), show(veeton_bad));
    checks.expect(
        "α^N = Σ_{α⊆β⊆x} (-1)^(dim β-dim α) q^C(dim β-dim α,2) β^∨",
        ntovee_bad.is_none(),
        show(ntovee_bad),
    );
    checks.expect("α^N = E*_(D-dim α) α^∨", estar_bad.is_none(), show(estar_bad));

    for (name, fam) in [("α^N", &nuc), ("α^∨", &vee)] {
        let r = rank(&ExactMatrix::from_columns(nv, fam).expect("equal lengths"));
        checks.expect_eq(format!("{{{name}}} linearly independent"), fam_len, r);
    }

    AlphaFamily {
        alphas,
        contains,
        h_sets,
        g_sets,
        vee,
        nuc,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::mat_product;
    use crate::grassmann::{build_graph, GraphOptions};

    #[test]
    fn signed_coefficients() {
        let c = |q, d| signed_coefficient(q, d).to_integer();
        assert_eq!([c(2, 0), c(2, 1), c(2, 2), c(2, 3)], [1.into(), (-1).into(), 2.into(), (-8).into()]);
        assert_eq!(c(3, 3), BigInt::from(-27));
    }

    #[test]
    fn transition_matrices_invert() {
        let gc = build_graph(3, 5, 2, &GraphOptions::default()).unwrap();
        let fam = alpha_family(&gc);
        assert_eq!(fam.len(), 1 + 4 + 1);
        assert!(fam.checks().all_passed(), "{:?}", fam.checks());
        assert!(mat_product(&fam.zeta_matrix(), &fam.mobius_matrix(3)).unwrap().is_identity());
        let zero = fam.of_dim(0)[0];
        assert_eq!(fam.vee[zero].support().len(), gc.n_vertices());
        let x = fam.of_dim(2)[0];
        assert_eq!(fam.alpha(x), gc.geometry().x());
        assert_eq!(fam.vee[x], fam.nuc[x]);
        assert_eq!(fam.nuc[x].support(), vec![gc.x_vertex()]);
    }
}
