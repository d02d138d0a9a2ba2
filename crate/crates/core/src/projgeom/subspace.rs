use rayon::prelude::*;

use super::fq;
use crate::error::{Error, Result};
use crate::qfield::{q_binomial, FieldContext, FieldElem};

/// A subspace of `F_q^N` stored by its reduced row echelon basis.
///
/// Equal subspaces have identical representations, and the derived order is
/// the lexicographic order of the flattened basis within a fixed dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalSubspace {
    ambient_dim: usize,
    dim: usize,
    rows: Vec<FieldElem>,
    pivots: Vec<usize>,
}

impl CanonicalSubspace {
    /// Span of arbitrary vectors of length `ambient_dim`.
    pub fn from_spanning(f: &FieldContext, ambient_dim: usize, vectors: &[Vec<FieldElem>]) -> Self {
        let mut rows: Vec<Vec<FieldElem>> = vectors
            .iter()
            .map(|v| {
                assert_eq!(v.len(), ambient_dim, "vector length must match the ambient dimension");
                v.iter().map(|&a| a % f.q()).collect()
            })
            .collect();
        let pivots = fq::rref(f, &mut rows, ambient_dim);
        Self {
            ambient_dim,
            dim: pivots.len(),
            rows: rows.concat(),
            pivots,
        }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            dim: 0,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Span of the first `k` unit vectors.
    pub fn coordinate(ambient_dim: usize, k: usize) -> Self {
        assert!(k <= ambient_dim);
        let mut rows = vec![0; k * ambient_dim];
        for i in 0..k {
            rows[i * ambient_dim + i] = 1;
        }
        Self {
            ambient_dim,
            dim: k,
            rows,
            pivots: (0..k).collect(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::coordinate(ambient_dim, ambient_dim)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Flattened row-major basis.
    pub fn flat_rows(&self) -> &[FieldElem] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[FieldElem] {
        &self.rows[i * self.ambient_dim..(i + 1) * self.ambient_dim]
    }

    pub fn basis(&self) -> Vec<Vec<FieldElem>> {
        (0..self.dim).map(|i| self.row(i).to_vec()).collect()
    }

    /// Checks the reduced row echelon invariants.
    pub fn is_canonical(&self, f: &FieldContext) -> bool {
        if self.rows.len() != self.dim * self.ambient_dim || self.pivots.len() != self.dim {
            return false;
        }
        if self.pivots.windows(2).any(|w| w[0] >= w[1]) {
            return false;
        }
        if self.rows.iter().any(|&a| a >= f.q()) {
            return false;
        }
        for (r, &p) in self.pivots.iter().enumerate() {
            let row = self.row(r);
            if row[..p].iter().any(|&a| a != 0) || row[p] != 1 {
                return false;
            }
            for r2 in 0..self.dim {
                if r2 != r && self.row(r2)[p] != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Reduces `v` against the basis; the result is zero iff `v` lies in the span.
    fn residual(&self, f: &FieldContext, v: &[FieldElem]) -> Vec<FieldElem> {
        let mut w: Vec<_> = v.iter().map(|&a| a % f.q()).collect();
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = w[p];
            if c != 0 {
                for (x, &b) in w.iter_mut().zip(self.row(r)) {
                    if b != 0 {
                        *x = f.sub(*x, f.mul(c, b));
                    }
                }
            }
        }
        w
    }

    pub fn contains_vector(&self, f: &FieldContext, v: &[FieldElem]) -> bool {
        self.residual(f, v).iter().all(|&a| a == 0)
    }

    /// `other ⊆ self`.
    pub fn contains(&self, f: &FieldContext, other: &CanonicalSubspace) -> bool {
        other.dim <= self.dim && (0..other.dim).all(|i| self.contains_vector(f, other.row(i)))
    }

    /// `self + other`, by stacking rows and re-reducing.
    pub fn sum(&self, f: &FieldContext, other: &CanonicalSubspace) -> CanonicalSubspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut rows = self.basis();
        rows.extend(other.basis());
        Self::from_spanning(f, self.ambient_dim, &rows)
    }

    /// Subspace spanned by `self` and one extra vector.
    pub fn extend_by(&self, f: &FieldContext, v: &[FieldElem]) -> CanonicalSubspace {
        let mut rows = self.basis();
        rows.push(v.to_vec());
        Self::from_spanning(f, self.ambient_dim, &rows)
    }

    /// `dim(self ∩ other)` through `dim u + dim v - dim(u + v)`.
    pub fn meet_dim(&self, f: &FieldContext, other: &CanonicalSubspace) -> usize {
        let mut rows = self.basis();
        rows.extend(other.basis());
        self.dim + other.dim - fq::rank(f, &rows, self.ambient_dim)
    }
}

/// `u ∩ v`.
///
/// With `U`, `V` the basis matrices, the pairs `(a, b)` with `aU = bV` form
/// the nullspace of the transposed stack `[U; -V]^T`; the intersection is
/// spanned by the vectors `aU`.
pub fn intersect(f: &FieldContext, u: &CanonicalSubspace, v: &CanonicalSubspace) -> CanonicalSubspace {
    assert_eq!(u.ambient_dim, v.ambient_dim, "subspaces live in different ambient spaces");
    let n = u.ambient_dim;
    let (du, dv) = (u.dim, v.dim);
    if du == 0 || dv == 0 {
        return CanonicalSubspace::zero(n);
    }
    // coefficient system: for each coordinate c, sum_r a_r U[r][c] - sum_s b_s V[s][c] = 0
    let system: Vec<Vec<FieldElem>> = (0..n)
        .map(|c| {
            (0..du)
                .map(|r| u.row(r)[c])
                .chain((0..dv).map(|s| f.neg(v.row(s)[c])))
                .collect()
        })
        .collect();
    let kernel = fq::nullspace(f, &system, du + dv);
    let vectors: Vec<Vec<FieldElem>> = kernel
        .iter()
        .map(|coeffs| {
            let mut w = vec![0; n];
            for (r, &a) in coeffs[..du].iter().enumerate() {
                if a != 0 {
                    for (x, &b) in w.iter_mut().zip(u.row(r)) {
                        *x = f.add(*x, f.mul(a, b));
                    }
                }
            }
            w
        })
        .collect();
    CanonicalSubspace::from_spanning(f, n, &vectors)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for c in start..n {
            if n - c < k - cur.len() {
                break;
            }
            cur.push(c);
            rec(c + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// All subspaces with a fixed pivot pattern: free entries sit right of each
/// pivot in non-pivot columns.
fn subspaces_with_pivots(f: &FieldContext, n: usize, pivots: &[usize]) -> Vec<CanonicalSubspace> {
    let k = pivots.len();
    let mut free = Vec::new();
    for (r, &p) in pivots.iter().enumerate() {
        for c in p + 1..n {
            if !pivots.contains(&c) {
                free.push(r * n + c);
            }
        }
    }
    let mut base = vec![0; k * n];
    for (r, &p) in pivots.iter().enumerate() {
        base[r * n + p] = 1;
    }
    let q = f.q();
    let mut digits = vec![0u32; free.len()];
    let mut out = Vec::new();
    loop {
        let mut rows = base.clone();
        for (&pos, &d) in free.iter().zip(&digits) {
            rows[pos] = d;
        }
        out.push(CanonicalSubspace {
            ambient_dim: n,
            dim: k,
            rows,
            pivots: pivots.to_vec(),
        });
        // mixed-radix increment
        let mut i = 0;
        loop {
            if i == digits.len() {
                return out;
            }
            digits[i] += 1;
            if digits[i] < q {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Every `l`-dimensional subspace of `F_q^n`, in canonical order.
pub fn enumerate_subspaces(f: &FieldContext, n: usize, l: usize, cap: usize) -> Result<Vec<CanonicalSubspace>> {
    if l > n {
        return Err(Error::InvalidParameters(format!("subspace dimension {l} exceeds ambient dimension {n}")));
    }
    let projected = q_binomial(n as i64, l as i64, u64::from(f.q()));
    if projected > cap.into() {
        return Err(Error::SizeCapExceeded {
            what: format!("table of {l}-dimensional subspaces of F_{}^{n}", f.q()),
            projected,
            cap,
        });
    }
    let mut all: Vec<CanonicalSubspace> = combinations(n, l)
        .par_iter()
        .flat_map_iter(|pivots| subspaces_with_pivots(f, n, pivots))
        .collect();
    all.sort_unstable();
    Ok(all)
}

/// Every `l`-dimensional subspace of `within`, in canonical order.
pub fn subspaces_within(f: &FieldContext, within: &CanonicalSubspace, l: usize) -> Vec<CanonicalSubspace> {
    let k = within.dim();
    assert!(l <= k);
    let n = within.ambient_dim();
    let mut out: Vec<CanonicalSubspace> = combinations(k, l)
        .iter()
        .flat_map(|pivots| subspaces_with_pivots(f, k, pivots))
        .map(|coeffs| {
            let vectors: Vec<Vec<FieldElem>> = (0..l)
                .map(|r| {
                    let mut w = vec![0; n];
                    for (s, &a) in coeffs.row(r).iter().enumerate() {
                        if a != 0 {
                            for (x, &b) in w.iter_mut().zip(within.row(s)) {
                                *x = f.add(*x, f.mul(a, b));
                            }
                        }
                    }
                    w
                })
                .collect();
            CanonicalSubspace::from_spanning(f, n, &vectors)
        })
        .collect();
    out.sort_unstable();
    out
}
