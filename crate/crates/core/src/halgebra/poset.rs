use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::check::CheckList;
use crate::error::{Error, Result};
use crate::exactla::{mat_product, ExactMatrix};
use crate::projgeom::{cover_type, subspaces_within, CoverType, GeometryContext, SubspaceRef};
use crate::qfield::{q_binomial, q_int_int, SqrtQScalar};

/// Default bound on `|P|` for building the generators on all of `Ψ`.
pub const DEFAULT_POSET_CAP: usize = 60_000;
/// Up to this many elements every pair of consecutive layers is classified directly.
pub const PAIRWISE_COVER_CHECK_MAX: usize = 1000;

/// `|P| = Σ_ℓ [N choose ℓ]_q`.
pub fn poset_size(q: u64, n: usize) -> BigInt {
    (0..=n as i64).map(|l| q_binomial(n as i64, l, q)).sum()
}

/// The generators `E*_{i,j}, K_1, K_2, L_1, L_2, R_1, R_2` on the span of
/// the materialized layers of `P`, indexed dimension by dimension in table order.
#[derive(Clone, Debug)]
pub struct PosetMatrixSet {
    q: u64,
    n: usize,
    d: usize,
    layers: Vec<usize>,
    offsets: Vec<usize>,
    elements: Vec<SubspaceRef>,
    blocks: Vec<(usize, usize)>,
    full: bool,
    pub l1: ExactMatrix,
    pub l2: ExactMatrix,
    pub r1: ExactMatrix,
    pub r2: ExactMatrix,
    pub k1: Vec<SqrtQScalar>,
    pub k2: Vec<SqrtQScalar>,
    checks: CheckList,
}

impl PosetMatrixSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.full
    }

    pub fn layers(&self) -> &[usize] {
        &self.layers
    }

    pub fn element(&self, idx: usize) -> SubspaceRef {
        self.elements[idx]
    }

    pub fn index_of(&self, r: SubspaceRef) -> Option<usize> {
        let pos = self.layers.iter().position(|&l| l == r.dim)?;
        Some(self.offsets[pos] + r.index)
    }

    pub fn block(&self, idx: usize) -> (usize, usize) {
        self.blocks[idx]
    }

    /// `E*_{i,j}`; zero for indices outside `0..=D` × `0..=N-D`.
    pub fn dual_block(&self, i: i64, j: i64) -> ExactMatrix {
        let diag = self
            .blocks
            .iter()
            .map(|&(a, b)| {
                if a as i64 == i && b as i64 == j {
                    BigRational::one()
                } else {
                    BigRational::from_integer(0.into())
                }
            })
            .collect();
        ExactMatrix::diagonal(diag)
    }

    pub fn checks(&self) -> &CheckList {
        &self.checks
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }
}

/// Builds the generators from the cover classification of the tables in
/// `ctx`: every table when all are present, otherwise the layers
/// `D-1, D, D+1`.
pub fn build_poset_matrices(ctx: &GeometryContext, max_poset: usize) -> Result<PosetMatrixSet> {
    let (q, n, d) = (ctx.q(), ctx.n(), ctx.d());
    let full = ctx.is_full();
    let layers: Vec<usize> = if full {
        (0..=n).collect()
    } else {
        let want: Vec<usize> = (d.saturating_sub(1)..=(d + 1).min(n)).collect();
        if want.iter().any(|&l| ctx.table(l).is_none()) {
            return Err(Error::InvalidParameters("need every table, or the tables D-1, D, D+1".into()));
        }
        want
    };
    let mut offsets = Vec::new();
    let mut elements = Vec::new();
    for &l in &layers {
        offsets.push(elements.len());
        let t = ctx.table(l).unwrap();
        elements.extend((0..t.len()).map(|index| SubspaceRef { dim: l, index }));
    }
    let size = elements.len();
    if size > max_poset {
        return Err(Error::SizeCapExceeded {
            what: "materialized poset layers".into(),
            projected: BigInt::from(size),
            cap: max_poset,
        });
    }
    let blocks: Vec<(usize, usize)> = elements.iter().map(|&r| ctx.block_of(r)).collect();
    let global = |r: SubspaceRef| offsets[layers.iter().position(|&l| l == r.dim).unwrap()] + r.index;

    // L from up-covers, R from the hyperplanes of each element: two separate enumerations
    let mut l1 = vec![Vec::new(); size];
    let mut l2 = vec![Vec::new(); size];
    let mut r1 = vec![Vec::new(); size];
    let mut r2 = vec![Vec::new(); size];
    let mut bad_kind = None;
    for (pos, &l) in layers.iter().enumerate() {
        let t = ctx.table(l).unwrap();
        if pos + 1 < layers.len() {
            for u in 0..t.len() {
                let gu = offsets[pos] + u;
                for v in ctx.covers_up(l, u) {
                    let gv = global(SubspaceRef { dim: l + 1, index: v });
                    match blocks[gv].0 as i64 - blocks[gu].0 as i64 {
                        1 => l1[gu].push(gv),
                        0 => l2[gu].push(gv),
                        _ => {
                            bad_kind.get_or_insert(format!("{gu} -> {gv}"));
                        }
                    }
                }
            }
        }
        if pos > 0 {
            let lower = ctx.table(l - 1).unwrap();
            for u in 0..t.len() {
                let gu = offsets[pos] + u;
                for w in subspaces_within(ctx.field(), t.get(u), l - 1) {
                    let gw = global(SubspaceRef { dim: l - 1, index: lower.index_of(&w).expect("table is complete") });
                    match cover_type(ctx, &w, t.get(u)) {
                        CoverType::Slash => r1[gu].push(gw),
                        CoverType::Backslash => r2[gu].push(gw),
                        CoverType::NotCover => {
                            bad_kind.get_or_insert(format!("{gu} over {gw}"));
                        }
                    }
                }
            }
        }
    }
    let mut checks = CheckList::new();
    checks.expect(
        "every cover is a /-cover or a \\-cover",
        bad_kind.is_none(),
        bad_kind.unwrap_or_default(),
    );
    for list in l1.iter_mut().chain(l2.iter_mut()).chain(r1.iter_mut()).chain(r2.iter_mut()) {
        list.sort_unstable();
    }
    let lm1 = ExactMatrix::from_pattern(size, size, &l1)?;
    let lm2 = ExactMatrix::from_pattern(size, size, &l2)?;
    let rm1 = ExactMatrix::from_pattern(size, size, &r1)?;
    let rm2 = ExactMatrix::from_pattern(size, size, &r2)?;

    let k1: Vec<SqrtQScalar> = blocks.iter().map(|&(i, _)| SqrtQScalar::q_power(q, d as i64 - 2 * i as i64)).collect();
    let k2: Vec<SqrtQScalar> = blocks
        .iter()
        .map(|&(_, j)| SqrtQScalar::q_power(q, (n - d) as i64 - 2 * j as i64))
        .collect();

    let mut set = PosetMatrixSet {
        q,
        n,
        d,
        layers,
        offsets,
        elements,
        blocks,
        full,
        l1: lm1,
        l2: lm2,
        r1: rm1,
        r2: rm2,
        k1,
        k2,
        checks,
    };
    let extra = relation_checks(ctx, &set)?;
    set.checks.extend(extra);
    Ok(set)
}

fn relation_checks(ctx: &GeometryContext, s: &PosetMatrixSet) -> Result<CheckList> {
    let (q, n, d) = (s.q, s.n, s.d);
    let size = s.len();
    let mut checks = CheckList::new();

    let in_range = s.blocks.iter().all(|&(i, j)| i <= d && j <= n - d);
    checks.expect("sum of E*_ij = I", in_range, "an element lies outside every block");
    if s.full {
        let ok = (0..=d).all(|i| {
            (0..=n - d).all(|j| {
                let count = s.blocks.iter().filter(|&&b| b == (i, j)).count();
                let census = ctx.census().get(&(i, j)).map_or(0, Vec::len);
                count == census
            })
        });
        checks.expect("dim E*_ij Ψ = |P_ij|", ok, "block count differs from census");
    }

    checks.expect("R_1 = L_1^T", s.r1 == s.l1.transpose(), "mismatch");
    checks.expect("R_2 = L_2^T", s.r2 == s.l2.transpose(), "mismatch");
    let overlap = (0..size).any(|u| {
        let a = s.l1.row_nonzeros(u);
        s.l2.row_nonzeros(u).iter().any(|(v, _)| a.iter().any(|(w, _)| w == v))
    });
    checks.expect("L_1 and L_2 have disjoint supports", !overlap, "a pair is both a /- and a \\-cover");

    // support shifting, as literal identities between products with E*
    let mut bad = None;
    for a in 0..=d as i64 {
        for b in 0..=(n - d) as i64 {
            let e = s.dual_block(a, b);
            let rels = [
                ("E*_ab L1 = L1 E*_(a+1)b", &s.l1, s.dual_block(a + 1, b)),
                ("E*_ab L2 = L2 E*_a(b+1)", &s.l2, s.dual_block(a, b + 1)),
                ("E*_ab R1 = R1 E*_(a-1)b", &s.r1, s.dual_block(a - 1, b)),
                ("E*_ab R2 = R2 E*_a(b-1)", &s.r2, s.dual_block(a, b - 1)),
            ];
            for (name, m, shifted) in rels {
                let left = mat_product(&e, m)?;
                let right = mat_product(m, &shifted)?;
                if left != right && bad.is_none() {
                    bad = Some(format!("{name} at (a,b)=({a},{b})"));
                }
            }
        }
    }
    checks.expect("E*-shift relations for L_1, L_2, R_1, R_2", bad.is_none(), bad.unwrap_or_default());

    let mut bad_up = None;
    let mut bad_down = None;
    let mut bad_slash = None;
    for u in 0..size {
        let r = s.elements[u];
        let (i, _) = s.blocks[u];
        let top = *s.layers.last().unwrap();
        let bottom = s.layers[0];
        if r.dim < top {
            let up = s.l1.row_nonzeros(u).len() + s.l2.row_nonzeros(u).len();
            if BigInt::from(up) != q_int_int((n - r.dim) as u32, q) {
                bad_up.get_or_insert(format!("element {u}: {up}"));
            }
            if BigInt::from(s.l1.row_nonzeros(u).len()) != q_int_int((d - i) as u32, q) {
                bad_slash.get_or_insert(format!("element {u}"));
            }
        }
        if r.dim > bottom {
            let down = s.r1.row_nonzeros(u).len() + s.r2.row_nonzeros(u).len();
            if BigInt::from(down) != q_int_int(r.dim as u32, q) {
                bad_down.get_or_insert(format!("element {u}: {down}"));
            }
        }
    }
    checks.expect("row sums of L_1 + L_2 are [N-ℓ]", bad_up.is_none(), bad_up.unwrap_or_default());
    checks.expect("row sums of R_1 + R_2 are [ℓ]", bad_down.is_none(), bad_down.unwrap_or_default());
    checks.expect("u in P_ij has [D-i] /-covers", bad_slash.is_none(), bad_slash.unwrap_or_default());

    if size <= PAIRWISE_COVER_CHECK_MAX {
        let mut bad_pair = None;
        for u in 0..size {
            let ru = s.elements[u];
            let above: Vec<usize> = s.l1.row_nonzeros(u).iter().chain(s.l2.row_nonzeros(u).iter()).map(|&(v, _)| v).collect();
            for v in 0..size {
                let rv = s.elements[v];
                if rv.dim != ru.dim + 1 {
                    continue;
                }
                let covers = cover_type(ctx, ctx.subspace(ru), ctx.subspace(rv)) != CoverType::NotCover;
                if covers != above.contains(&v) {
                    bad_pair.get_or_insert(format!("({u},{v})"));
                }
            }
        }
        checks.expect("(L_1 + L_2)_uv = 1 iff v covers u", bad_pair.is_none(), bad_pair.unwrap_or_default());
    }

    let x_idx = ctx.table(d).unwrap().index_of(ctx.x()).and_then(|i| s.index_of(SubspaceRef { dim: d, index: i }));
    if let Some(xi) = x_idx {
        checks.expect_eq("(K_1)_xx = q^(-D/2)", SqrtQScalar::q_power(q, -(d as i64)), s.k1[xi].clone());
        checks.expect_eq("(K_2)_xx = q^((N-D)/2)", SqrtQScalar::q_power(q, (n - d) as i64), s.k2[xi].clone());
    }
    let invertible = s
        .k1
        .iter()
        .chain(&s.k2)
        .all(|k| k.inverse().is_some_and(|inv| (k * &inv).to_rational() == Some(BigRational::one())));
    checks.expect("K_1, K_2 invertible", invertible, "zero diagonal entry");
    Ok(checks)
}
