use std::collections::BTreeMap;
use std::path::PathBuf;

use num_bigint::BigInt;
use serde::Serialize;

use super::cache;
use super::subspace::{enumerate_subspaces, CanonicalSubspace};
use crate::check::CheckList;
use crate::error::{Error, Result};
use crate::qfield::{q_binomial, q_int_int, FieldContext, FieldElem};

pub const DEFAULT_TABLE_CAP: usize = 20_000;

#[derive(Clone, Debug)]
pub struct GeometryOptions {
    /// Maximum number of subspaces in any one dimension table.
    pub table_cap: usize,
    pub cache_dir: Option<PathBuf>,
}

impl Default for GeometryOptions {
    fn default() -> Self {
        Self {
            table_cap: DEFAULT_TABLE_CAP,
            cache_dir: None,
        }
    }
}

/// Ordered list of all subspaces of one dimension, with `dim(u ∩ x)` cached.
#[derive(Clone, Debug)]
pub struct SubspaceTable {
    dim: usize,
    items: Vec<CanonicalSubspace>,
    meet_dims: Vec<usize>,
}

impl SubspaceTable {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn items(&self) -> &[CanonicalSubspace] {
        &self.items
    }

    pub fn get(&self, idx: usize) -> &CanonicalSubspace {
        &self.items[idx]
    }

    /// `dim(u ∩ x)` for the `idx`-th entry.
    pub fn meet_dim(&self, idx: usize) -> usize {
        self.meet_dims[idx]
    }

    pub fn index_of(&self, u: &CanonicalSubspace) -> Option<usize> {
        self.items.binary_search(u).ok()
    }
}

/// Position of a subspace: dimension plus index in that dimension's table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SubspaceRef {
    pub dim: usize,
    pub index: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverType {
    NotCover,
    /// `dim(v ∩ x) = dim(u ∩ x) + 1`.
    Slash,
    /// `dim(v ∩ x) = dim(u ∩ x)`.
    Backslash,
}

#[derive(Clone, Debug)]
pub struct GeometryContext {
    field: FieldContext,
    n: usize,
    d: usize,
    x: CanonicalSubspace,
    tables: Vec<Option<SubspaceTable>>,
}

impl GeometryContext {
    /// Builds the tables for the dimensions in `dims`.
    pub fn build(
        field: FieldContext,
        n: usize,
        d: usize,
        x: Option<CanonicalSubspace>,
        dims: &[usize],
        opts: &GeometryOptions,
    ) -> Result<Self> {
        if !(n > d && d >= 1) {
            return Err(Error::InvalidParameters(format!("need N > D >= 1, got N={n}, D={d}")));
        }
        let x = x.unwrap_or_else(|| CanonicalSubspace::coordinate(n, d));
        if x.ambient_dim() != n || x.dim() != d || !x.is_canonical(&field) {
            return Err(Error::InvalidParameters(format!(
                "base vertex must be a canonical {d}-dimensional subspace of F_q^{n}"
            )));
        }
        let mut tables = vec![None; n + 1];
        for &l in dims {
            if l > n {
                return Err(Error::InvalidParameters(format!("table dimension {l} exceeds N={n}")));
            }
            if tables[l].is_some() {
                continue;
            }
            let items = Self::load_or_enumerate(&field, n, l, opts)?;
            let meet_dims = items.iter().map(|u| u.meet_dim(&field, &x)).collect();
            tables[l] = Some(SubspaceTable { dim: l, items, meet_dims });
        }
        Ok(Self { field, n, d, x, tables })
    }

    /// Builds every table `P_0, ..., P_N`.
    pub fn build_full(
        field: FieldContext,
        n: usize,
        d: usize,
        x: Option<CanonicalSubspace>,
        opts: &GeometryOptions,
    ) -> Result<Self> {
        let dims: Vec<usize> = (0..=n).collect();
        Self::build(field, n, d, x, &dims, opts)
    }

    fn load_or_enumerate(f: &FieldContext, n: usize, l: usize, opts: &GeometryOptions) -> Result<Vec<CanonicalSubspace>> {
        let Some(dir) = &opts.cache_dir else {
            return enumerate_subspaces(f, n, l, opts.table_cap);
        };
        let path = dir.join(cache::cache_file_name(u64::from(f.q()), n, l));
        if path.exists() {
            let projected = q_binomial(n as i64, l as i64, u64::from(f.q()));
            if projected > opts.table_cap.into() {
                return Err(Error::SizeCapExceeded {
                    what: format!("cached table {}", path.display()),
                    projected,
                    cap: opts.table_cap,
                });
            }
            return cache::read_table(&path, f, n, l);
        }
        let items = enumerate_subspaces(f, n, l, opts.table_cap)?;
        std::fs::create_dir_all(dir)?;
        cache::write_table(&path, f, n, l, &items)?;
        Ok(items)
    }

    pub fn field(&self) -> &FieldContext {
        &self.field
    }

    pub fn q(&self) -> u64 {
        u64::from(self.field.q())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn x(&self) -> &CanonicalSubspace {
        &self.x
    }

    pub fn table(&self, l: usize) -> Option<&SubspaceTable> {
        self.tables.get(l).and_then(|t| t.as_ref())
    }

    pub fn built_dims(&self) -> Vec<usize> {
        (0..=self.n).filter(|&l| self.tables[l].is_some()).collect()
    }

    pub fn is_full(&self) -> bool {
        self.tables.iter().all(|t| t.is_some())
    }

    pub fn subspace(&self, r: SubspaceRef) -> &CanonicalSubspace {
        self.table(r.dim).expect("table built").get(r.index)
    }

    /// The block `(i, j)` with `u ∈ P_{i,j}`.
    pub fn block_of(&self, r: SubspaceRef) -> (usize, usize) {
        let i = self.table(r.dim).expect("table built").meet_dim(r.index);
        (i, r.dim - i)
    }

    pub fn meet_dim_with_x(&self, u: &CanonicalSubspace) -> usize {
        u.meet_dim(&self.field, &self.x)
    }

    /// `P_{i,j}` for every block that is nonempty among the built tables.
    pub fn census(&self) -> BTreeMap<(usize, usize), Vec<SubspaceRef>> {
        let mut out: BTreeMap<(usize, usize), Vec<SubspaceRef>> = BTreeMap::new();
        for t in self.tables.iter().flatten() {
            for idx in 0..t.len() {
                let i = t.meet_dim(idx);
                out.entry((i, t.dim - i)).or_default().push(SubspaceRef { dim: t.dim, index: idx });
            }
        }
        out
    }

    /// Indices in table `l + 1` of the subspaces covering entry `idx` of table `l`.
    ///
    /// Covers of `u` correspond to points of `V/u`; those are represented by
    /// vectors vanishing on the pivot columns of `u` whose leading entry is 1.
    pub fn covers_up(&self, l: usize, idx: usize) -> Vec<usize> {
        let u = self.table(l).expect("table built").get(idx);
        let up = self.table(l + 1).expect("table above built");
        let free: Vec<usize> = (0..self.n).filter(|c| !u.pivots().contains(c)).collect();
        let q = self.field.q();
        let mut out = Vec::with_capacity(q_int_int((self.n - l) as u32, self.q()).try_into().unwrap_or(0));
        for (lead_pos, &lead) in free.iter().enumerate() {
            let tail = &free[lead_pos + 1..];
            let mut digits = vec![0 as FieldElem; tail.len()];
            loop {
                let mut w = vec![0 as FieldElem; self.n];
                w[lead] = 1;
                for (&c, &a) in tail.iter().zip(&digits) {
                    w[c] = a;
                }
                let v = u.extend_by(&self.field, &w);
                out.push(up.index_of(&v).expect("cover present in table"));
                let mut i = 0;
                loop {
                    if i == digits.len() {
                        break;
                    }
                    digits[i] += 1;
                    if digits[i] < q {
                        break;
                    }
                    digits[i] = 0;
                    i += 1;
                }
                if i == digits.len() {
                    break;
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// Classifies whether `v` covers `u`, and if so which kind of cover it is.
pub fn cover_type(ctx: &GeometryContext, u: &CanonicalSubspace, v: &CanonicalSubspace) -> CoverType {
    if v.dim() != u.dim() + 1 || !v.contains(ctx.field(), u) {
        return CoverType::NotCover;
    }
    let mu = ctx.meet_dim_with_x(u);
    let mv = ctx.meet_dim_with_x(v);
    if mv == mu + 1 {
        CoverType::Slash
    } else if mv == mu {
        CoverType::Backslash
    } else {
        CoverType::NotCover
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusEntry {
    pub i: usize,
    pub j: usize,
    pub size: usize,
    /// `q^{(D-i)j} [D choose i]_q [N-D choose j]_q`, compared as an observation only.
    pub candidate_formula: String,
    pub matches_candidate: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub q: u64,
    pub n: usize,
    pub d: usize,
    pub table_sizes: Vec<(usize, usize)>,
    pub blocks: Vec<CensusEntry>,
    pub checks: CheckList,
}

impl CensusReport {
    pub fn block_size(&self, i: usize, j: usize) -> usize {
        self.blocks.iter().find(|b| b.i == i && b.j == j).map_or(0, |b| b.size)
    }
}

/// Counts every block `P_{i,j}` and checks the table sizes, down-cover
/// counts and the exhaustiveness of the `/` vs `\` classification.
pub fn geometry_census(ctx: &GeometryContext) -> Result<CensusReport> {
    if !ctx.is_full() {
        return Err(Error::InvalidParameters("geometry census needs every dimension table".into()));
    }
    let q = ctx.q();
    let (n, d) = (ctx.n(), ctx.d());
    let mut checks = CheckList::new();

    let mut table_sizes = Vec::new();
    for l in 0..=n {
        let t = ctx.table(l).unwrap();
        table_sizes.push((l, t.len()));
        checks.expect_eq(format!("|P_{l}|"), q_binomial(n as i64, l as i64, q), BigInt::from(t.len()));
    }

    let census = ctx.census();
    let total: usize = census.values().map(Vec::len).sum();
    let poset_size: usize = table_sizes.iter().map(|&(_, s)| s).sum();
    checks.expect_eq("partition covers P exactly once", poset_size, total);
    checks.expect(
        "every block index in range",
        census.keys().all(|&(i, j)| i <= d && j <= n - d),
        "block outside 0<=i<=D, 0<=j<=N-D",
    );

    let mut blocks = Vec::new();
    for i in 0..=d {
        for j in 0..=(n - d) {
            let size = census.get(&(i, j)).map_or(0, Vec::len);
            let candidate = BigInt::from(q).pow(((d - i) * j) as u32)
                * q_binomial(d as i64, i as i64, q)
                * q_binomial((n - d) as i64, j as i64, q);
            blocks.push(CensusEntry {
                i,
                j,
                size,
                matches_candidate: candidate == BigInt::from(size),
                candidate_formula: candidate.to_string(),
            });
        }
    }
    checks.observe(
        "|P_{i,j}| = q^{(D-i)j}[D,i]_q[N-D,j]_q",
        "observed formula",
        if blocks.iter().all(|b| b.matches_candidate) { "matches all blocks" } else { "differs" },
    );

    // down-cover counts through the inverse of the up-cover relation
    let mut bad_down = None;
    let mut bad_class = None;
    let mut bad_up = None;
    for l in 0..n {
        let lower = ctx.table(l).unwrap();
        let upper = ctx.table(l + 1).unwrap();
        let mut down = vec![0usize; upper.len()];
        let want_up = q_int_int((n - l) as u32, q);
        for idx in 0..lower.len() {
            let ups = ctx.covers_up(l, idx);
            if BigInt::from(ups.len()) != want_up && bad_up.is_none() {
                bad_up = Some(format!("dim {l} index {idx}: {} covers", ups.len()));
            }
            for &v in &ups {
                down[v] += 1;
                let t = cover_type(ctx, lower.get(idx), upper.get(v));
                if t == CoverType::NotCover && bad_class.is_none() {
                    bad_class = Some(format!("dim {l} index {idx} -> {v}"));
                }
            }
        }
        let want_down = q_int_int((l + 1) as u32, q);
        if let Some(v) = down.iter().position(|&c| BigInt::from(c) != want_down) {
            bad_down.get_or_insert(format!("dim {} index {v}: covers {} subspaces", l + 1, down[v]));
        }
    }
    checks.expect("every u of dim l is covered by [N-l] subspaces", bad_up.is_none(), bad_up.unwrap_or_default());
    checks.expect("every u of dim l covers [l] subspaces", bad_down.is_none(), bad_down.unwrap_or_default());
    checks.expect(
        "every cover is a /-cover or a \\-cover",
        bad_class.is_none(),
        bad_class.unwrap_or_default(),
    );

    Ok(CensusReport {
        q,
        n,
        d,
        table_sizes,
        blocks,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projgeom::subspaces_within;

    fn ctx(q: u64, n: usize, d: usize) -> GeometryContext {
        GeometryContext::build_full(FieldContext::new(q).unwrap(), n, d, None, &GeometryOptions::default()).unwrap()
    }

    #[test]
    fn census_j2_5_2() {
        let c = ctx(2, 5, 2);
        let rep = geometry_census(&c).unwrap();
        assert!(rep.checks.all_passed(), "{:?}", rep.checks);
        assert_eq!(rep.block_size(2, 0), 1);
        assert_eq!(rep.block_size(1, 1), 42);
        assert!(rep.blocks.iter().all(|b| b.matches_candidate));
    }

    #[test]
    fn covered_count_of_three_space_oracle() {
        // oracle: enumerate 2-subspaces inside a 3-dimensional u directly
        let c = ctx(2, 5, 2);
        let f = c.field().clone();
        let u = c.table(3).unwrap().get(11).clone();
        let inside = subspaces_within(&f, &u, 2);
        assert_eq!(inside.len(), 7);
        let covered = c
            .table(2)
            .unwrap()
            .items()
            .iter()
            .filter(|w| cover_type(&c, w, &u) != CoverType::NotCover)
            .count();
        assert_eq!(covered, 7);
    }

    #[test]
    fn cover_type_examples() {
        let c = ctx(2, 5, 2);
        let f = c.field().clone();
        let x = c.x().clone();
        let lines_in_x = subspaces_within(&f, &x, 1);
        assert_eq!(cover_type(&c, &x, &x), CoverType::NotCover);
        assert_eq!(cover_type(&c, &lines_in_x[0], &x), CoverType::Slash);
        // a vertex v != x meeting x in a line: v \-covers that line
        let v = c
            .table(2)
            .unwrap()
            .items()
            .iter()
            .find(|v| *v != &x && c.meet_dim_with_x(v) == 1)
            .unwrap()
            .clone();
        let meet = crate::projgeom::intersect(&f, &v, &x);
        assert_eq!(meet.dim(), 1);
        assert_eq!(cover_type(&c, &meet, &v), CoverType::Backslash);
    }

    #[test]
    fn rejects_bad_parameters() {
        let f = FieldContext::new(2).unwrap();
        assert!(GeometryContext::build(f.clone(), 2, 2, None, &[], &GeometryOptions::default()).is_err());
        assert!(GeometryContext::build(f.clone(), 3, 0, None, &[], &GeometryOptions::default()).is_err());
        let wrong_x = CanonicalSubspace::coordinate(5, 3);
        assert!(GeometryContext::build(f, 5, 2, Some(wrong_x), &[], &GeometryOptions::default()).is_err());
    }

    #[test]
    fn enumeration_is_deterministic() {
        let a = ctx(3, 4, 1);
        let b = ctx(3, 4, 1);
        for l in 0..=4 {
            assert_eq!(a.table(l).unwrap().items(), b.table(l).unwrap().items());
        }
    }
}
