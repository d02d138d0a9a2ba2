use std::collections::VecDeque;
use std::path::PathBuf;

use num_bigint::BigInt;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::params::valency;
use crate::check::CheckList;
use crate::error::{Error, Result};
use crate::exactla::ExactMatrix;
use crate::projgeom::{CanonicalSubspace, GeometryContext, GeometryOptions};
use crate::qfield::{q_binomial, FieldContext};

/// Full BFS cross-check up to this many vertices; sampled above it.
pub const FULL_BFS_MAX: usize = 1000;
pub const BFS_SAMPLE_PAIRS: usize = 10_000;

#[derive(Clone, Debug)]
pub struct GraphOptions {
    pub max_vertices: usize,
    pub cache_dir: Option<PathBuf>,
    /// Base vertex; defaults to the span of the first `D` unit vectors.
    pub x: Option<CanonicalSubspace>,
    pub seed: u64,
}

impl Default for GraphOptions {
    fn default() -> Self {
        Self {
            max_vertices: crate::projgeom::DEFAULT_TABLE_CAP,
            cache_dir: None,
            x: None,
            seed: 0x5eed,
        }
    }
}

/// `J_q(N,D)` on the ordered table of `D`-subspaces, with all pairwise distances.
#[derive(Clone, Debug)]
pub struct GraphContext {
    geometry: GeometryContext,
    dist: Vec<u8>,
    adjacency: Vec<Vec<usize>>,
    x_vertex: usize,
    checks: CheckList,
}

/// Validates `N >= 2D`, `D >= 1` and a prime `q`.
pub fn validate_parameters(q: u64, n: usize, d: usize) -> Result<FieldContext> {
    let field = FieldContext::new(q)?;
    if d < 1 || n <= d {
        return Err(Error::InvalidParameters(format!("need N > D >= 1, got N={n}, D={d}")));
    }
    if n < 2 * d {
        return Err(Error::InvalidParameters(format!(
            "need N >= 2D, got N={n}, D={d}; use D={} instead, the graph is the same",
            n - d
        )));
    }
    if d > u8::MAX as usize {
        return Err(Error::InvalidParameters(format!("D={d} is too large")));
    }
    Ok(field)
}

pub fn build_graph(q: u64, n: usize, d: usize, opts: &GraphOptions) -> Result<GraphContext> {
    let field = validate_parameters(q, n, d)?;
    let projected = q_binomial(n as i64, d as i64, q);
    if projected > BigInt::from(opts.max_vertices) {
        return Err(Error::SizeCapExceeded {
            what: format!("vertex set of J_{q}({n},{d})"),
            projected,
            cap: opts.max_vertices,
        });
    }
    let geo_opts = GeometryOptions {
        table_cap: opts.max_vertices,
        cache_dir: opts.cache_dir.clone(),
    };
    let geometry = GeometryContext::build(field, n, d, opts.x.clone(), &[d - 1, d], &geo_opts)?;
    GraphContext::from_geometry(geometry, opts.seed)
}

impl GraphContext {
    /// Builds the graph from a geometry whose tables include dimensions `D-1` and `D`.
    pub fn from_geometry(geometry: GeometryContext, seed: u64) -> Result<Self> {
        validate_parameters(geometry.q(), geometry.n(), geometry.d())?;
        let d = geometry.d();
        if geometry.table(d - 1).is_none() || geometry.table(d).is_none() {
            return Err(Error::InvalidParameters("graph needs the tables of dimension D-1 and D".into()));
        }
        let f = geometry.field().clone();
        let verts = geometry.table(d).unwrap();
        let nv = verts.len();
        let x_vertex = verts.index_of(geometry.x()).expect("x is a vertex");

        // y ~ z iff they share a hyperplane: the D-spaces over each (D-1)-space form a clique
        let mut adjacency = vec![Vec::new(); nv];
        for w in 0..geometry.table(d - 1).unwrap().len() {
            let ups = geometry.covers_up(d - 1, w);
            for (a, &y) in ups.iter().enumerate() {
                for &z in &ups[a + 1..] {
                    adjacency[y].push(z);
                    adjacency[z].push(y);
                }
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }

        let mut dist = vec![0u8; nv * nv];
        dist.par_chunks_mut(nv).enumerate().for_each(|(y, row)| {
            let vy = verts.get(y);
            for (z, slot) in row.iter_mut().enumerate() {
                *slot = (d - vy.meet_dim(&f, verts.get(z))) as u8;
            }
        });

        let mut gc = Self {
            geometry,
            dist,
            adjacency,
            x_vertex,
            checks: CheckList::new(),
        };
        gc.checks = gc.self_checks(seed);
        Ok(gc)
    }

    fn self_checks(&self, seed: u64) -> CheckList {
        let (nv, d) = (self.n_vertices(), self.d());
        let mut checks = CheckList::new();
        checks.expect_eq(
            "|X| = [N choose D]_q",
            q_binomial(self.n() as i64, d as i64, self.q()),
            BigInt::from(nv),
        );
        let k = valency(self.q(), self.n(), d);
        let bad_deg = (0..nv).find(|&y| BigInt::from(self.adjacency[y].len()) != k);
        checks.expect(
            "every vertex has valency q[D][N-D]",
            bad_deg.is_none(),
            bad_deg.map_or_else(String::new, |y| format!("vertex {y} has degree {}", self.adjacency[y].len())),
        );
        let symmetric = (0..nv).all(|y| (0..y).all(|z| self.dist[y * nv + z] == self.dist[z * nv + y]));
        checks.expect("distance matrix symmetric", symmetric, "asymmetric pair found");
        let diag = (0..nv).all(|y| self.dist[y * nv + y] == 0);
        checks.expect("A_0 = I", diag, "nonzero self-distance");
        let bounded = self.dist.iter().all(|&v| (v as usize) <= d);
        checks.expect("sum of A_i = J", bounded, "distance exceeds D");
        let off_diag = (0..nv).all(|y| (0..nv).all(|z| y == z || self.dist[y * nv + z] > 0));
        checks.expect("distinct vertices at positive distance", off_diag, "two vertices at distance 0");
        let adj_ok = (0..nv).all(|y| {
            let from_dist: Vec<usize> = (0..nv).filter(|&z| self.dist[y * nv + z] == 1).collect();
            from_dist == self.adjacency[y]
        });
        checks.expect("edges are exactly the pairs meeting in a hyperplane", adj_ok, "mismatch");

        let (label, mismatch) = if nv <= FULL_BFS_MAX {
            let bad = (0..nv).into_par_iter().find_first(|&s| {
                let dd = self.bfs(s);
                (0..nv).any(|z| dd[z] != u32::from(self.dist[s * nv + z]))
            });
            ("BFS distance equals D - dim(y∩z) for all pairs", bad.map(|s| format!("source {s}")))
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let sources = sample(&mut rng, nv, 100.min(nv)).into_vec();
            let per = BFS_SAMPLE_PAIRS / sources.len();
            let targets: Vec<Vec<usize>> = sources.iter().map(|_| sample(&mut rng, nv, per.min(nv)).into_vec()).collect();
            let bad = sources.par_iter().zip(&targets).find_first(|(&s, ts)| {
                let dd = self.bfs(s);
                ts.iter().any(|&z| dd[z] != u32::from(self.dist[s * nv + z]))
            });
            (
                "BFS distance equals D - dim(y∩z) on 10000 sampled pairs",
                bad.map(|(s, _)| format!("source {s}")),
            )
        };
        checks.expect(label, mismatch.is_none(), mismatch.unwrap_or_default());
        checks
    }

    /// Path-length distances from `src` along the edge lists.
    pub fn bfs(&self, src: usize) -> Vec<u32> {
        let mut out = vec![u32::MAX; self.n_vertices()];
        out[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(y) = queue.pop_front() {
            for &z in &self.adjacency[y] {
                if out[z] == u32::MAX {
                    out[z] = out[y] + 1;
                    queue.push_back(z);
                }
            }
        }
        out
    }

    pub fn geometry(&self) -> &GeometryContext {
        &self.geometry
    }

    pub fn q(&self) -> u64 {
        self.geometry.q()
    }

    pub fn n(&self) -> usize {
        self.geometry.n()
    }

    pub fn d(&self) -> usize {
        self.geometry.d()
    }

    pub fn is_boundary(&self) -> bool {
        self.n() == 2 * self.d()
    }

    pub fn n_vertices(&self) -> usize {
        self.adjacency.len()
    }

    pub fn vertices(&self) -> &[CanonicalSubspace] {
        self.geometry.table(self.d()).unwrap().items()
    }

    pub fn vertex(&self, y: usize) -> &CanonicalSubspace {
        &self.vertices()[y]
    }

    pub fn vertex_index(&self, y: &CanonicalSubspace) -> Option<usize> {
        self.geometry.table(self.d()).unwrap().index_of(y)
    }

    pub fn x_vertex(&self) -> usize {
        self.x_vertex
    }

    pub fn dist(&self, y: usize, z: usize) -> usize {
        self.dist[y * self.n_vertices() + z] as usize
    }

    pub fn neighbors(&self, y: usize) -> &[usize] {
        &self.adjacency[y]
    }

    /// `Γ_i(x)` in vertex order.
    pub fn sphere(&self, i: usize) -> Vec<usize> {
        (0..self.n_vertices()).filter(|&y| self.dist(self.x_vertex, y) == i).collect()
    }

    pub fn checks(&self) -> &CheckList {
        &self.checks
    }

    /// Distance-`i` matrix `A_i` in sparse storage.
    pub fn distance_matrix(&self, i: usize) -> ExactMatrix {
        let nv = self.n_vertices();
        let pattern: Vec<Vec<usize>> = (0..nv)
            .into_par_iter()
            .map(|y| (0..nv).filter(|&z| self.dist(y, z) == i).collect())
            .collect();
        ExactMatrix::from_pattern(nv, nv, &pattern).expect("pattern in range")
    }

    pub fn adjacency_matrix(&self) -> ExactMatrix {
        let nv = self.n_vertices();
        ExactMatrix::from_pattern(nv, nv, &self.adjacency).expect("pattern in range")
    }
}
