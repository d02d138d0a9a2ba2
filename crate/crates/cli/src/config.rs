use std::collections::BTreeSet;
use std::path::PathBuf;

use clap::ValueEnum;
use qgrass_core::halgebra::DEFAULT_POSET_CAP;
use qgrass_core::projgeom::{CanonicalSubspace, DEFAULT_TABLE_CAP};
use qgrass_core::qfield::FieldContext;
use qgrass_core::{Error, Result};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Geometry,
    Spectrum,
    Krein,
    Nucleus,
    Actions,
    Bases,
    Gamma,
    Identities,
    Halgebra,
    Boundary,
    All,
}

impl Suite {
    /// Every concrete suite, in execution order.
    pub const ORDER: [Suite; 10] = [
        Suite::Geometry,
        Suite::Spectrum,
        Suite::Krein,
        Suite::Nucleus,
        Suite::Actions,
        Suite::Bases,
        Suite::Gamma,
        Suite::Halgebra,
        Suite::Identities,
        Suite::Boundary,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Geometry => "geometry",
            Suite::Spectrum => "spectrum",
            Suite::Krein => "krein",
            Suite::Nucleus => "nucleus",
            Suite::Actions => "actions",
            Suite::Bases => "bases",
            Suite::Gamma => "gamma",
            Suite::Identities => "identities",
            Suite::Halgebra => "halgebra",
            Suite::Boundary => "boundary",
            Suite::All => "all",
        }
    }

    /// Whether the suite's assertions depend on `N > 2D`.
    pub fn needs_strict_bound(self) -> bool {
        matches!(self, Suite::Nucleus | Suite::Actions | Suite::Bases | Suite::Gamma)
    }
}

pub fn expand_suites(selected: &[Suite]) -> BTreeSet<Suite> {
    if selected.is_empty() || selected.contains(&Suite::All) {
        Suite::ORDER.into_iter().collect()
    } else {
        selected.iter().copied().collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub q: u64,
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(rename = "D")]
    pub d: usize,
    /// Explicit base vertex rows; `None` selects the span of the first `D` unit vectors.
    pub x_rows: Option<Vec<Vec<u32>>>,
    pub suites: BTreeSet<Suite>,
    pub max_vertices: usize,
    pub max_poset: usize,
    /// Largest `ℓ` for the identities suite.
    pub identities_lmax: i64,
    #[serde(skip)]
    pub out: Option<PathBuf>,
    #[serde(skip)]
    pub cache_dir: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(q: u64, n: usize, d: usize, suites: &[Suite]) -> Self {
        Self {
            q,
            n,
            d,
            x_rows: None,
            suites: expand_suites(suites),
            max_vertices: DEFAULT_TABLE_CAP,
            max_poset: DEFAULT_POSET_CAP,
            identities_lmax: 12,
            out: None,
            cache_dir: None,
        }
    }

    pub fn has(&self, s: Suite) -> bool {
        self.suites.contains(&s)
    }

    pub fn validate(&self) -> Result<FieldContext> {
        let field = FieldContext::new(self.q)?;
        if !(self.n > self.d && self.d >= 1) {
            return Err(Error::InvalidParameters(format!("need N > D >= 1, got N={}, D={}", self.n, self.d)));
        }
        if self.max_vertices == 0 || self.max_poset == 0 {
            return Err(Error::InvalidParameters("size caps must be positive".into()));
        }
        Ok(field)
    }

    /// The base vertex, when given explicitly.
    pub fn base_vertex(&self, field: &FieldContext) -> Result<Option<CanonicalSubspace>> {
        let Some(rows) = &self.x_rows else { return Ok(None) };
        if rows.iter().any(|r| r.len() != self.n) {
            return Err(Error::InvalidParameters(format!("each row of x must have {} entries", self.n)));
        }
        if rows.iter().flatten().any(|&c| u64::from(c) >= self.q) {
            return Err(Error::InvalidParameters(format!("entries of x must lie in 0..{}", self.q)));
        }
        let x = CanonicalSubspace::from_spanning(field, self.n, rows);
        if x.dim() != self.d || rows.len() != self.d {
            return Err(Error::InvalidParameters(format!("x must be given by {} independent rows", self.d)));
        }
        Ok(Some(x))
    }
}

/// Parses `"1 0 0;0 1 0"` (or comma-separated entries) into rows.
pub fn parse_rows(spec: &str) -> Result<Vec<Vec<u32>>> {
    spec.split(';')
        .map(|row| {
            row.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<u32>().map_err(|_| Error::InvalidParameters(format!("bad entry {t:?} in --x-rows"))))
                .collect()
        })
        .collect()
}
