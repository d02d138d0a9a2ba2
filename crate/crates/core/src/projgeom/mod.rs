//! Subspaces of `F_q^N` in canonical form, the poset `P` of all subspaces,
//! its partition into the blocks `P_{i,j}` relative to a fixed `x`, and the
//! refinement of the covering relation into `/`-covers and `\`-covers.

mod cache;
mod context;
mod fq;
mod subspace;

pub use cache::{cache_file_name, read_table, write_table};
pub use context::{
    cover_type, geometry_census, CensusReport, CoverType, GeometryContext, GeometryOptions, SubspaceRef,
    SubspaceTable, DEFAULT_TABLE_CAP,
};
pub use subspace::{enumerate_subspaces, intersect, subspaces_within, CanonicalSubspace};
