//! The Grassmann graph `J_q(N,D)`: distances, intersection numbers, the
//! eigenvalues and primitive idempotents, the dual system at a base vertex,
//! Krein parameters, and intersection numbers of irreducible T-modules.

mod export;
mod graph;
mod intersection;
mod krein;
pub mod params;
mod spectral;
mod tmodule;

pub use export::{spectrum_export, IntersectionExport, SpectrumExport};
pub use graph::{build_graph, validate_parameters, GraphContext, GraphOptions, BFS_SAMPLE_PAIRS, FULL_BFS_MAX};
pub use intersection::{intersection_numbers, IntersectionNumbers};
pub use krein::{krein_qpoly_check, KreinReport, FULL_KREIN_CHECK_MAX};
pub use spectral::{spectral_system, SpectralSystem, FULL_PRODUCT_CHECK_MAX, RANK_CHECK_MAX};
pub use tmodule::{tmodule_intersection_numbers, TModuleParams};
