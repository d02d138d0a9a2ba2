//! The nucleus `N = N(x)` and its two bases `{α^∨}` and `{α^N}`.

mod actions;
mod bases;
mod boundary;
mod compute;
mod family;
mod gamma;

pub use actions::{verify_actions, ActionReport, ActionResidual};
pub use bases::{verify_bases, BasesReport, BasisStatus};
pub use boundary::{boundary_case_report, BoundaryReport};
pub use compute::{compute_nucleus, NucleusData};
pub use family::{alpha_family, AlphaFamily};
pub use gamma::{connectivity_check, gamma_components, induced_connected, GammaComponents};
