//! Verification harness for Grassmann graphs: runs the suites, assembles a
//! JSON report and a plain-text summary.

pub mod config;
pub mod report;
mod run;

pub use config::{expand_suites, parse_rows, RunConfig, Suite};
pub use report::Report;
pub use run::run;
