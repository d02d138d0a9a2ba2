use std::fmt::Write as _;

use qgrass_core::grassmann::SpectrumExport;
use qgrass_core::nucleus::{ActionResidual, BoundaryReport};
use qgrass_core::qfield::QIdentityReport;
use qgrass_core::{Check, CheckList, Verdict};
use serde::Serialize;

use crate::config::RunConfig;

#[derive(Clone, Debug, Serialize)]
pub struct Params {
    pub q: u64,
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(rename = "D")]
    pub d: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub verdict: Verdict,
    pub passed: usize,
    pub failed: usize,
    pub observed: usize,
    pub checks: CheckList,
}

impl SuiteReport {
    pub fn new(name: &str, checks: CheckList) -> Self {
        let count = |v: Verdict| checks.iter().filter(|c| c.verdict == v).count();
        let (passed, failed, observed) = (count(Verdict::Pass), count(Verdict::Fail), count(Verdict::Observed));
        let verdict = if failed > 0 {
            Verdict::Fail
        } else if passed == 0 && observed > 0 {
            Verdict::Observed
        } else {
            Verdict::Pass
        };
        Self {
            name: name.into(),
            verdict,
            passed,
            failed,
            observed,
            checks,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaSummary {
    pub i: usize,
    pub count: usize,
    pub sizes: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Connectivity {
    pub far_sphere_size: usize,
    pub far_sphere_connected: bool,
    pub every_g_alpha_connected: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ActionTheorems<T> {
    #[serde(rename = "A_vee")]
    pub a_vee: T,
    #[serde(rename = "A_nuc")]
    pub a_nuc: T,
    #[serde(rename = "Astar_nuc")]
    pub astar_nuc: T,
    #[serde(rename = "Astar_vee")]
    pub astar_vee: T,
}

#[derive(Clone, Debug, Serialize)]
pub struct BasesSummary {
    pub vee: Verdict,
    pub nuc: Verdict,
    pub transitions_inverse: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub suite: String,
    #[serde(flatten)]
    pub check: Check,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunInfo {
    /// Seconds since the Unix epoch.
    pub generated_at: u64,
    pub elapsed_ms: u128,
    pub suite_ms: Vec<(String, u128)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub params: Params,
    pub config: RunConfig,
    /// `N = 2D`: assertions that need `N > 2D` are recorded as observations.
    pub boundary: bool,
    pub suites: Vec<SuiteReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertices: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<SpectrumExport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nucleus_dims: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mult_r: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_components: Option<Vec<GammaSummary>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub connectivity: Option<Connectivity>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub action_theorems: Option<ActionTheorems<Verdict>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub action_residuals: Option<ActionTheorems<ActionResidual>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bases: Option<BasesSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identities: Option<Vec<QIdentityReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundary_report: Option<BoundaryReport>,
    pub failures: Vec<Failure>,
    pub run: RunInfo,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| s.name == name)
    }

    /// JSON with the `run` field removed, which is stable across identical configs.
    pub fn stable_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut().expect("object").remove("run");
        v
    }

    pub fn summary_table(&self) -> String {
        let mut s = String::new();
        let p = &self.params;
        let _ = writeln!(
            s,
            "J_{}({},{}){}",
            p.q,
            p.n,
            p.d,
            if self.boundary { "  [boundary N = 2D]" } else { "" }
        );
        let timing = |name: &str| self.run.suite_ms.iter().find(|(n, _)| n == name).map_or(0, |(_, ms)| *ms);
        let _ = writeln!(s, "{:<12} {:<9} {:>6} {:>6} {:>6} {:>9}", "suite", "verdict", "pass", "fail", "obs", "ms");
        for r in &self.suites {
            let verdict = match r.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "FAIL",
                Verdict::Observed => "observed",
            };
            let _ = writeln!(
                s,
                "{:<12} {:<9} {:>6} {:>6} {:>6} {:>9}",
                r.name,
                verdict,
                r.passed,
                r.failed,
                r.observed,
                timing(&r.name)
            );
        }
        if let Some(d) = &self.nucleus_dims {
            let _ = writeln!(s, "nucleus dims {d:?}, mult_r {:?}", self.mult_r.clone().unwrap_or_default());
        }
        for f in &self.failures {
            let _ = writeln!(
                s,
                "failed [{}] {}: expected {}, observed {}",
                f.suite, f.check.name, f.check.expected, f.check.observed
            );
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_verdicts() {
        let mut c = CheckList::new();
        c.expect_eq("one", 1, 1);
        assert_eq!(SuiteReport::new("s", c.clone()).verdict, Verdict::Pass);
        c.observe("note", "x", "y");
        assert_eq!(SuiteReport::new("s", c.clone().into_observations()).verdict, Verdict::Observed);
        c.expect_eq("two", 2, 3);
        let s = SuiteReport::new("s", c);
        assert_eq!((s.verdict, s.passed, s.failed, s.observed), (Verdict::Fail, 1, 1, 1));
    }
}
