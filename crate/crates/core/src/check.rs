//! Verdict bookkeeping shared by every verification routine.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// Computed and recorded, but not asserted.
    Observed,
}

/// One asserted (or observed) quantity with its expected and observed value.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub observed: String,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Default, Serialize)]
#[serde(transparent)]
pub struct CheckList {
    checks: Vec<Check>,
}

impl CheckList {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records `observed == expected` as an assertion.
    pub fn expect_eq<T: PartialEq + std::fmt::Display>(
        &mut self,
        name: impl Into<String>,
        expected: T,
        observed: T,
    ) -> bool {
        let ok = expected == observed;
        self.checks.push(Check {
            name: name.into(),
            expected: expected.to_string(),
            observed: observed.to_string(),
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
        });
        ok
    }

    /// Records a boolean assertion; `detail` describes the observation.
    pub fn expect(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) -> bool {
        self.checks.push(Check {
            name: name.into(),
            expected: "true".into(),
            observed: if ok { "true".into() } else { detail.into() },
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
        });
        ok
    }

    pub fn observe(&mut self, name: impl Into<String>, expected: impl Into<String>, observed: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            expected: expected.into(),
            observed: observed.into(),
            verdict: Verdict::Observed,
        });
    }

    /// Downgrades every assertion to an observation (used in boundary mode).
    pub fn into_observations(mut self) -> Self {
        for c in &mut self.checks {
            c.verdict = Verdict::Observed;
        }
        self
    }

    pub fn extend(&mut self, other: CheckList) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.verdict != Verdict::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.verdict == Verdict::Fail)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter()
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}
