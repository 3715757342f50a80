//! Pass/fail verdicts with element-index witnesses.

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Element indices exhibiting a failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Check {
        Check { name: name.into(), passed: true, witness: None, detail: None }
    }

    pub fn fail(name: impl Into<String>, witness: Vec<usize>, detail: impl Into<String>) -> Check {
        Check { name: name.into(), passed: false, witness: Some(witness), detail: Some(detail.into()) }
    }

    /// A boolean verdict; `witness` is only consulted on failure.
    pub fn from_result(name: impl Into<String>, r: Result<(), (Vec<usize>, String)>) -> Check {
        match r {
            Ok(()) => Check::pass(name),
            Err((w, d)) => Check::fail(name, w, d),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Check {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}
