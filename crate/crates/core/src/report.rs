//! Pass/fail records shared by every verification routine.

use serde::{Deserialize, Serialize};

/// Outcome of one named check. A failing check always carries a witness.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Number of cases (tuples, samples, pairs) examined.
    pub cases: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>, cases: usize) -> Self {
        Self { name: name.into(), passed: true, cases, witness: None, residual: None, note: None }
    }

    pub fn fail(name: impl Into<String>, cases: usize, witness: impl Into<String>) -> Self {
        Self { name: name.into(), passed: false, cases, witness: Some(witness.into()), residual: None, note: None }
    }

    /// `pass` when `witness` is `None`, `fail` otherwise.
    pub fn from_witness(name: impl Into<String>, cases: usize, witness: Option<String>) -> Self {
        match witness {
            None => Self::pass(name, cases),
            Some(w) => Self::fail(name, cases, w),
        }
    }

    /// Residual check: passes when `residual <= tol`.
    pub fn residual(name: impl Into<String>, cases: usize, residual: f64, tol: f64) -> Self {
        let name = name.into();
        let mut c = if residual <= tol {
            Self::pass(name, cases)
        } else {
            Self::fail(name, cases, format!("residual {residual:e} exceeds tolerance {tol:e}"))
        };
        c.residual = Some(residual);
        c
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn prefixed(mut self, prefix: &str) -> Self {
        self.name = format!("{prefix}/{}", self.name);
        self
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

/// First failing check, if any.
pub fn first_failure(checks: &[Check]) -> Option<&Check> {
    checks.iter().find(|c| !c.passed)
}
