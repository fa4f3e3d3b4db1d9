//! Verification entries and reports.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationEntry {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    /// "zero" or a short description of the first nonzero residual entry.
    pub residual: String,
    pub time_ms: u64,
    /// For equivalence checks: whether the paired defect vanished.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub defect_zero: Option<bool>,
}

/// What a check computes: whether it passed, the residual description and
/// optionally the paired defect flag.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub pass: bool,
    pub residual: String,
    pub defect_zero: Option<bool>,
}

impl Outcome {
    pub fn identity(residual_zero: bool, residual: String) -> Outcome {
        Outcome { pass: residual_zero, residual, defect_zero: None }
    }

    /// An equivalence holds when the residual and the defect vanish together.
    pub fn equivalence(residual_zero: bool, residual: String, defect_zero: bool) -> Outcome {
        Outcome { pass: residual_zero == defect_zero, residual, defect_zero: Some(defect_zero) }
    }
}

impl VerificationEntry {
    /// Runs `f`, timing it. Errors become failing entries.
    pub fn run(id: impl Into<String>, anchor: impl Into<String>, f: impl FnOnce() -> Result<Outcome>) -> Self {
        let start = Instant::now();
        let out = f();
        let time_ms = start.elapsed().as_millis() as u64;
        let (status, residual, defect_zero) = match out {
            Ok(o) => (if o.pass { Status::Pass } else { Status::Fail }, o.residual, o.defect_zero),
            Err(e) => (Status::Fail, format!("error: {e}"), None),
        };
        VerificationEntry { id: id.into(), anchor: anchor.into(), status, residual, time_ms, defect_zero }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub version: String,
    pub seed: u64,
    pub entries: Vec<VerificationEntry>,
}

impl VerificationReport {
    pub fn new(seed: u64, entries: Vec<VerificationEntry>) -> Self {
        VerificationReport { version: format!("qlie {}", env!("CARGO_PKG_VERSION")), seed, entries }
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.passed())
    }

    pub fn failing(&self) -> impl Iterator<Item = &VerificationEntry> {
        self.entries.iter().filter(|e| !e.passed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn errors_become_failures() {
        let e = VerificationEntry::run("x", "y", || Err(Error::Solver("boom".into())));
        assert!(!e.passed());
        assert!(e.residual.contains("boom"));
    }

    #[test]
    fn equivalence_passes_when_both_fail() {
        let e = VerificationEntry::run("x", "y", || Ok(Outcome::equivalence(false, "nonzero".into(), false)));
        assert!(e.passed());
    }
}
