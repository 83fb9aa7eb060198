//! Pass/fail reports shared by every verification routine.

use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// Hypotheses of the statement do not hold; `detail` says what was
    /// observed anyway.
    NotApplicable,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn push(&mut self, name: impl Into<String>, status: Status, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), status, detail: detail.into(), witness: None });
    }

    pub fn push_witness(
        &mut self,
        name: impl Into<String>,
        status: Status,
        detail: impl Into<String>,
        witness: impl Into<String>,
    ) {
        self.checks.push(Check {
            name: name.into(),
            status,
            detail: detail.into(),
            witness: Some(witness.into()),
        });
    }

    pub fn pass_fail(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.push(name, if ok { Status::Pass } else { Status::Fail }, detail);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// No check failed. Not-applicable checks do not count against.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::NotApplicable => "N/A ",
            };
            writeln!(f, "{tag} {}: {}", c.name, c.detail)?;
            if let Some(w) = &c.witness {
                writeln!(f, "     witness: {w}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_json() {
        let r = Report::new();
        assert_eq!(serde_json::to_string(&r).unwrap(), r#"{"checks":[]}"#);
        assert!(r.passed());
    }

    #[test]
    fn not_applicable_does_not_fail() {
        let mut r = Report::new();
        r.push("a", Status::NotApplicable, "outside index");
        r.pass_fail("b", true, "");
        assert!(r.passed());
        r.pass_fail("c", false, "");
        assert!(!r.passed());
    }
}
