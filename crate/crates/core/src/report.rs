//! Pass/fail/info reports shared by the verifiers and the command-line tool.

use serde::Serialize;

use crate::rational::{to_decimal, to_fraction, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    /// Which statement of the underlying argument the check corresponds to.
    pub anchor: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

/// `"p/q (d.dddddd)"`: exact value with a six-place decimal.
pub fn render(r: &Rational) -> String {
    format!("{} ({})", to_fraction(r), to_decimal(r, 6))
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { suite: suite.into(), checks: Vec::new() }
    }

    pub fn push(
        &mut self,
        id: impl Into<String>,
        status: Status,
        expected: impl Into<String>,
        actual: impl Into<String>,
        anchor: impl Into<String>,
    ) {
        self.checks.push(Check {
            id: id.into(),
            status,
            expected: expected.into(),
            actual: actual.into(),
            anchor: anchor.into(),
        });
    }

    /// Records a pass/fail check decided by `ok`.
    pub fn check(
        &mut self,
        id: impl Into<String>,
        ok: bool,
        expected: impl Into<String>,
        actual: impl Into<String>,
        anchor: impl Into<String>,
    ) -> bool {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push(id, status, expected, actual, anchor);
        ok
    }

    pub fn info(&mut self, id: impl Into<String>, actual: impl Into<String>, anchor: impl Into<String>) {
        self.push(id, Status::Info, "", actual, anchor);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    /// One line per check: `PASS id: actual (expected …)`.
    pub fn to_text(&self) -> String {
        let mut out = format!("== {} ==\n", self.suite);
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Info => "INFO",
            };
            out.push_str(&format!("{tag} {}: {}", c.id, c.actual));
            if !c.expected.is_empty() {
                out.push_str(&format!("  [expected {}]", c.expected));
            }
            if !c.anchor.is_empty() {
                out.push_str(&format!("  ({})", c.anchor));
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn rendering() {
        assert_eq!(render(&frac(21, 20)), "21/20 (1.050000)");
        assert_eq!(render(&int(-3)), "-3 (-3.000000)");
        let mut r = Report::new("demo");
        assert!(r.check("a", true, "1", "1", ""));
        r.info("b", "x", "");
        assert!(r.passed());
        r.check("c", false, "1", "2", "anchor");
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
        assert!(r.to_text().contains("FAIL c: 2  [expected 1]  (anchor)"));
    }
}
