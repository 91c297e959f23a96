use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

/// One verified statement with exact expected and actual renderings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub params: BTreeMap<String, Value>,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
    pub elapsed_ms: u64,
}

impl CheckRecord {
    /// `pass` is set from exact string equality of `expected` and `actual`.
    pub fn new(
        id: impl Into<String>,
        params: &[(&str, Value)],
        expected: impl ToString,
        actual: impl ToString,
        elapsed: Duration,
    ) -> Self {
        let expected = expected.to_string();
        let actual = actual.to_string();
        CheckRecord {
            id: id.into(),
            params: params
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            pass: expected == actual,
            expected,
            actual,
            elapsed_ms: elapsed.as_millis() as u64,
        }
    }

    /// `k=v` pairs joined by `;`.
    pub fn params_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}={s}"),
                other => format!("{k}={other}"),
            })
            .collect::<Vec<_>>()
            .join(";")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

/// Compares strings with embedded numbers by numeric value, so that
/// `L=9` sorts before `L=11`.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    fn chunks(s: &str) -> Vec<(bool, &str)> {
        let mut out = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..=bytes.len() {
            if i == bytes.len() || bytes[i].is_ascii_digit() != bytes[start].is_ascii_digit() {
                out.push((bytes[start].is_ascii_digit(), &s[start..i]));
                start = i;
            }
        }
        out
    }
    let (ca, cb) = (chunks(a), chunks(b));
    for (x, y) in ca.iter().zip(&cb) {
        let ord = match (x, y) {
            ((true, x), (true, y)) => {
                let (tx, ty) = (x.trim_start_matches('0'), y.trim_start_matches('0'));
                tx.len()
                    .cmp(&ty.len())
                    .then_with(|| tx.cmp(ty))
                    .then_with(|| x.len().cmp(&y.len()))
            }
            ((_, x), (_, y)) => x.cmp(y),
        };
        if ord != Ordering::Equal {
            return ord;
        }
    }
    ca.len().cmp(&cb.len())
}

impl Report {
    /// Sorts checks by id, then params, and fills in the summary.
    pub fn new(suite: impl Into<String>, mut checks: Vec<CheckRecord>) -> Self {
        checks.sort_by(|a, b| {
            natural_cmp(&a.id, &b.id)
                .then_with(|| natural_cmp(&a.params_string(), &b.params_string()))
        });
        let passed = checks.iter().filter(|c| c.pass).count();
        Report {
            suite: suite.into(),
            summary: Summary {
                total: checks.len(),
                passed,
                failed: checks.len() - passed,
            },
            checks,
        }
    }

    pub fn merge(suite: impl Into<String>, reports: Vec<Report>) -> Self {
        Report::new(suite, reports.into_iter().flat_map(|r| r.checks).collect())
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let out = |e: csv::Error| Error::Output(e.to_string());
        w.write_record(["id", "params", "expected", "actual", "pass"])
            .map_err(out)?;
        for c in &self.checks {
            let pass = if c.pass { "true" } else { "false" };
            w.write_record([
                c.id.as_str(),
                &c.params_string(),
                &c.expected,
                &c.actual,
                pass,
            ])
            .map_err(out)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Output(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Output(e.to_string()))
    }

    pub fn write_json(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json())
            .map_err(|e| Error::Output(format!("{}: {e}", path.display())))
    }

    pub fn write_csv(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_csv()?)
            .map_err(|e| Error::Output(format!("{}: {e}", path.display())))
    }

    /// Plain-text table, one line per check, followed by the summary.
    pub fn to_text(&self) -> String {
        let width = |f: &dyn Fn(&CheckRecord) -> usize, min: usize| {
            self.checks.iter().map(f).max().unwrap_or(0).max(min)
        };
        let wi = width(&|c| c.id.len(), 2);
        let we = width(&|c| c.expected.chars().count(), 8);
        let wa = width(&|c| c.actual.chars().count(), 6);
        let mut s = String::new();
        let _ = writeln!(s, "suite: {}", self.suite);
        let _ = writeln!(
            s,
            "{:<4}  {:<wi$}  {:<we$}  {:<wa$}  ms",
            "", "id", "expected", "actual"
        );
        for c in &self.checks {
            let _ = writeln!(
                s,
                "{:<4}  {:<wi$}  {:<we$}  {:<wa$}  {}",
                if c.pass { "ok" } else { "FAIL" },
                c.id,
                c.expected,
                c.actual,
                c.elapsed_ms
            );
        }
        let _ = writeln!(
            s,
            "{} checks, {} passed, {} failed",
            self.summary.total, self.summary.passed, self.summary.failed
        );
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn rec(id: &str, e: &str, a: &str) -> CheckRecord {
        CheckRecord::new(id, &[("L", json!(1))], e, a, Duration::from_millis(3))
    }

    #[test]
    fn natural_order() {
        let mut ids = vec!["odd.x.L=11", "odd.x.L=9", "even.n=2", "odd.x.L=101"];
        ids.sort_by(|a, b| natural_cmp(a, b));
        assert_eq!(
            ids,
            vec!["even.n=2", "odd.x.L=9", "odd.x.L=11", "odd.x.L=101"]
        );
    }

    #[test]
    fn summary_and_sorting() {
        let r = Report::new("t", vec![rec("b", "1", "1"), rec("a", "1", "2")]);
        assert_eq!(r.checks[0].id, "a");
        assert_eq!(
            r.summary,
            Summary {
                total: 2,
                passed: 1,
                failed: 1
            }
        );
        assert!(!r.all_passed());
        let empty = Report::new("t", vec![]);
        assert_eq!(empty.summary.total, 0);
        assert!(empty.all_passed());
    }

    #[test]
    fn renderings() {
        let r = Report::new("t", vec![rec("a", "1/2", "1/2")]);
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["checks"][0]["elapsed_ms"], 3);
        assert_eq!(v["summary"]["passed"], 1);
        let csv = r.to_csv().unwrap();
        assert_eq!(csv, "id,params,expected,actual,pass\na,L=1,1/2,1/2,true\n");
        assert!(r.to_text().contains("1 checks, 1 passed, 0 failed"));
    }
}
