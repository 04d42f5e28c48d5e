//! Named pass/fail checks with failure witnesses.
//!
//! A check id may be recorded many times (once per object tuple); the entry
//! keeps the conjunction of all outcomes, the number of cases and the first
//! failing witness.

use std::time::{Duration, Instant};

use serde_json::{json, Value};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub passed: bool,
    pub cases: usize,
    pub witness: Option<String>,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            checks: Vec::new(),
        }
    }

    fn entry(&mut self, id: &str) -> &mut Check {
        let pos = match self.checks.iter().position(|c| c.id == id) {
            Some(p) => p,
            None => {
                self.checks.push(Check {
                    id: id.to_string(),
                    passed: true,
                    cases: 0,
                    witness: None,
                    elapsed: Duration::ZERO,
                });
                self.checks.len() - 1
            }
        };
        &mut self.checks[pos]
    }

    /// Records one case of `id`; `witness` is evaluated only on the first failure.
    pub fn record(&mut self, id: &str, ok: bool, witness: impl FnOnce() -> String) {
        let e = self.entry(id);
        e.cases += 1;
        if !ok && e.passed {
            e.passed = false;
            e.witness = Some(witness());
        }
    }

    /// Runs `f` as one case of `id`, adding its wall time to the entry.
    pub fn timed(&mut self, id: &str, label: impl FnOnce() -> String, f: impl FnOnce() -> bool) {
        let start = Instant::now();
        let ok = f();
        let dt = start.elapsed();
        self.record(id, ok, label);
        self.entry(id).elapsed += dt;
    }

    /// Registers `id` with zero cases so it shows up even if nothing was sampled.
    pub fn declare(&mut self, id: &str) {
        self.entry(id);
    }

    pub fn merge(&mut self, other: Report) {
        for c in other.checks {
            let e = self.entry(&c.id);
            e.cases += c.cases;
            e.elapsed += c.elapsed;
            if !c.passed && e.passed {
                e.passed = false;
                e.witness = c.witness;
            }
        }
    }

    /// Merges `other` with every id prefixed by `prefix/`.
    pub fn merge_prefixed(&mut self, prefix: &str, mut other: Report) {
        for c in other.checks.iter_mut() {
            c.id = format!("{prefix}/{}", c.id);
        }
        self.merge(other);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn passed(&self, id: &str) -> bool {
        self.get(id).map(|c| c.passed).unwrap_or(false)
    }

    /// Ids of failed checks in recording order.
    pub fn failed_ids(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.id.as_str())
            .collect()
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    /// JSON form: checks sorted by id, timing omitted so output is reproducible.
    pub fn to_json(&self) -> Value {
        let mut checks: Vec<&Check> = self.checks.iter().collect();
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let checks: Vec<Value> = checks
            .into_iter()
            .map(|c| {
                json!({
                    "id": c.id,
                    "passed": c.passed,
                    "cases": c.cases,
                    "witness": c.witness,
                })
            })
            .collect();
        json!({
            "kind": "report",
            "title": self.title,
            "passed": self.all_passed(),
            "checks": checks,
        })
    }

    /// Human-readable form with per-check timing, in recording order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if !self.title.is_empty() {
            out.push_str(&format!("# {}\n", self.title));
        }
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "{status} {} ({} cases, {:.1} ms)",
                c.id,
                c.cases,
                c.elapsed.as_secs_f64() * 1e3
            ));
            if let Some(w) = &c.witness {
                out.push_str(&format!("  witness: {w}"));
            }
            out.push('\n');
        }
        let failed = self.failed_ids().len();
        out.push_str(&format!(
            "{} checks, {} failed\n",
            self.checks.len(),
            failed
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keeps_first_witness() {
        let mut r = Report::new("t");
        r.record("a", true, || "x".into());
        r.record("a", false, || "first".into());
        r.record("a", false, || "second".into());
        let c = r.get("a").unwrap();
        assert!(!c.passed);
        assert_eq!(c.cases, 3);
        assert_eq!(c.witness.as_deref(), Some("first"));
    }

    #[test]
    fn empty_report_json() {
        let r = Report::new("");
        let v = r.to_json();
        assert_eq!(v["checks"].as_array().unwrap().len(), 0);
        assert_eq!(v["passed"], true);
    }
}
