use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub witness: Option<String>,
    pub elapsed_ms: u64,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Run `f` and time it. `Ok(note)` passes; `Err(witness)` fails.
    pub fn run(name: &str, f: impl FnOnce() -> Result<Option<String>, String>) -> CheckResult {
        let start = Instant::now();
        let outcome = f();
        let elapsed_ms = start.elapsed().as_millis() as u64;
        match outcome {
            Ok(note) => CheckResult { name: name.to_string(), status: Status::Pass, witness: note, elapsed_ms },
            Err(w) => {
                let witness = if w.is_empty() { "failed".to_string() } else { w };
                CheckResult { name: name.to_string(), status: Status::Fail, witness: Some(witness), elapsed_ms }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub algebra: String,
    pub suite: String,
    pub checks: Vec<CheckResult>,
    pub overall: Status,
}

impl Report {
    pub fn new(algebra: &str, suite: &str, checks: Vec<CheckResult>) -> Report {
        let overall = if checks.iter().all(CheckResult::passed) { Status::Pass } else { Status::Fail };
        Report { algebra: algebra.to_string(), suite: suite.to_string(), checks, overall }
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("algebra {}  suite {}\n", self.algebra, self.suite);
        for c in &self.checks {
            let status = if c.passed() { "pass" } else { "FAIL" };
            out.push_str(&format!("  {:<20} {:<5} {:>7} ms", c.name, status, c.elapsed_ms));
            if let Some(w) = &c.witness {
                out.push_str(&format!("  {w}"));
            }
            out.push('\n');
        }
        out.push_str(&format!("overall: {}\n", if self.passed() { "pass" } else { "FAIL" }));
        out
    }
}
