//! Check records and run reports for the property-suite runner.

use serde::Serialize;

/// One named check with its measured value and tolerance.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// The measured quantity (an error, gap, or ratio, depending on the
    /// check).
    pub value: f64,
    pub tolerance: f64,
}

impl Check {
    /// A check that passes when `value ≤ tolerance`.
    pub fn bounded(name: impl Into<String>, value: f64, tolerance: f64) -> Self {
        Check { name: name.into(), pass: value <= tolerance, value, tolerance }
    }

    /// A boolean check; the value records 1.0 for pass, 0.0 for fail.
    pub fn flag(name: impl Into<String>, pass: bool) -> Self {
        Check { name: name.into(), pass, value: if pass { 1.0 } else { 0.0 }, tolerance: 0.5 }
    }
}

/// Deterministic report: checks sorted by name, exit code 0 iff all pass.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub suite: String,
    pub seed: u64,
    pub eps: f64,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<Check>,
}

impl RunReport {
    pub fn new(suite: &str, seed: u64, eps: f64, mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let passed = checks.iter().filter(|c| c.pass).count();
        let failed = checks.len() - passed;
        RunReport { suite: suite.to_string(), seed, eps, passed, failed, checks }
    }

    pub fn exit_code(&self) -> i32 {
        if self.failed == 0 {
            0
        } else {
            1
        }
    }

    pub fn summarize(&self) -> String {
        format!(
            "suite {}: {} passed, {} failed (seed {})",
            self.suite, self.passed, self.failed, self.seed
        )
    }
}
