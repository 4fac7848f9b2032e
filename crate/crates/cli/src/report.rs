//! The machine-readable report every command emits.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Outcome of one check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One named comparison of an expected against an actual value.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub expected: Value,
    pub actual: Value,
}

impl Check {
    /// Passes iff both sides serialise to the same JSON value.
    pub fn compare(name: impl Into<String>, expected: impl Serialize, actual: impl Serialize) -> Self {
        let expected = to_value(expected);
        let actual = to_value(actual);
        let status = if expected == actual { Status::Pass } else { Status::Fail };
        Check {
            name: name.into(),
            status,
            expected,
            actual,
        }
    }

    /// A boolean verdict that is expected to hold.
    pub fn holds(name: impl Into<String>, verdict: bool) -> Self {
        Check::compare(name, true, verdict)
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("report values are plain data")
}

/// The report of one command run.
///
/// Checks are kept sorted by name, and parameters live in a sorted map, so
/// identical inputs produce identical reports apart from `elapsed_ms`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    /// Command-specific payload (tables, normal forms).
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub output: Value,
    pub elapsed_ms: u64,
    /// Diagnostics for stderr; not part of the JSON contract.
    #[serde(skip)]
    pub warnings: Vec<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            checks: Vec::new(),
            output: Value::Null,
            elapsed_ms: 0,
            warnings: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.parameters.insert(key.to_string(), to_value(value));
        self
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn set_output(&mut self, output: impl Serialize) {
        self.output = to_value(output);
    }

    pub fn warn(&mut self, message: impl Into<String>) {
        self.warnings.push(message.into());
    }

    /// Sorts the checks by name and records the elapsed time.
    pub fn finish(mut self, started: Instant) -> Self {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
        self.elapsed_ms = started.elapsed().as_millis() as u64;
        self
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialise")
    }

    /// A human-readable rendering: parameters, checks and any table payload.
    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {}\n", self.command);
        for (k, v) in &self.parameters {
            let _ = writeln!(out, "- `{k}` = {v}");
        }
        if let Some(rows) = self.output.get("table").and_then(Value::as_array) {
            out.push('\n');
            out.push_str(&markdown_table(rows));
        }
        let _ = writeln!(out, "\n| check | status |\n|---|---|");
        for c in &self.checks {
            let status = if c.passed() { "pass" } else { "fail" };
            let _ = writeln!(out, "| {} | {status} |", c.name);
        }
        let _ = writeln!(out, "\nelapsed: {} ms", self.elapsed_ms);
        out
    }
}

/// Renders `{a, b, dim}` rows as a grid with rows `a` and columns `b`.
fn markdown_table(rows: &[Value]) -> String {
    let mut cells = BTreeMap::new();
    for r in rows {
        let (Some(a), Some(b), Some(d)) = (r["a"].as_i64(), r["b"].as_i64(), r["dim"].as_u64()) else {
            continue;
        };
        cells.insert((a, b), d);
    }
    if cells.is_empty() {
        return "(empty table)\n".to_string();
    }
    let a_vals: Vec<i64> = cells.keys().map(|k| k.0).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
    let b_vals: Vec<i64> = cells.keys().map(|k| k.1).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
    let mut out = String::from("| a \\ b |");
    for b in &b_vals {
        let _ = write!(out, " {b} |");
    }
    out.push_str("\n|---|");
    out.push_str(&"---|".repeat(b_vals.len()));
    out.push('\n');
    for a in &a_vals {
        let _ = write!(out, "| {a} |");
        for b in &b_vals {
            match cells.get(&(*a, *b)) {
                Some(d) => {
                    let _ = write!(out, " {d} |");
                }
                None => out.push_str(" · |"),
            }
        }
        out.push('\n');
    }
    out
}
