use std::fmt::Write;

use nilsplit::Check;
use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: &str, inputs: Value, result: Value, checks: Vec<Check>) -> Self {
        Report { command: command.to_string(), inputs, result, checks }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report values serialize")
    }

    /// Plain-text rendering: one `key: value` line per result field, then
    /// the checks.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", self.command).unwrap();
        match &self.result {
            Value::Object(map) => render_fields(&mut out, map, 1),
            other => writeln!(out, "  {}", compact(other)).unwrap(),
        }
        if !self.checks.is_empty() {
            writeln!(out, "checks:").unwrap();
            for c in &self.checks {
                writeln!(out, "  [{}] {}", if c.passed { "ok" } else { "FAILED" }, c.name).unwrap();
            }
        }
        out
    }
}

fn render_fields(out: &mut String, map: &Map<String, Value>, depth: usize) {
    let pad = "  ".repeat(depth);
    for (k, v) in map {
        match v {
            Value::Object(inner) if !inner.is_empty() && depth < 2 => {
                writeln!(out, "{pad}{k}:").unwrap();
                render_fields(out, inner, depth + 1);
            }
            _ => writeln!(out, "{pad}{k}: {}", compact(v)).unwrap(),
        }
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
