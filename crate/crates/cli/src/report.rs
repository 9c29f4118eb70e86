//! Deterministic scenario reports.
//!
//! A report is a flat scenario/inputs/outputs/notes record. JSON output
//! serializes numbers at 10 significant digits with sorted keys, so a given
//! command line always produces identical bytes and render -> parse ->
//! render is a fixed point. Text output is line-oriented `key: value` with
//! numbers at 4 significant digits.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A single report value. Counts stay integers; non-finite numbers are
/// replaced by an explicit text sentinel.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ReportValue {
    Count(u64),
    Number(f64),
    Bool(bool),
    Text(String),
}

impl ReportValue {
    /// Wraps a float, rounding to 10 significant digits; infinities and NaN
    /// become text sentinels.
    pub fn number(x: f64) -> Self {
        if x.is_finite() {
            ReportValue::Number(round_sig(x, 10))
        } else if x == f64::INFINITY {
            ReportValue::Text("infinity".into())
        } else if x == f64::NEG_INFINITY {
            ReportValue::Text("-infinity".into())
        } else {
            ReportValue::Text("nan".into())
        }
    }

    fn render_text(&self) -> String {
        match self {
            ReportValue::Count(c) => c.to_string(),
            ReportValue::Number(x) => round_sig(*x, 4).to_string(),
            ReportValue::Bool(b) => b.to_string(),
            ReportValue::Text(s) => s.clone(),
        }
    }
}

/// Rounds to `digits` significant digits.
fn round_sig(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", digits - 1, x)
        .parse()
        .expect("scientific notation round trip")
}

/// Outcome of one scenario run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub scenario: String,
    pub inputs: BTreeMap<String, ReportValue>,
    pub outputs: BTreeMap<String, ReportValue>,
    pub notes: Vec<String>,
}

impl RunReport {
    pub fn new(scenario: impl Into<String>) -> Self {
        Self {
            scenario: scenario.into(),
            inputs: BTreeMap::new(),
            outputs: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    pub fn input(mut self, key: &str, value: ReportValue) -> Self {
        self.inputs.insert(key.to_string(), value);
        self
    }

    pub fn output(mut self, key: &str, value: ReportValue) -> Self {
        self.outputs.insert(key.to_string(), value);
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization")
    }

    #[cfg(test)]
    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let mut lines = vec![format!("scenario: {}", self.scenario)];
        for (key, value) in &self.inputs {
            lines.push(format!("{key}: {}", value.render_text()));
        }
        for (key, value) in &self.outputs {
            lines.push(format!("{key}: {}", value.render_text()));
        }
        for note in &self.notes {
            lines.push(format!("note: {note}"));
        }
        lines.join("\n") + "\n"
    }
}
