//! Stable report rendering. One `Report` per invocation, serialized either
//! as human-readable text or as schema-versioned JSON. Big integers go out
//! as decimal strings so downstream tooling never rounds them.

use serde::Serialize;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::abc::ConditionReport;
use crate::classifier::{Verdict, Witness};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    pub diagnostics: Vec<String>,
    pub timing_ms: u64,
    /// Extra lines for the text renderer only.
    #[serde(skip)]
    pub text: Vec<String>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            schema: SCHEMA_VERSION,
            command: command.into(),
            inputs: BTreeMap::new(),
            verdict: None,
            theorem: None,
            witness: None,
            result: None,
            diagnostics: Vec::new(),
            timing_ms: 0,
            text: Vec::new(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<String>) -> &mut Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn note(&mut self, line: impl Into<String>) -> &mut Self {
        self.diagnostics.push(line.into());
        self
    }

    pub fn line(&mut self, line: impl Into<String>) -> &mut Self {
        self.text.push(line.into());
        self
    }

    /// Absorb a classifier verdict: tag, citation, witness, and notes.
    pub fn set_verdict(&mut self, v: &Verdict) {
        self.verdict = Some(v.tag.to_string());
        self.theorem = v.theorem.clone();
        self.witness = v.witness.as_ref().map(witness_json);
        self.diagnostics.extend(v.notes.iter().cloned());
        match &v.theorem {
            Some(t) => self.text.push(format!("verdict: {} ({t})", v.tag)),
            None => self.text.push(format!("verdict: {}", v.tag)),
        }
        if let Some(w) = &v.witness {
            self.text.extend(witness_text(w));
        }
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        for (key, value) in &self.inputs {
            let _ = writeln!(out, "input {key}: {value}");
        }
        for line in &self.text {
            let _ = writeln!(out, "{line}");
        }
        if !self.diagnostics.is_empty() {
            let _ = writeln!(out, "diagnostics:");
            for d in &self.diagnostics {
                let _ = writeln!(out, "  - {d}");
            }
        }
        out
    }
}

pub fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Shift(c) => json!({
            "type": "shift",
            "c": c.to_string(),
        }),
        Witness::Roots(roots) => json!({
            "type": "integer_roots",
            "roots": roots
                .pairs()
                .iter()
                .map(|(r, m)| json!({"root": r.to_string(), "multiplicity": m}))
                .collect::<Vec<_>>(),
            "total_multiplicity": roots.total_multiplicity(),
        }),
        Witness::Conditions(reports) => json!({
            "type": "conditions",
            "reports": reports.iter().map(condition_report_json).collect::<Vec<_>>(),
        }),
    }
}

pub fn condition_report_json(r: &ConditionReport) -> Value {
    json!({
        "criterion": r.criterion,
        "holds": r.all_hold(),
        "conditions": r
            .conditions
            .iter()
            .map(|c| json!({"label": c.label, "holds": c.holds, "detail": c.detail}))
            .collect::<Vec<_>>(),
        "notes": r.notes,
    })
}

fn witness_text(w: &Witness) -> Vec<String> {
    match w {
        Witness::Shift(c) => vec![format!("witness: shift c = {c}")],
        Witness::Roots(roots) => {
            if roots.is_empty() {
                vec!["witness: f has no integer roots".to_string()]
            } else {
                let listed = roots
                    .pairs()
                    .iter()
                    .map(|(r, m)| format!("{r} (mult {m})"))
                    .collect::<Vec<_>>()
                    .join(", ");
                vec![format!("witness: integer roots of f: {listed}")]
            }
        }
        Witness::Conditions(reports) => {
            let mut lines = Vec::new();
            for r in reports {
                lines.extend(condition_report_text(r));
            }
            lines
        }
    }
}

pub fn condition_report_text(r: &ConditionReport) -> Vec<String> {
    let mut lines = vec![format!(
        "criterion {}: {}",
        r.criterion,
        if r.all_hold() { "PASS" } else { "FAIL" }
    )];
    for c in &r.conditions {
        lines.push(format!(
            "  [{}] {}: {}",
            if c.holds { "ok" } else { "--" },
            c.label,
            c.detail
        ));
    }
    for n in &r.notes {
        lines.push(format!("  note: {n}"));
    }
    lines
}
