//! Deterministic reports: ordered sections of named checks, rendered as text or JSON.

use std::fmt::Write as _;

use serde::Serialize;

use coringlab::exactla::Mat;

pub const TOOL: &str = concat!("coring-lab ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Value {
    /// A condition whose preconditions are not met.
    Unknown,
    Bool(bool),
    Count(usize),
    Text(String),
    List(Vec<String>),
    Matrix(Vec<Vec<String>>),
}

impl Value {
    pub fn matrix(m: &Mat) -> Value {
        Value::Matrix((0..m.rows()).map(|i| m.row(i).iter().map(|s| s.to_string()).collect()).collect())
    }

    pub fn option(b: Option<bool>) -> Value {
        b.map_or(Value::Unknown, Value::Bool)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub value: Value,
    /// Present when the check is an assertion; `false` marks a failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holds: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Section {
    pub title: String,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub probe_verified: bool,
    pub checks: Vec<Check>,
}

impl Section {
    pub fn new(title: impl Into<String>) -> Self {
        Section { title: title.into(), probe_verified: false, checks: Vec::new() }
    }

    pub fn info(&mut self, name: impl Into<String>, value: Value) -> &mut Self {
        self.checks.push(Check { name: name.into(), description: None, value, holds: None });
        self
    }

    pub fn described(&mut self, name: impl Into<String>, description: impl Into<String>, value: Value) -> &mut Self {
        self.checks.push(Check { name: name.into(), description: Some(description.into()), value, holds: None });
        self
    }

    pub fn assert(&mut self, name: impl Into<String>, value: Value, holds: bool) -> &mut Self {
        self.checks.push(Check { name: name.into(), description: None, value, holds: Some(holds) });
        self
    }

    pub fn assert_true(&mut self, name: impl Into<String>, ok: bool) -> &mut Self {
        self.assert(name, Value::Bool(ok), ok)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub tool: String,
    pub instance: String,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub sections: Vec<Section>,
    pub assertions_hold: bool,
}

impl Report {
    pub fn new(instance: &str, command: &str, seed: Option<u64>, sections: Vec<Section>) -> Self {
        let assertions_hold = sections.iter().flat_map(|s| &s.checks).all(|c| c.holds != Some(false));
        Report {
            tool: TOOL.to_string(),
            instance: instance.to_string(),
            command: command.to_string(),
            seed,
            sections,
            assertions_hold,
        }
    }

    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for s in &self.sections {
            for c in &s.checks {
                if c.holds == Some(false) {
                    out.push(format!("{}: {}", s.title, c.name));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.tool);
        let _ = writeln!(out, "instance: {}", self.instance);
        let _ = writeln!(out, "command: {}", self.command);
        if let Some(seed) = self.seed {
            let _ = writeln!(out, "seed: {seed}");
        }
        for s in &self.sections {
            let flag = if s.probe_verified { " (probe-verified)" } else { "" };
            let _ = writeln!(out, "\n[{}]{flag}", s.title);
            for c in &s.checks {
                let mark = match c.holds {
                    Some(true) => "ok  ",
                    Some(false) => "FAIL",
                    None => "    ",
                };
                let desc = c.description.as_ref().map(|d| format!(" ({d})")).unwrap_or_default();
                match &c.value {
                    Value::Matrix(rows) => {
                        let _ = writeln!(out, "  {mark} {}{desc}: {}x{}", c.name, rows.len(), rows.first().map_or(0, Vec::len));
                        for r in rows {
                            let _ = writeln!(out, "         [{}]", r.join(" "));
                        }
                    }
                    Value::List(items) if items.is_empty() => {
                        let _ = writeln!(out, "  {mark} {}{desc}: none", c.name);
                    }
                    Value::List(items) => {
                        let _ = writeln!(out, "  {mark} {}{desc}:", c.name);
                        for i in items {
                            let _ = writeln!(out, "         - {i}");
                        }
                    }
                    v => {
                        let _ = writeln!(out, "  {mark} {}{desc}: {}", c.name, scalar_text(v));
                    }
                }
            }
        }
        let verdict = if self.assertions_hold { "all assertions hold" } else { "assertion failed" };
        let _ = writeln!(out, "\nresult: {verdict}");
        out
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::Unknown => "n/a".into(),
        Value::Bool(b) => b.to_string(),
        Value::Count(n) => n.to_string(),
        Value::Text(s) => s.clone(),
        Value::List(_) | Value::Matrix(_) => unreachable!("rendered as blocks"),
    }
}
