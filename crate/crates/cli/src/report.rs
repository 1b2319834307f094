use std::time::Duration;

use serde_json::{json, Map, Value};

/// What one command computed. Printed as `key=value` lines, or as a single
/// JSON object with `--json`.
pub struct Report {
    pub command: &'static str,
    pub input: String,
    pub fields: Vec<(&'static str, String)>,
    /// Multi-line payload such as a game record or a suite report.
    pub body: Option<String>,
    pub passed: Option<bool>,
}

impl Report {
    pub fn new(command: &'static str, input: impl Into<String>) -> Self {
        Report {
            command,
            input: input.into(),
            fields: Vec::new(),
            body: None,
            passed: None,
        }
    }

    pub fn field(mut self, key: &'static str, value: impl ToString) -> Self {
        self.fields.push((key, value.to_string()));
        self
    }

    pub fn body(mut self, body: String) -> Self {
        self.body = Some(body);
        self
    }

    pub fn passed(mut self, passed: bool) -> Self {
        self.passed = Some(passed);
        self
    }

    pub fn to_text(&self) -> String {
        // Generated graphs stay readable as edge lists.
        let prefix = if self.command == "generate" { "# " } else { "" };
        let mut out = format!("{prefix}command={} input={}\n", self.command, self.input);
        if !self.fields.is_empty() {
            let line: Vec<String> = self.fields.iter().map(|(k, v)| format!("{k}={v}")).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        if let Some(body) = &self.body {
            out.push_str(body);
        }
        out
    }

    pub fn to_json(&self, elapsed: Duration) -> Value {
        let values: Map<String, Value> = self
            .fields
            .iter()
            .map(|(k, v)| (k.to_string(), Value::String(v.clone())))
            .collect();
        let mut record = json!({
            "command": self.command,
            "input": self.input,
            "values": values,
            "elapsed_ms": elapsed.as_millis() as u64,
        });
        if let Some(body) = &self.body {
            record["body"] = Value::String(body.clone());
        }
        if let Some(passed) = self.passed {
            record["passed"] = Value::Bool(passed);
        }
        record
    }
}
