use crate::error::CliError;
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};
use std::path::Path;

#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub source: String,
    pub sha256: String,
}

/// Everything a run produced; all fields except `elapsed_ms` are a function
/// of the inputs and the configuration.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub version: &'static str,
    pub config: Value,
    pub inputs: Vec<InputDigest>,
    pub result: Value,
    pub elapsed_ms: f64,
}

/// Input bytes read so far, in order, with their digests.
#[derive(Debug, Default)]
pub struct Inputs {
    pub digests: Vec<InputDigest>,
}

impl Inputs {
    pub fn read(&mut self, path: &Path) -> Result<String, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Parse(format!("ParseError: cannot read {}: {e}", path.display())))?;
        self.record(path.display().to_string(), text.as_bytes());
        Ok(text)
    }

    pub fn json<T: serde::de::DeserializeOwned>(&mut self, path: &Path) -> Result<T, CliError> {
        let text = self.read(path)?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::Parse(format!("ParseError: {}: {e}", path.display())))
    }

    /// A JSON value given on the command line rather than in a file.
    pub fn inline<T: serde::de::DeserializeOwned>(&mut self, name: &str, text: &str) -> Result<T, CliError> {
        self.record(format!("--{name}"), text.as_bytes());
        serde_json::from_str(text).map_err(|e| CliError::Parse(format!("ParseError: --{name}: {e}")))
    }

    fn record(&mut self, source: String, bytes: &[u8]) {
        self.digests.push(InputDigest { source, sha256: hex::encode(Sha256::digest(bytes)) });
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        v => v.to_string(),
    }
}

fn is_grid(rows: &[Value]) -> bool {
    !rows.is_empty() && rows.iter().all(|r| r.as_array().is_some_and(|r| r.iter().all(|c| !c.is_object() && !c.is_array())))
}

fn columns(header: Option<Vec<String>>, rows: Vec<Vec<String>>, out: &mut String) {
    let k = rows.iter().map(Vec::len).chain(header.iter().map(Vec::len)).max().unwrap_or(0);
    let mut width = vec![0; k];
    for r in header.iter().chain(&rows) {
        for (i, c) in r.iter().enumerate() {
            width[i] = width[i].max(c.chars().count());
        }
    }
    let line = |r: &[String], out: &mut String| {
        let cells: Vec<String> = r.iter().enumerate().map(|(i, c)| format!("{c:>w$}", w = width[i])).collect();
        out.push_str("  ");
        out.push_str(&cells.join("  "));
        out.push('\n');
    };
    if let Some(h) = &header {
        line(h, out);
        let rule: Vec<String> = width.iter().map(|&w| "-".repeat(w)).collect();
        line(&rule, out);
    }
    for r in &rows {
        line(r, out);
    }
}

fn render(key: &str, v: &Value, labels: Option<&[Value]>, out: &mut String) {
    match v {
        Value::Array(rows) if rows.iter().all(Value::is_object) && !rows.is_empty() => {
            out.push_str(&format!("{key}:\n"));
            let header: Vec<String> = rows[0].as_object().unwrap().keys().cloned().collect();
            let body = rows
                .iter()
                .map(|r| header.iter().map(|h| cell(r.get(h).unwrap_or(&Value::Null))).collect())
                .collect();
            columns(Some(header), body, out);
        }
        Value::Array(rows) if is_grid(rows) => {
            out.push_str(&format!("{key}:\n"));
            let mut body: Vec<Vec<String>> =
                rows.iter().map(|r| r.as_array().unwrap().iter().map(cell).collect()).collect();
            let header = labels.filter(|l| l.len() == body[0].len()).map(|l| {
                for (r, name) in body.iter_mut().zip(l) {
                    r.insert(0, cell(name));
                }
                std::iter::once(String::new()).chain(l.iter().map(cell)).collect()
            });
            columns(header, body, out);
        }
        Value::Object(m) => {
            out.push_str(&format!("{key}:\n"));
            for (k, v) in m {
                out.push_str(&format!("  {k}: {}\n", cell(v)));
            }
        }
        v => out.push_str(&format!("{key}: {}\n", cell(v))),
    }
}

/// Human-readable rendering: scalars as `key: value`, lists of records and
/// integer matrices as aligned columns.
pub fn table(report: &RunReport) -> String {
    let mut out = format!("{} ({:.2} ms)\n", report.command, report.elapsed_ms);
    match &report.result {
        Value::Object(m) => {
            let labels = m.get("labels").and_then(Value::as_array).map(Vec::as_slice);
            for (k, v) in m {
                if k != "labels" || labels.is_none() {
                    render(k, v, labels, &mut out);
                }
            }
            if let Some(l) = labels {
                out.push_str(&format!("labels: {}\n", l.iter().map(cell).collect::<Vec<_>>().join(" ")));
            }
        }
        v => render("result", v, None, &mut out),
    }
    out
}
