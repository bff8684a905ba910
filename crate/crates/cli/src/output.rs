use std::fmt::Write as _;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// What a subcommand produced.
pub struct Outcome {
    pub result: Value,
    /// False when a theorem row failed or a witness did not validate.
    pub ok: bool,
    /// Rows for CSV output; other results are written as `field,value` pairs.
    pub table: Option<Vec<Value>>,
    /// An instance file, printed verbatim in text mode.
    pub instance: Option<String>,
}

impl Outcome {
    pub fn new(result: Value, ok: bool) -> Self {
        Outcome {
            result,
            ok,
            table: None,
            instance: None,
        }
    }

    pub fn with_table(mut self, table: Vec<Value>) -> Self {
        self.table = Some(table);
        self
    }

    pub fn with_instance(mut self, text: String) -> Self {
        self.instance = Some(text);
        self
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

/// Dotted paths to leaf values; arrays of scalars are joined by spaces.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let join = |key: &str| {
        if prefix.is_empty() {
            key.to_string()
        } else {
            format!("{prefix}.{key}")
        }
    };
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&join(k), v, out);
            }
        }
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            out.push((prefix.to_string(), items.iter().map(scalar).collect::<Vec<_>>().join(" ")));
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&join(&i.to_string()), x, out);
            }
        }
        other => out.push((prefix.to_string(), scalar(other))),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_table(rows: &[Value]) -> String {
    let flat: Vec<Vec<(String, String)>> = rows
        .iter()
        .map(|r| {
            let mut f = Vec::new();
            flatten("", r, &mut f);
            f
        })
        .collect();
    let mut headers: Vec<String> = Vec::new();
    for row in &flat {
        for (k, _) in row {
            if !headers.contains(k) {
                headers.push(k.clone());
            }
        }
    }
    let mut out = headers.iter().map(|h| csv_field(h)).collect::<Vec<_>>().join(",");
    out.push('\n');
    for row in &flat {
        let cells: Vec<String> = headers
            .iter()
            .map(|h| row.iter().find(|(k, _)| k == h).map(|(_, v)| csv_field(v)).unwrap_or_default())
            .collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// Renders the report: the command, its effective configuration, an optional
/// timestamp, the status and the result.
pub fn render(command: &str, config: &Value, timestamp: bool, format: Format, outcome: &Outcome) -> String {
    let status = if outcome.ok { "ok" } else { "failed" };
    let mut envelope = Map::new();
    envelope.insert("command".into(), json!(command));
    envelope.insert("config".into(), config.clone());
    if timestamp {
        let secs = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        envelope.insert("timestamp".into(), json!(secs));
    }
    envelope.insert("status".into(), json!(status));
    match format {
        Format::Json => {
            envelope.insert("result".into(), outcome.result.clone());
            let mut s = serde_json::to_string_pretty(&Value::Object(envelope)).expect("serializable");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut head = Vec::new();
            flatten("", &Value::Object(envelope), &mut head);
            let mut out = String::new();
            for (k, v) in head {
                let _ = writeln!(out, "# {k}={v}");
            }
            match &outcome.table {
                Some(rows) => out.push_str(&csv_table(rows)),
                None => {
                    let mut flat = Vec::new();
                    flatten("", &outcome.result, &mut flat);
                    out.push_str("field,value\n");
                    for (k, v) in flat {
                        let _ = writeln!(out, "{},{}", csv_field(&k), csv_field(&v));
                    }
                }
            }
            out
        }
        Format::Text => {
            let mut head = Vec::new();
            flatten("", &Value::Object(envelope), &mut head);
            let mut out = String::new();
            if let Some(text) = &outcome.instance {
                for (k, v) in head {
                    let _ = writeln!(out, "# {k}: {v}");
                }
                out.push_str(text);
                return out;
            }
            for (k, v) in head {
                let _ = writeln!(out, "{k}: {v}");
            }
            let mut flat = Vec::new();
            flatten("result", &outcome.result, &mut flat);
            for (k, v) in flat {
                let _ = writeln!(out, "{k}: {v}");
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flattening() {
        let mut f = Vec::new();
        flatten("", &json!({"a": {"b": 1, "c": [1, 2]}, "d": [{"e": "x"}]}), &mut f);
        let keys: Vec<_> = f.iter().map(|(k, v)| format!("{k}={v}")).collect();
        assert_eq!(keys, ["a.b=1", "a.c=1 2", "d.0.e=x"]);
    }

    #[test]
    fn csv_quotes_and_aligns() {
        let t = csv_table(&[json!({"a": 1, "b": "x,y"}), json!({"a": 2, "c": true})]);
        assert_eq!(t, "a,b,c\n1,\"x,y\",\n2,,true\n");
    }

    #[test]
    fn timestamp_is_optional() {
        let o = Outcome::new(json!({"value": 4}), true);
        let a = render("solve", &json!({}), false, Format::Json, &o);
        assert!(!a.contains("timestamp"));
        assert_eq!(a, render("solve", &json!({}), false, Format::Json, &o));
        assert!(render("solve", &json!({}), true, Format::Json, &o).contains("timestamp"));
    }
}
