use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Text,
}

/// One command's result in every format it supports.
pub struct Output {
    pub json: Value,
    pub tsv: Option<Tsv>,
    pub text: String,
}

pub struct Tsv {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Output {
    pub fn new(kind: &str, body: impl Serialize, text: impl Into<String>) -> Self {
        let body = serde_json::to_value(body).expect("serializable output");
        let json = match body {
            Value::Object(mut map) => {
                let mut out = serde_json::Map::new();
                out.insert("schema".into(), json!(1));
                out.insert("kind".into(), json!(kind));
                out.append(&mut map);
                Value::Object(out)
            }
            other => json!({ "schema": 1, "kind": kind, "result": other }),
        };
        Output { json, tsv: None, text: text.into() }
    }

    pub fn with_tsv(mut self, header: Vec<String>, rows: Vec<Vec<String>>) -> Self {
        self.tsv = Some(Tsv { header, rows });
        self
    }

    /// Render, or `None` when the format is not available.
    pub fn render(&self, format: Format) -> Option<String> {
        match format {
            Format::Json => Some(serde_json::to_string_pretty(&self.json).expect("json") + "\n"),
            Format::Text => {
                let mut s = self.text.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                Some(s)
            }
            Format::Tsv => self.tsv.as_ref().map(|t| {
                let mut s = t.header.join("\t");
                s.push('\n');
                for row in &t.rows {
                    s.push_str(&row.join("\t"));
                    s.push('\n');
                }
                s
            }),
        }
    }
}
