use std::fmt::Write as _;

use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Rows of mixed scalars under a header.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Self { columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Envelope {
    Ok { value_exact: Option<String>, value_float: Option<f64>, table: Option<Table>, meta: String },
    Error { message: String },
}

impl Envelope {
    pub fn exact(value_exact: String, value_float: f64, meta: &str) -> Self {
        Self::Ok { value_exact: Some(value_exact), value_float: Some(value_float), table: None, meta: meta.into() }
    }

    pub fn exact_only(value_exact: String, meta: &str) -> Self {
        Self::Ok { value_exact: Some(value_exact), value_float: None, table: None, meta: meta.into() }
    }

    pub fn float(value_float: f64, meta: &str) -> Self {
        Self::Ok { value_exact: None, value_float: Some(value_float), table: None, meta: meta.into() }
    }

    pub fn table(table: Table, meta: &str) -> Self {
        Self::Ok { value_exact: None, value_float: None, table: Some(table), meta: meta.into() }
    }

    pub fn with_float(mut self, v: f64) -> Self {
        if let Self::Ok { value_float, .. } = &mut self {
            *value_float = Some(v);
        }
        self
    }

    pub fn with_exact(mut self, v: String) -> Self {
        if let Self::Ok { value_exact, .. } = &mut self {
            *value_exact = Some(v);
        }
        self
    }

    pub fn with_table(mut self, t: Table) -> Self {
        if let Self::Ok { table, .. } = &mut self {
            *table = Some(t);
        }
        self
    }

    pub fn is_ok(&self) -> bool {
        matches!(self, Self::Ok { .. })
    }

    /// serde_json maps are ordered by key, so output is key-sorted.
    pub fn to_json(&self) -> Value {
        match self {
            Self::Error { message } => json!({ "status": "error", "message": message }),
            Self::Ok { value_exact, value_float, table, meta } => {
                let mut m = Map::new();
                m.insert("status".into(), json!("ok"));
                m.insert("meta".into(), json!(meta));
                if let Some(v) = value_exact {
                    m.insert("value_exact".into(), json!(v));
                }
                if let Some(v) = value_float {
                    m.insert("value_float".into(), json!(v));
                }
                if let Some(t) = table {
                    m.insert("table".into(), json!({ "columns": t.columns, "rows": t.rows }));
                }
                Value::Object(m)
            }
        }
    }

    pub fn render(&self, fmt: Format) -> String {
        match fmt {
            Format::Json => {
                let mut s = self.to_json().to_string();
                s.push('\n');
                s
            }
            Format::Csv => self.render_csv(),
            Format::Text => self.render_text(),
        }
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        match self {
            Self::Error { message } => {
                out.push_str("status,message\n");
                let _ = writeln!(out, "error,{}", csv_cell(&json!(message)));
            }
            Self::Ok { value_exact, value_float, table: Some(t), .. } if value_exact.is_none() && value_float.is_none() => {
                write_table(&mut out, t);
            }
            Self::Ok { value_exact, value_float, table, .. } => {
                if let Some(t) = table {
                    write_table(&mut out, t);
                } else {
                    out.push_str("value_exact,value_float\n");
                    let exact = value_exact.as_ref().map(|v| csv_cell(&json!(v))).unwrap_or_default();
                    let float = value_float.map(|v| csv_cell(&json!(v))).unwrap_or_default();
                    let _ = writeln!(out, "{exact},{float}");
                }
            }
        }
        out
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        match self {
            Self::Error { message } => {
                let _ = writeln!(out, "error: {message}");
            }
            Self::Ok { value_exact, value_float, table, meta } => {
                if let Some(v) = value_exact {
                    let _ = writeln!(out, "exact: {v}");
                }
                if let Some(v) = value_float {
                    let _ = writeln!(out, "float: {v}");
                }
                if let Some(t) = table {
                    let _ = writeln!(out, "{}", t.columns.join("\t"));
                    for row in &t.rows {
                        let cells: Vec<String> = row.iter().map(plain).collect();
                        let _ = writeln!(out, "{}", cells.join("\t"));
                    }
                }
                let _ = writeln!(out, "# {meta}");
            }
        }
        out
    }
}

fn write_table(out: &mut String, t: &Table) {
    let header: Vec<String> = t.columns.iter().map(|c| csv_cell(&json!(c))).collect();
    let _ = writeln!(out, "{}", header.join(","));
    for row in &t.rows {
        let cells: Vec<String> = row.iter().map(csv_cell).collect();
        let _ = writeln!(out, "{}", cells.join(","));
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn csv_cell(v: &Value) -> String {
    let s = plain(v);
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s
    }
}
