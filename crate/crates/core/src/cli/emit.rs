//! Record output as CSV, JSON lines or an aligned table.
//!
//! Floats are written with 17 significant digits so every value re-parses to
//! the same `f64`; non-finite floats become `NaN`/`inf` in CSV and `null` in
//! JSON.

use std::io::{self, Write};

use crate::numfmt::g17;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Jsonl,
    Pretty,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Int(i64),
    Float(f64),
    Str(String),
    Bool(bool),
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Float(x)
    }
}

impl From<u64> for Value {
    fn from(x: u64) -> Self {
        Value::Int(x as i64)
    }
}

impl From<usize> for Value {
    fn from(x: usize) -> Self {
        Value::Int(x as i64)
    }
}

impl From<bool> for Value {
    fn from(x: bool) -> Self {
        Value::Bool(x)
    }
}

impl From<String> for Value {
    fn from(x: String) -> Self {
        Value::Str(x)
    }
}

impl From<&str> for Value {
    fn from(x: &str) -> Self {
        Value::Str(x.to_string())
    }
}

/// A flat row with a fixed, ordered set of named fields.
pub trait Record {
    fn header() -> &'static [&'static str]
    where
        Self: Sized;

    /// Values in header order.
    fn values(&self) -> Vec<Value>;
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::Int(i) => i.to_string(),
        Value::Float(x) => g17(*x),
        Value::Bool(b) => b.to_string(),
        Value::Str(s) if s.contains([',', '"', '\n']) => format!("\"{}\"", s.replace('"', "\"\"")),
        Value::Str(s) => s.clone(),
    }
}

fn json_value(v: &Value) -> String {
    match v {
        Value::Int(i) => i.to_string(),
        Value::Float(x) if x.is_finite() => g17(*x),
        Value::Float(_) => "null".into(),
        Value::Bool(b) => b.to_string(),
        Value::Str(s) => serde_json::Value::String(s.clone()).to_string(),
    }
}

fn pretty_cell(v: &Value) -> String {
    match v {
        Value::Float(x) => format!("{x}"),
        other => csv_cell(other),
    }
}

pub fn emit<R: Record, W: Write>(records: &[R], format: Format, mut out: W) -> io::Result<()> {
    let header = R::header();
    match format {
        Format::Csv => {
            writeln!(out, "{}", header.join(","))?;
            for r in records {
                let cells: Vec<String> = r.values().iter().map(csv_cell).collect();
                writeln!(out, "{}", cells.join(","))?;
            }
        }
        Format::Jsonl => {
            for r in records {
                let fields: Vec<String> = header
                    .iter()
                    .zip(r.values().iter())
                    .map(|(k, v)| format!("{}:{}", serde_json::Value::String(k.to_string()), json_value(v)))
                    .collect();
                writeln!(out, "{{{}}}", fields.join(","))?;
            }
        }
        Format::Pretty => {
            let rows: Vec<Vec<String>> = records.iter().map(|r| r.values().iter().map(pretty_cell).collect()).collect();
            let widths: Vec<usize> = (0..header.len())
                .map(|j| rows.iter().map(|row| row[j].chars().count()).chain([header[j].len()]).max().unwrap_or(0))
                .collect();
            let line = |cells: Vec<&str>| {
                cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}", w = *w)).collect::<Vec<_>>().join("  ")
            };
            writeln!(out, "{}", line(header.to_vec()))?;
            for row in &rows {
                writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Row(f64, &'static str);

    impl Record for Row {
        fn header() -> &'static [&'static str] {
            &["x", "label"]
        }

        fn values(&self) -> Vec<Value> {
            vec![self.0.into(), self.1.into()]
        }
    }

    fn render(rows: &[Row], f: Format) -> String {
        let mut buf = Vec::new();
        emit(rows, f, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn empty_sets() {
        assert_eq!(render(&[], Format::Csv), "x,label\n");
        assert_eq!(render(&[], Format::Jsonl), "");
    }

    #[test]
    fn csv_and_jsonl_round_trip() {
        let rows = [Row(0.1 + 0.2, "a,b"), Row(f64::NAN, "c")];
        assert_eq!(render(&rows, Format::Csv), "x,label\n0.30000000000000004,\"a,b\"\nNaN,c\n");
        let json = render(&rows, Format::Jsonl);
        let first: serde_json::Value = serde_json::from_str(json.lines().next().unwrap()).unwrap();
        assert_eq!(first["x"].as_f64().unwrap(), 0.1 + 0.2);
        assert_eq!(first["label"], "a,b");
        assert!(json.lines().nth(1).unwrap().contains("\"x\":null"));
    }

    #[test]
    fn pretty_aligns_columns() {
        let text = render(&[Row(1.5, "long label")], Format::Pretty);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0].len(), lines[1].len());
    }
}
