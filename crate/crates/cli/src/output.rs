//! Tables, number formatting and the run manifest stamped on every output.

use std::io::Write;

use serde::Serialize;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::args::Format;
use crate::error::CliError;

pub const UNITS: &str = "hbar^2/(2m) = 1";

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(x) => format_g17(*x),
            Cell::Int(i) => i.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(x) => Value::from(*x),
            Cell::Int(i) => Value::from(*i),
            Cell::Text(s) => Value::from(s.as_str()),
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<i64> for Cell {
    fn from(i: i64) -> Self {
        Cell::Int(i)
    }
}

impl From<usize> for Cell {
    fn from(i: usize) -> Self {
        Cell::Int(i as i64)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_owned())
    }
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Self { columns: columns.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn csv_body(&self) -> Result<Vec<u8>, CliError> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv))?;
        }
        w.into_inner().map_err(|e| CliError::Io(e.into_error()))
    }

    fn json_rows(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> =
                        self.columns.iter().zip(row).map(|(c, v)| ((*c).to_owned(), v.json())).collect();
                    Value::Object(obj)
                })
                .collect(),
        )
    }
}

/// Provenance record emitted with every output.
#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: Value,
    pub version: &'static str,
    pub timestamp: String,
    pub units: &'static str,
    /// SHA-256 of the data portion (CSV header and rows, or the JSON payload).
    pub digest: String,
}

impl RunManifest {
    pub fn new(command: &str, parameters: Value) -> Self {
        Self {
            command: command.to_owned(),
            parameters,
            version: env!("CARGO_PKG_VERSION"),
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            units: UNITS,
            digest: String::new(),
        }
    }
}

fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Renders a table with its manifest. CSV carries the manifest as a leading
/// `#` comment line.
pub fn render_table(table: &Table, mut manifest: RunManifest, format: Format) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Csv => {
            let body = table.csv_body()?;
            manifest.digest = sha256_hex(&body);
            let mut out = Vec::with_capacity(body.len() + 256);
            writeln!(out, "# manifest: {}", serde_json::to_string(&manifest)?)?;
            out.extend_from_slice(&body);
            Ok(out)
        }
        Format::Json => {
            let rows = table.json_rows();
            manifest.digest = sha256_hex(serde_json::to_string(&rows)?.as_bytes());
            let doc = json!({ "manifest": manifest, "columns": table.columns, "rows": rows });
            let mut out = serde_json::to_vec_pretty(&doc)?;
            out.push(b'\n');
            Ok(out)
        }
    }
}

/// Renders an arbitrary JSON payload under a manifest.
pub fn render_json(key: &str, payload: Value, mut manifest: RunManifest) -> Result<Vec<u8>, CliError> {
    manifest.digest = sha256_hex(serde_json::to_string(&payload)?.as_bytes());
    let mut doc = Map::new();
    doc.insert("manifest".into(), serde_json::to_value(&manifest)?);
    doc.insert(key.into(), payload);
    let mut out = serde_json::to_vec_pretty(&Value::Object(doc))?;
    out.push(b'\n');
    Ok(out)
}

/// C `%.17g`: 17 significant digits, shortest of fixed or exponential
/// notation, trailing zeros removed.
pub fn format_g17(x: f64) -> String {
    const P: i32 = 17;
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let sci = format!("{:.*e}", (P - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..P).contains(&exp) {
        let mantissa = strip_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        strip_zeros(&format!("{:.*}", (P - 1 - exp) as usize, x)).to_owned()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}
