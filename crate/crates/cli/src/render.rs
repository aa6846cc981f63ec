use std::io::Write;

use anyhow::Result;
use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// Rows with exact `p/q` cells, for CSV output.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Table {
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }
}

/// One command's result in all three forms.
pub struct Report {
    pub text: String,
    pub table: Table,
    pub json: Value,
    /// Process exit code on success; 3 flags findings such as violations.
    pub exit_code: i32,
}

impl Report {
    pub fn new(text: String, table: Table, json: &impl Serialize) -> Result<Self> {
        Ok(Report {
            text,
            table,
            json: serde_json::to_value(json)?,
            exit_code: 0,
        })
    }

    pub fn with_exit_code(mut self, code: i32) -> Self {
        self.exit_code = code;
        self
    }
}

/// JSON output carries the producing command, tool version and seed next
/// to the result.
pub fn write(
    out: &mut impl Write,
    format: Format,
    command: &str,
    seed: u64,
    r: &Report,
) -> Result<()> {
    match format {
        Format::Text => {
            out.write_all(r.text.as_bytes())?;
            if !r.text.ends_with('\n') {
                writeln!(out)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(&r.table.headers)?;
            for row in &r.table.rows {
                w.write_record(row)?;
            }
            w.flush()?;
        }
        Format::Json => {
            let doc = json!({
                "tool": concat!("dioph ", env!("CARGO_PKG_VERSION")),
                "command": command,
                "seed": seed,
                "result": r.json,
            });
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)?;
        }
    }
    Ok(())
}
