//! Table and summary writers. Floats are written with 17 significant digits
//! in CSV; JSON uses the shortest representation that round-trips.

use std::fs::File;
use std::io::Write;
use std::path::Path;

use serde_json::{Map, Value};

use crate::args::Format;
use crate::error::CliError;

pub fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

/// `null` for non-finite values; JSON artifacts never contain NaN.
pub fn num(v: f64) -> Value {
    serde_json::Number::from_f64(v)
        .map(Value::Number)
        .unwrap_or(Value::Null)
}

pub type Summary = Map<String, Value>;

pub fn write_summary(out: &mut dyn Write, summary: &Summary) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, summary)?;
    writeln!(out)?;
    Ok(())
}

pub fn write_summary_file(path: &Path, summary: &Summary) -> Result<(), CliError> {
    let mut f = File::create(path)?;
    write_summary(&mut f, summary)
}

pub fn write_table(
    path: &Path,
    format: Format,
    headers: &[&str],
    rows: &[Vec<f64>],
) -> Result<(), CliError> {
    let mut f = File::create(path)?;
    write_table_to(&mut f, format, headers, rows)
}

pub fn write_table_to(
    out: &mut dyn Write,
    format: Format,
    headers: &[&str],
    rows: &[Vec<f64>],
) -> Result<(), CliError> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(headers)?;
            for row in rows {
                w.write_record(row.iter().map(|v| fmt17(*v)))?;
            }
            w.flush()?;
        }
        Format::Json => {
            let records: Vec<Value> = rows
                .iter()
                .map(|row| {
                    let mut obj = Map::new();
                    for (h, v) in headers.iter().zip(row) {
                        obj.insert((*h).to_string(), num(*v));
                    }
                    Value::Object(obj)
                })
                .collect();
            serde_json::to_writer_pretty(&mut *out, &records)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

/// Reads back a CSV table written by [`write_table`].
pub fn read_csv_table(path: &Path) -> Result<(Vec<String>, Vec<Vec<f64>>), CliError> {
    let mut rdr = csv::Reader::from_path(path)?;
    let headers = rdr.headers()?.iter().map(str::to_string).collect();
    let mut rows = Vec::new();
    for rec in rdr.records() {
        let rec = rec?;
        let row = rec
            .iter()
            .map(|s| {
                s.parse::<f64>()
                    .map_err(|e| CliError::Usage(format!("bad number {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    Ok((headers, rows))
}
