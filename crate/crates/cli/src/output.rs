//! Spectrum rows as CSV or JSON, and atomic file output.

use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::error::CliError;

pub const SPECTRUM_HEADER: &str = "requested_period,l,k,effective_length,power";

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutputRow {
    /// Every requested value that resolved to this period.
    pub requested_periods: Vec<f64>,
    pub l: usize,
    pub k: usize,
    pub period: f64,
    pub effective_length: usize,
    pub power: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_power: Option<f64>,
}

/// Shortest text that parses back to the same `f64`, switching to exponent
/// notation for very small or very large magnitudes.
pub fn format_f64(v: f64) -> String {
    let a = v.abs();
    if a != 0.0 && !(1e-5..1e16).contains(&a) {
        format!("{v:e}")
    } else {
        v.to_string()
    }
}

/// Multiple requested periods are joined with `;`.
pub fn to_csv(rows: &[OutputRow], with_oracle: bool) -> String {
    let mut out = String::from(SPECTRUM_HEADER);
    if with_oracle {
        out.push_str(",oracle_power");
    }
    out.push('\n');
    for row in rows {
        let requested = row
            .requested_periods
            .iter()
            .map(|&v| format_f64(v))
            .collect::<Vec<_>>()
            .join(";");
        write!(
            out,
            "{requested},{},{},{},{}",
            row.l,
            row.k,
            row.effective_length,
            format_f64(row.power)
        )
        .unwrap();
        if with_oracle {
            match row.oracle_power {
                Some(p) => write!(out, ",{}", format_f64(p)).unwrap(),
                None => out.push(','),
            }
        }
        out.push('\n');
    }
    out
}

pub fn to_json(rows: &[OutputRow]) -> String {
    let mut s = serde_json::to_string_pretty(rows).expect("rows serialize");
    s.push('\n');
    s
}

pub fn render(rows: &[OutputRow], format: Format, with_oracle: bool) -> String {
    match format {
        Format::Csv => to_csv(rows, with_oracle),
        Format::Json => to_json(rows),
    }
}

/// Writes to a temporary file beside `path` and renames it into place, so
/// a failure never leaves a partial file. Without a path, writes to stdout.
pub fn emit(path: Option<&Path>, contents: &str) -> Result<(), CliError> {
    let Some(path) = path else {
        let mut stdout = std::io::stdout().lock();
        return stdout
            .write_all(contents.as_bytes())
            .and_then(|_| stdout.flush())
            .map_err(|e| CliError::io("<stdout>", e));
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| CliError::io(path, e))?;
    tmp.write_all(contents.as_bytes())
        .and_then(|_| tmp.as_file().sync_all())
        .map_err(|e| CliError::io(path, e))?;
    tmp.persist(path).map_err(|e| CliError::io(path, e.error))?;
    Ok(())
}
