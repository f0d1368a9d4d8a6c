//! Period grids: decimal ranges snapped to rationals, or explicit `l/k` lists.

use std::collections::HashMap;

use fracspec::{resolve_period, RationalPeriod};

use crate::error::CliError;

pub const DEFAULT_GRID: &str = "2.0:10.0:0.1";
pub const DEFAULT_MAX_DENOMINATOR: usize = 10;
const MAX_GRID_POINTS: usize = 10_000_000;

/// A distinct rational period and every requested value that resolved to it.
#[derive(Debug, Clone, PartialEq)]
pub struct GridEntry {
    pub requested: Vec<f64>,
    pub period: RationalPeriod,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecimalGrid {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl DecimalGrid {
    /// Parses `START:STOP:STEP` with `1 < START < STOP` and `STEP > 0`.
    pub fn parse(s: &str) -> Result<Self, CliError> {
        let invalid = |why: &str| CliError::InvalidGrid(format!("invalid grid {s:?}: {why}"));
        let parts: Vec<&str> = s.split(':').collect();
        let [start, stop, step] = parts.as_slice() else {
            return Err(invalid("expected START:STOP:STEP"));
        };
        let num = |t: &str| {
            t.trim()
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| invalid(&format!("{t:?} is not a finite number")))
        };
        let grid = DecimalGrid {
            start: num(start)?,
            stop: num(stop)?,
            step: num(step)?,
        };
        if grid.start <= 1.0 {
            return Err(invalid("START must be greater than 1"));
        }
        if grid.step <= 0.0 {
            return Err(invalid("STEP must be positive"));
        }
        if grid.stop <= grid.start {
            return Err(invalid("STOP must be greater than START"));
        }
        if (grid.stop - grid.start) / grid.step >= MAX_GRID_POINTS as f64 {
            return Err(invalid("too many grid points"));
        }
        Ok(grid)
    }

    /// `start + i * step` up to and including `stop`, rounded to nine decimals
    /// so accumulated error does not leak into the reported values.
    pub fn points(&self) -> Vec<f64> {
        let count = ((self.stop - self.start) / self.step + 1e-9).floor() as usize;
        (0..=count)
            .map(|i| ((self.start + i as f64 * self.step) * 1e9).round() / 1e9)
            .collect()
    }

    pub fn resolve(&self, max_denominator: usize) -> Result<Vec<GridEntry>, CliError> {
        if max_denominator == 0 {
            return Err(CliError::InvalidGrid(
                "max denominator must be at least 1".into(),
            ));
        }
        let resolved = self
            .points()
            .into_iter()
            .map(|v| {
                resolve_period(v, max_denominator)
                    .map(|p| (v, p))
                    .map_err(|e| CliError::InvalidGrid(format!("grid point {v}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(merge(resolved))
    }
}

/// Parses `l/k,l/k,...`; bare integers mean `l/1`.
pub fn parse_period_list(s: &str) -> Result<Vec<GridEntry>, CliError> {
    let mut resolved = Vec::new();
    for token in s.split(',').map(str::trim) {
        if token.is_empty() {
            continue;
        }
        let period: RationalPeriod = token
            .parse()
            .map_err(|e| CliError::InvalidGrid(format!("period {token:?}: {e}")))?;
        let requested = match token.split_once('/') {
            Some((l, k)) => {
                l.trim().parse::<f64>().unwrap_or(f64::NAN)
                    / k.trim().parse::<f64>().unwrap_or(f64::NAN)
            }
            None => period.value(),
        };
        resolved.push((requested, period));
    }
    if resolved.is_empty() {
        return Err(CliError::InvalidGrid("period list is empty".into()));
    }
    Ok(merge(resolved))
}

/// Collapses equal rationals into one entry at the first occurrence.
fn merge(resolved: Vec<(f64, RationalPeriod)>) -> Vec<GridEntry> {
    let mut index: HashMap<RationalPeriod, usize> = HashMap::new();
    let mut entries: Vec<GridEntry> = Vec::new();
    for (requested, period) in resolved {
        match index.get(&period) {
            Some(&i) => entries[i].requested.push(requested),
            None => {
                index.insert(period, entries.len());
                entries.push(GridEntry {
                    requested: vec![requested],
                    period,
                });
            }
        }
    }
    entries
}
