//! Signal CSV and FASTA readers.

use std::path::Path;
use std::str::FromStr;

use fracspec::mapping::{Alphabet, SymbolicSequence};
use fracspec::Signal;

use crate::error::CliError;

const FASTA_EXTENSIONS: &[&str] = &["fa", "fasta", "fna", "faa", "ffn", "fas", "frn", "mpfa"];

/// Which alphabet symbolic input is read with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlphabetChoice {
    Auto,
    Fixed(Alphabet),
}

impl FromStr for AlphabetChoice {
    type Err = String;

    /// `auto`, `dna`, `protein` or `custom:SYMBOLS`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "auto" => Ok(AlphabetChoice::Auto),
            "dna" | "rna" => Ok(AlphabetChoice::Fixed(Alphabet::Dna)),
            "protein" => Ok(AlphabetChoice::Fixed(Alphabet::Protein)),
            _ => match s.split_once(':') {
                Some((kind, symbols)) if kind.eq_ignore_ascii_case("custom") => {
                    Alphabet::custom(symbols.chars())
                        .map(AlphabetChoice::Fixed)
                        .map_err(|e| e.to_string())
                }
                _ => Err(format!(
                    "unknown alphabet {s:?}; expected auto, dna, protein or custom:SYMBOLS"
                )),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Input {
    Numeric(Signal),
    Symbolic(SymbolicSequence),
}

impl Input {
    pub fn len(&self) -> usize {
        match self {
            Input::Numeric(s) => s.len(),
            Input::Symbolic(s) => s.len(),
        }
    }
}

pub fn load(path: &Path, alphabet: &AlphabetChoice) -> Result<Input, CliError> {
    let bytes = std::fs::read(path).map_err(|e| CliError::io(path, e))?;
    let text = String::from_utf8(bytes)
        .map_err(|_| CliError::Parse(format!("{}: input is not valid UTF-8", path.display())))?;
    if looks_like_fasta(path, &text) {
        read_fasta(path, &text, alphabet).map(Input::Symbolic)
    } else {
        read_signal_csv(path, &text).map(Input::Numeric)
    }
}

fn looks_like_fasta(path: &Path, text: &str) -> bool {
    let by_extension = path
        .extension()
        .and_then(|e| e.to_str())
        .is_some_and(|e| FASTA_EXTENSIONS.contains(&e.to_ascii_lowercase().as_str()));
    by_extension
        || text
            .lines()
            .find(|l| !l.trim().is_empty())
            .is_some_and(|l| l.trim_start().starts_with('>'))
}

/// One real per line. Blank lines and `#` comments are skipped; a
/// non-numeric first line is taken as a header.
pub fn read_signal_csv(path: &Path, text: &str) -> Result<Signal, CliError> {
    let mut values = Vec::new();
    let mut seen_content = false;
    for (index, line) in text.lines().enumerate() {
        let token = line.trim();
        if token.is_empty() || token.starts_with('#') {
            continue;
        }
        let first = !seen_content;
        seen_content = true;
        match token.parse::<f64>() {
            Ok(v) if v.is_finite() => values.push(v),
            Ok(_) => {
                return Err(CliError::Parse(format!(
                    "{}:{}: sample {token:?} is not finite",
                    path.display(),
                    index + 1
                )))
            }
            Err(_) if first => {}
            Err(_) => {
                return Err(CliError::Parse(format!(
                    "{}:{}: cannot parse {token:?} as a number",
                    path.display(),
                    index + 1
                )))
            }
        }
    }
    if values.is_empty() {
        return Err(CliError::Parse(format!(
            "{}: no samples found",
            path.display()
        )));
    }
    Signal::new(values).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

/// Where a run of sequence characters came from.
struct Segment {
    offset: usize,
    line: usize,
}

/// Reads the first record. Later records are ignored with a warning.
pub fn read_fasta(
    path: &Path,
    text: &str,
    alphabet: &AlphabetChoice,
) -> Result<SymbolicSequence, CliError> {
    let mut header: Option<&str> = None;
    let mut sequence = String::new();
    let mut segments = Vec::new();
    let mut extra_records = 0usize;

    for (index, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with(';') {
            continue;
        }
        if let Some(name) = trimmed.strip_prefix('>') {
            if header.is_some() {
                extra_records += 1;
            } else {
                header = Some(name.trim());
            }
            continue;
        }
        if header.is_none() {
            return Err(CliError::Parse(format!(
                "{}:{}: sequence data before the first '>' header",
                path.display(),
                index + 1
            )));
        }
        if extra_records > 0 {
            continue;
        }
        segments.push(Segment {
            offset: sequence.chars().count(),
            line: index + 1,
        });
        sequence.extend(line.chars().filter(|c| !c.is_whitespace()));
    }

    let Some(header) = header else {
        return Err(CliError::Parse(format!(
            "{}: empty FASTA file",
            path.display()
        )));
    };
    if sequence.is_empty() {
        return Err(CliError::Parse(format!(
            "{}: FASTA record {header:?} has no sequence",
            path.display()
        )));
    }
    if extra_records > 0 {
        eprintln!(
            "warning: {}: using the first of {} records ({header:?})",
            path.display(),
            extra_records + 1
        );
    }

    let alphabet = match alphabet {
        AlphabetChoice::Auto => Alphabet::detect(&sequence),
        AlphabetChoice::Fixed(a) => a.clone(),
    };
    SymbolicSequence::new(&sequence, alphabet).map_err(|e| match e {
        fracspec::Error::InvalidSymbol { symbol, position } => {
            let (line, column) = locate(text, &segments, position);
            CliError::Parse(format!(
                "{}:{line}:{column}: invalid symbol {symbol:?} for the selected alphabet",
                path.display()
            ))
        }
        other => CliError::Parse(format!("{}: {other}", path.display())),
    })
}

/// 1-based line and column of the `position`-th sequence character.
fn locate(text: &str, segments: &[Segment], position: usize) -> (usize, usize) {
    let segment = segments
        .iter()
        .rev()
        .find(|s| s.offset <= position)
        .expect("position lies inside the sequence");
    let within = position - segment.offset;
    let line_text = text.lines().nth(segment.line - 1).unwrap_or("");
    let column = line_text
        .chars()
        .enumerate()
        .filter(|(_, c)| !c.is_whitespace())
        .nth(within)
        .map(|(i, _)| i + 1)
        .unwrap_or(1);
    (segment.line, column)
}
