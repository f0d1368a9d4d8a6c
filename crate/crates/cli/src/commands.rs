use std::path::PathBuf;

use clap::Args;
use fracspec::bench;
use fracspec::mapping::{aggregate_fps, to_indicators};
use fracspec::oracle::power_at_fractional_period;
use fracspec::simulation::{generate, DEFAULT_SEED};
use fracspec::{RationalPeriod, Signal};

use crate::error::CliError;
use crate::grid::{
    parse_period_list, DecimalGrid, GridEntry, DEFAULT_GRID, DEFAULT_MAX_DENOMINATOR,
};
use crate::input::{self, AlphabetChoice, Input};
use crate::output::{emit, format_f64, render, Format, OutputRow};
use crate::sim::SimArgs;

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Signal CSV (one sample per line) or FASTA file
    #[arg(
        long,
        value_name = "PATH",
        conflicts_with = "simulate",
        required_unless_present = "simulate"
    )]
    pub input: Option<PathBuf>,

    /// Scan a simulated signal instead of a file (see the simulation flags)
    #[arg(long)]
    pub simulate: bool,

    /// Decimal period grid START:STOP:STEP, each point snapped to the nearest l/k
    #[arg(long, value_name = "START:STOP:STEP", conflicts_with = "periods")]
    pub grid: Option<String>,

    /// Largest k allowed when snapping grid points
    #[arg(long, value_name = "D", default_value_t = DEFAULT_MAX_DENOMINATOR)]
    pub max_denominator: usize,

    /// Explicit periods, e.g. "37/10,28/5,3"
    #[arg(long, value_name = "LIST")]
    pub periods: Option<String>,

    /// Add a column computed by direct DFT summation
    #[arg(long)]
    pub oracle: bool,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Output file; stdout when omitted
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,

    /// Alphabet for FASTA input: auto, dna, protein or custom:SYMBOLS
    #[arg(long, default_value = "auto")]
    pub alphabet: AlphabetChoice,

    #[command(flatten)]
    pub sim: SimArgs,
}

pub fn scan(args: &ScanArgs) -> Result<(), CliError> {
    let input = match &args.input {
        Some(path) => input::load(path, &args.alphabet)?,
        None => Input::Numeric(generate(&args.sim.to_spec()?)?),
    };
    let entries = match &args.periods {
        Some(list) => parse_period_list(list)?,
        None => DecimalGrid::parse(args.grid.as_deref().unwrap_or(DEFAULT_GRID))?
            .resolve(args.max_denominator)?,
    };

    let m = input.len();
    let too_long: Vec<String> = entries
        .iter()
        .filter(|e| e.period.l() > m)
        .map(|e| e.period.to_string())
        .collect();
    if !too_long.is_empty() {
        return Err(CliError::InvalidGrid(format!(
            "input has {m} samples but these periods need more: {}",
            too_long.join(", ")
        )));
    }

    let rows = spectrum_rows(&input, &entries, args.oracle)?;
    emit(
        args.output.as_deref(),
        &render(&rows, args.format, args.oracle),
    )
}

/// Power per entry, optionally alongside direct DFT sums over the same
/// truncated samples.
pub fn spectrum_rows(
    input: &Input,
    entries: &[GridEntry],
    oracle: bool,
) -> Result<Vec<OutputRow>, CliError> {
    let periods: Vec<RationalPeriod> = entries.iter().map(|e| e.period).collect();
    let m = input.len();
    let (powers, oracle_powers): (Vec<f64>, Option<Vec<f64>>) = match input {
        Input::Numeric(x) => {
            let powers = fracspec::scan(x, &periods)?
                .into_iter()
                .map(|r| r.power)
                .collect();
            let oracle_powers = oracle
                .then(|| {
                    periods
                        .iter()
                        .map(|&p| direct_power(x, p))
                        .collect::<Result<_, _>>()
                })
                .transpose()?;
            (powers, oracle_powers)
        }
        Input::Symbolic(sequence) => {
            let bundle = to_indicators(sequence);
            let powers = periods
                .iter()
                .map(|&p| aggregate_fps(&bundle, p))
                .collect::<Result<_, _>>()?;
            let oracle_powers = oracle
                .then(|| {
                    periods
                        .iter()
                        .map(|&p| {
                            bundle.signals().iter().try_fold(0.0, |acc, s| {
                                Ok::<_, fracspec::Error>(acc + direct_power(s, p)?)
                            })
                        })
                        .collect::<Result<_, _>>()
                })
                .transpose()?;
            (powers, oracle_powers)
        }
    };

    Ok(entries
        .iter()
        .zip(powers)
        .enumerate()
        .map(|(i, (entry, power))| OutputRow {
            requested_periods: entry.requested.clone(),
            l: entry.period.l(),
            k: entry.period.k(),
            period: entry.period.value(),
            effective_length: (m / entry.period.l()) * entry.period.l(),
            power,
            oracle_power: oracle_powers.as_ref().map(|o| o[i]),
        })
        .collect())
}

fn direct_power(x: &Signal, p: RationalPeriod) -> fracspec::Result<f64> {
    let l = p.l();
    power_at_fractional_period(&x.truncated((x.len() / l) * l), l, p.k())
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub sim: SimArgs,

    /// Output file; stdout when omitted
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

pub fn simulate(args: &SimulateArgs) -> Result<(), CliError> {
    let signal = generate(&args.sim.to_spec()?)?;
    let mut text = String::with_capacity(signal.len() * 24);
    for v in signal.values() {
        text.push_str(&format_f64(*v));
        text.push('\n');
    }
    emit(args.output.as_deref(), &text)
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Signal lengths, comma separated
    #[arg(long = "m", value_name = "LIST", default_value = "300,1000,10000")]
    pub m_values: String,

    /// Period denominators, comma separated
    #[arg(long = "l", value_name = "LIST", default_value = "9,10,37,100")]
    pub l_values: String,

    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Output file; stdout when omitted
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

pub fn bench(args: &BenchArgs) -> Result<(), CliError> {
    let m_values = parse_list("--m", &args.m_values)?;
    let l_values = parse_list("--l", &args.l_values)?;
    let cells = bench::compare(&m_values, &l_values, args.seed);
    let total = cells.len();
    let mut ok = Vec::with_capacity(total);
    for cell in cells {
        match cell {
            Ok(c) => ok.push(c),
            Err(e) => eprintln!("error: {e}"),
        }
    }
    if ok.is_empty() {
        return Err(CliError::InvalidArguments(format!(
            "all {total} benchmark cells failed"
        )));
    }
    let mut csv = Vec::new();
    bench::write_csv(&ok, &mut csv).map_err(|e| CliError::io("<buffer>", e))?;
    emit(
        args.output.as_deref(),
        &String::from_utf8(csv).expect("ascii csv"),
    )
}

fn parse_list(flag: &str, s: &str) -> Result<Vec<usize>, CliError> {
    let values = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| match t.parse::<usize>() {
            Ok(v) if v > 0 => Ok(v),
            _ => Err(CliError::InvalidArguments(format!(
                "{flag}: {t:?} is not a positive integer"
            ))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    if values.is_empty() {
        return Err(CliError::InvalidArguments(format!("{flag} list is empty")));
    }
    Ok(values)
}
