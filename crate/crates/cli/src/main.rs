//! `fracspec`: fractional period spectra from the command line.
//!
//! Exit status: 0 success, 1 computation failure, 2 I/O error, 3 input parse
//! error, 4 invalid grid, arguments or simulation spec.

mod commands;
mod error;
mod grid;
mod input;
mod output;
mod sim;

use clap::{Parser, Subcommand};
use fracspec::spectrum::{precompute_coefficient_tables, DEFAULT_EAGER_BOUND};

use crate::error::{exit, CliError};

/// Overrides the eager coefficient-table bound.
const LMAX_ENV: &str = "FRACSPEC_LMAX";

#[derive(Debug, Parser)]
#[command(
    name = "fracspec",
    version,
    about = "Fourier power spectrum at fractional periods"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute the spectrum of a signal over a period grid
    Scan(commands::ScanArgs),
    /// Write a synthetic sinusoid-plus-noise signal, one sample per line
    Simulate(commands::SimulateArgs),
    /// Compare operation counts and run time against direct DFT sums
    Bench(commands::BenchArgs),
}

fn eager_bound() -> usize {
    match std::env::var(LMAX_ENV) {
        Ok(v) => v.trim().parse().unwrap_or_else(|_| {
            eprintln!("warning: ignoring {LMAX_ENV}={v:?}; using {DEFAULT_EAGER_BOUND}");
            DEFAULT_EAGER_BOUND
        }),
        Err(_) => DEFAULT_EAGER_BOUND,
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Scan(args) => {
            precompute_coefficient_tables(eager_bound());
            commands::scan(args)
        }
        Command::Simulate(args) => commands::simulate(args),
        Command::Bench(args) => {
            precompute_coefficient_tables(eager_bound());
            commands::bench(args)
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                exit::INVALID
            } else {
                exit::OK
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    if let Err(e) = run(cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
