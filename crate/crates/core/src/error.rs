use crate::period::RationalPeriod;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("signal is empty")]
    EmptySignal,

    #[error("sample {index} is not finite ({value})")]
    NonFiniteSample { index: usize, value: f64 },

    #[error("denominator l={l} is out of range for a signal of length m={m} (need 1 <= l <= m)")]
    DenominatorOutOfRange { l: usize, m: usize },

    #[error("phase index k={k} is out of range for l={l} (need 1 <= k < l)")]
    PhaseOutOfRange { k: usize, l: usize },

    #[error("lag q={q} is out of range for l={l}")]
    LagOutOfRange { q: usize, l: usize },

    #[error("coefficient table requires l >= 2, got l={0}")]
    TableTooSmall(usize),

    #[error("cannot parse period {0:?}; expected l/k or l")]
    PeriodSyntax(String),

    #[error("coefficient table for l={table} used with shift sums for l={l}")]
    TableMismatch { table: usize, l: usize },

    #[error("period target {0} must be a finite number greater than 1")]
    InvalidTarget(f64),

    #[error("period target {0} is too large to represent")]
    TargetTooLarge(f64),

    #[error("maximum denominator must be at least 1")]
    ZeroDenominatorBound,

    #[error("period {target} resolves to {l}/{k}, which is not greater than 1")]
    DegeneratePeriod { target: f64, l: usize, k: usize },

    #[error("sequence is empty")]
    EmptySequence,

    #[error("invalid symbol {symbol:?} at position {position}")]
    InvalidSymbol { symbol: char, position: usize },

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("indicator signals disagree on length")]
    RaggedBundle,

    #[error("invalid simulation spec: {0}")]
    InvalidSimulation(String),

    #[error("{} period(s) failed: {}", .0.len(), display_failures(.0))]
    ScanFailed(Vec<PeriodFailure>),
}

/// A failure attributed to one entry of a period list.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodFailure {
    pub index: usize,
    pub period: RationalPeriod,
    pub error: Error,
}

fn display_failures(failures: &[PeriodFailure]) -> String {
    failures
        .iter()
        .map(|f| format!("#{} ({}): {}", f.index, f.period, f.error))
        .collect::<Vec<_>>()
        .join("; ")
}
