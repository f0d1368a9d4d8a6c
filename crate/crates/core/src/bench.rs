//! Operation counts and wall time for the fast path versus direct DFT sums.
//!
//! A multiplication is a floating-point multiply on sample data or
//! intermediate sums. Index arithmetic, loop bookkeeping and coefficient
//! table construction are not counted.

use std::fmt;
use std::hint::black_box;
use std::io::{self, Write};
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::counter::{OpCounter, OpCounts};
use crate::error::{Error, Result};
use crate::oracle::{power_at_fractional_period, power_at_fractional_period_with};
use crate::signal::Signal;
use crate::spectrum::{congruence_derivative_with, fps_all, fps_all_with, fps_at_with};

pub const CSV_HEADER: &str = "method,m,l,k_count,multiplications,transcendental_calls,wall_time_ns";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Fps,
    Dft,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Fps => "FPS",
            Method::Dft => "DFT",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CostReport {
    pub method: Method,
    /// Length of the signal handed to the method.
    pub m: usize,
    pub l: usize,
    pub k_count: usize,
    pub multiplications: u64,
    pub additions: u64,
    pub transcendental_calls: u64,
    pub wall_time: Duration,
}

impl CostReport {
    fn new(
        method: Method,
        m: usize,
        l: usize,
        k_count: usize,
        counts: OpCounts,
        wall_time: Duration,
    ) -> Self {
        Self {
            method,
            m,
            l,
            k_count,
            multiplications: counts.multiplications,
            additions: counts.additions,
            transcendental_calls: counts.transcendental_calls,
            wall_time,
        }
    }

    pub fn write_csv_row<W: Write>(&self, w: &mut W) -> io::Result<()> {
        writeln!(
            w,
            "{},{},{},{},{},{},{}",
            self.method,
            self.m,
            self.l,
            self.k_count,
            self.multiplications,
            self.transcendental_calls,
            self.wall_time.as_nanos()
        )
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

/// Counts for folding alone. Multiplications are always zero.
pub fn counted_congruence_derivative(x: &Signal, l: usize) -> Result<OpCounts> {
    let mut counts = OpCounts::default();
    congruence_derivative_with(x, l, &mut counts)?;
    Ok(counts)
}

/// Full half-spectrum `k = 1..=l/2` through one set of shift sums.
pub fn counted_fps(x: &Signal, l: usize) -> Result<CostReport> {
    let mut counts = OpCounts::default();
    let (result, wall) = timed(|| fps_all_with(x, l, &mut counts));
    result?;
    Ok(CostReport::new(
        Method::Fps,
        x.len(),
        l,
        l / 2,
        counts,
        wall,
    ))
}

/// A single period `l/k`, unreduced.
pub fn counted_fps_single(x: &Signal, l: usize, k: usize) -> Result<CostReport> {
    let mut counts = OpCounts::default();
    let (result, wall) = timed(|| fps_at_with(x, l, k, &mut counts));
    result?;
    Ok(CostReport::new(Method::Fps, x.len(), l, 1, counts, wall))
}

/// Direct sum over every sample of `x` for one period `l/k`.
pub fn counted_dft(x: &Signal, l: usize, k: usize) -> Result<CostReport> {
    let mut counts = OpCounts::default();
    let (result, wall) = timed(|| power_at_fractional_period_with(x, l, k, &mut counts));
    result?;
    Ok(CostReport::new(Method::Dft, x.len(), l, 1, counts, wall))
}

/// Direct sums for `k = 1..=l/2`, the same half-spectrum `counted_fps` covers.
pub fn counted_dft_scan(x: &Signal, l: usize) -> Result<CostReport> {
    let mut counts = OpCounts::default();
    let (result, wall) = timed(|| dft_scan_with(x, l, &mut counts));
    result?;
    Ok(CostReport::new(
        Method::Dft,
        x.len(),
        l,
        l / 2,
        counts,
        wall,
    ))
}

fn dft_scan_with<C: OpCounter>(x: &Signal, l: usize, counter: &mut C) -> Result<Vec<f64>> {
    if l < 2 || l > x.len() {
        return Err(Error::DenominatorOutOfRange { l, m: x.len() });
    }
    (1..=l / 2)
        .map(|k| power_at_fractional_period_with(x, l, k, counter))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchConfig {
    /// Timed runs per method; the median is reported.
    pub repetitions: usize,
    /// Untimed runs before timing starts.
    pub warmup: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            repetitions: 5,
            warmup: 1,
        }
    }
}

fn median_time<T>(config: BenchConfig, mut f: impl FnMut() -> T) -> Duration {
    for _ in 0..config.warmup {
        black_box(f());
    }
    let mut times: Vec<Duration> = (0..config.repetitions.max(1))
        .map(|_| timed(|| black_box(f())).1)
        .collect();
    times.sort_unstable();
    times[times.len() / 2]
}

/// One `(m, l)` cell: both methods over the same half-spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub fps: CostReport,
    pub dft: CostReport,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("cell m={m}, l={l}: {error}")]
pub struct CellError {
    pub m: usize,
    pub l: usize,
    pub error: Error,
}

pub fn compare(
    m_values: &[usize],
    l_values: &[usize],
    seed: u64,
) -> Vec<Result<Comparison, CellError>> {
    compare_with(m_values, l_values, seed, BenchConfig::default())
}

/// Runs every `(m, l)` cell in order, one at a time.
///
/// Each `m` gets one standard-normal signal drawn from a generator seeded
/// with `seed`. The DFT side sums the same `floor(m/l) * l` samples the
/// fold uses, so both methods compute identical powers. Counts come from a
/// separate instrumented run; timings from the uninstrumented path.
pub fn compare_with(
    m_values: &[usize],
    l_values: &[usize],
    seed: u64,
    config: BenchConfig,
) -> Vec<Result<Comparison, CellError>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cells = Vec::with_capacity(m_values.len() * l_values.len());
    for &m in m_values {
        let signal = if m == 0 {
            Err(Error::EmptySignal)
        } else {
            Signal::new((0..m).map(|_| StandardNormal.sample(&mut rng)).collect())
        };
        for &l in l_values {
            let cell = signal
                .clone()
                .and_then(|x| compare_cell(&x, l, config))
                .map_err(|error| CellError { m, l, error });
            cells.push(cell);
        }
    }
    cells
}

fn compare_cell(x: &Signal, l: usize, config: BenchConfig) -> Result<Comparison> {
    let m = x.len();
    let mut fps = counted_fps(x, l)?;
    fps.wall_time = median_time(config, || fps_all(x, l));

    let folded = x.truncated((m / l) * l);
    let mut dft = counted_dft_scan(&folded, l)?;
    dft.m = m;
    dft.wall_time = median_time(config, || {
        (1..=l / 2)
            .map(|k| power_at_fractional_period(&folded, l, k).unwrap_or(f64::NAN))
            .sum::<f64>()
    });
    Ok(Comparison { fps, dft })
}

/// Header plus two rows per cell, FPS first.
pub fn write_csv<W: Write>(cells: &[Comparison], mut w: W) -> io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for cell in cells {
        cell.fps.write_csv_row(&mut w)?;
        cell.dft.write_csv_row(&mut w)?;
    }
    Ok(())
}
