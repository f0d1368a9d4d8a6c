use rayon::prelude::*;

use super::coefficients::{coefficient_table, CoefficientTable};
use super::derivative::{all_shift_sums_with, congruence_derivative_with, ShiftSums};
use crate::counter::{OpCounter, Uncounted};
use crate::error::{Error, PeriodFailure, Result};
use crate::period::RationalPeriod;
use crate::signal::Signal;

/// One evaluated period of a scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumRow {
    pub period: RationalPeriod,
    /// Number of leading samples folded, `floor(m/l) * l`.
    pub effective_length: usize,
    pub power: f64,
}

impl SpectrumRow {
    pub fn period_value(&self) -> f64 {
        self.period.value()
    }
}

/// Evaluates the closed form
///
/// ```text
/// odd l:  z0 + 2 * sum_{q=1}^{(l-1)/2} z[q] cos(2πqk/l)
/// even l: z0 + 2 * sum_{q=1}^{l/2-1}   z[q] cos(2πqk/l) + 2 cos(πk) * half_sum
/// ```
///
/// Costs `(l-1)/2` multiplications for odd `l` and `l/2` for even `l`; the
/// doubling is an addition. Rounding can leave a tiny negative value where
/// the true power is zero; the result is clamped at zero.
pub fn fps_from_shift_sums<C: OpCounter>(
    sums: &ShiftSums,
    table: &CoefficientTable,
    k: usize,
    counter: &mut C,
) -> Result<f64> {
    let l = sums.period();
    if table.period() != l {
        return Err(Error::TableMismatch {
            table: table.period(),
            l,
        });
    }
    if k == 0 || k >= l {
        return Err(Error::PhaseOutOfRange { k, l });
    }
    let z = sums.sums();
    let mut acc = 0.0;
    for (q, &zq) in z.iter().enumerate().skip(1) {
        acc = counter.mul_acc(acc, zq, table.reflected(k, q));
    }
    if let Some(half) = sums.half_sum() {
        acc = counter.mul_acc(acc, half, table.reflected(k, l / 2));
    }
    let doubled = counter.add(acc, acc);
    let power = counter.add(z[0], doubled);
    Ok(power.max(0.0))
}

fn check_denominator(x: &Signal, l: usize) -> Result<()> {
    if l < 2 || l > x.len() {
        return Err(Error::DenominatorOutOfRange { l, m: x.len() });
    }
    Ok(())
}

/// Power at period `l/k` without reducing the fraction first.
///
/// The signal is folded on `l` exactly as given, so `fps_at(x, 6, 2)` uses a
/// length-6 derivative sequence while `fps(x, 3/1)` uses a length-3 one.
pub fn fps_at(x: &Signal, l: usize, k: usize) -> Result<f64> {
    fps_at_with(x, l, k, &mut Uncounted)
}

pub fn fps_at_with<C: OpCounter>(x: &Signal, l: usize, k: usize, counter: &mut C) -> Result<f64> {
    check_denominator(x, l)?;
    if k == 0 || k >= l {
        return Err(Error::PhaseOutOfRange { k, l });
    }
    let table = coefficient_table(l)?;
    let y = congruence_derivative_with(x, l, counter)?;
    let sums = all_shift_sums_with(&y, counter);
    fps_from_shift_sums(&sums, &table, k, counter)
}

/// Fractional period spectrum `FPS(l/k)` of `x`, using the leading
/// `floor(m/l) * l` samples.
pub fn fps(x: &Signal, p: RationalPeriod) -> Result<f64> {
    fps_at(x, p.l(), p.k())
}

/// `(k, FPS(l/k))` for `k = 1..l`.
///
/// Shift sums are computed once. Only `k <= l/2` is evaluated; the upper
/// half mirrors it since `FPS(l/k) = FPS(l/(l-k))`.
pub fn fps_all(x: &Signal, l: usize) -> Result<Vec<(usize, f64)>> {
    fps_all_with(x, l, &mut Uncounted)
}

pub fn fps_all_with<C: OpCounter>(
    x: &Signal,
    l: usize,
    counter: &mut C,
) -> Result<Vec<(usize, f64)>> {
    check_denominator(x, l)?;
    let table = coefficient_table(l)?;
    let y = congruence_derivative_with(x, l, counter)?;
    let sums = all_shift_sums_with(&y, counter);
    let lower = (1..=l / 2)
        .map(|k| fps_from_shift_sums(&sums, &table, k, counter))
        .collect::<Result<Vec<_>>>()?;
    Ok((1..l).map(|k| (k, lower[k.min(l - k) - 1])).collect())
}

/// Evaluates every period, in input order. Rows are computed in parallel.
/// All failing periods are reported together.
pub fn scan(x: &Signal, periods: &[RationalPeriod]) -> Result<Vec<SpectrumRow>> {
    let results: Vec<Result<SpectrumRow>> = periods
        .par_iter()
        .map(|&period| {
            let power = fps(x, period)?;
            Ok(SpectrumRow {
                period,
                effective_length: (x.len() / period.l()) * period.l(),
                power,
            })
        })
        .collect();

    let mut rows = Vec::with_capacity(results.len());
    let mut failures = Vec::new();
    for (index, (result, &period)) in results.into_iter().zip(periods).enumerate() {
        match result {
            Ok(row) => rows.push(row),
            Err(error) => failures.push(PeriodFailure {
                index,
                period,
                error,
            }),
        }
    }
    if failures.is_empty() {
        Ok(rows)
    } else {
        Err(Error::ScanFailed(failures))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counter::OpCounts;

    fn signal(v: &[f64]) -> Signal {
        Signal::new(v.to_vec()).unwrap()
    }

    fn period(l: usize, k: usize) -> RationalPeriod {
        RationalPeriod::new(l, k).unwrap()
    }

    #[test]
    fn power_at_three_over_one() {
        let x = signal(&[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        assert!((fps(&x, period(3, 1)).unwrap() - 12.0).abs() < 1e-12);
        assert!((fps(&x, period(3, 2)).unwrap() - 12.0).abs() < 1e-12);
    }

    #[test]
    fn constant_signal_has_no_power_off_dc() {
        let x = signal(&[2.5; 60]);
        for l in 2..=30 {
            for k in 1..l {
                let scale = (60 / l * l) as f64 * 2.5;
                let p = fps_at(&x, l, k).unwrap();
                assert!(p.abs() <= 1e-12 * scale * scale, "l={l} k={k} p={p}");
            }
        }
    }

    #[test]
    fn impulse_has_flat_spectrum() {
        let x = signal(&[1.0, 0.0, 0.0, 0.0]);
        assert_eq!(fps(&x, period(4, 1)).unwrap(), 1.0);
        assert_eq!(fps_all(&x, 4).unwrap(), vec![(1, 1.0), (2, 1.0), (3, 1.0)]);
    }

    #[test]
    fn rejects_invalid_periods() {
        let x = signal(&[1.0, 2.0, 3.0]);
        assert_eq!(
            fps(&x, period(4, 1)),
            Err(Error::DenominatorOutOfRange { l: 4, m: 3 })
        );
        assert_eq!(fps_at(&x, 3, 0), Err(Error::PhaseOutOfRange { k: 0, l: 3 }));
        assert_eq!(fps_at(&x, 3, 3), Err(Error::PhaseOutOfRange { k: 3, l: 3 }));
        assert_eq!(
            fps_all(&x, 1),
            Err(Error::DenominatorOutOfRange { l: 1, m: 3 })
        );
    }

    #[test]
    fn fps_all_mirrors_and_matches_single_calls() {
        let x: Vec<f64> = (0..30)
            .map(|i| ((i * 37 + 11) % 17) as f64 * 0.3 - 2.0)
            .collect();
        let x = signal(&x);
        let all = fps_all(&x, 6).unwrap();
        assert_eq!(all.len(), 5);
        for &(k, p) in &all {
            assert_eq!(p, fps_at(&x, 6, k).unwrap());
        }
        let all5 = fps_all(&x, 5).unwrap();
        assert_eq!(all5[0].1, all5[3].1);
        assert_eq!(all5[1].1, all5[2].1);
    }

    #[test]
    fn single_k_multiplication_counts() {
        let x = signal(&vec![0.5; 1000]);
        for (l, expected) in [(9usize, 49u64), (10, 60), (37, 721), (100, 5100)] {
            let mut counts = OpCounts::default();
            let counted = fps_at_with(&x, l, 1, &mut counts).unwrap();
            assert_eq!(counts.multiplications, expected, "l={l}");
            assert_eq!(counted.to_bits(), fps_at(&x, l, 1).unwrap().to_bits());
        }
    }

    #[test]
    fn scan_preserves_order_and_reports_failures() {
        let x = signal(&[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        assert!(scan(&x, &[]).unwrap().is_empty());
        let rows = scan(&x, &[period(3, 1), period(5, 2), period(4, 1)]).unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0].power, fps(&x, period(3, 1)).unwrap());
        assert_eq!(rows[1].period, period(5, 2));
        assert_eq!(rows[1].effective_length, 5);
        assert_eq!(rows[2].effective_length, 4);

        let err = scan(&x, &[period(3, 1), period(7, 2), period(9, 4)]).unwrap_err();
        match err {
            Error::ScanFailed(failures) => {
                assert_eq!(failures.len(), 2);
                assert_eq!(failures[0].index, 1);
                assert_eq!(failures[0].period, period(7, 2));
                assert_eq!(failures[1].index, 2);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
