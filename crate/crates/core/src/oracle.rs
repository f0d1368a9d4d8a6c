//! Direct DFT sums, one `sin_cos` per sample and no twiddle table.
//!
//! These are the reference values the fast path is tested against and the
//! baseline it is benchmarked against. They take the signal as given; any
//! truncation to `n * l` samples is the caller's job.

use std::f64::consts::TAU;
use std::ops::{Add, Mul};

use crate::counter::{OpCounter, Uncounted};
use crate::error::{Error, Result};
use crate::signal::Signal;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ComplexAmplitude {
    pub re: f64,
    pub im: f64,
}

impl ComplexAmplitude {
    pub const fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    pub fn conj(self) -> Self {
        Self::new(self.re, -self.im)
    }

    /// `re² + im²`.
    pub fn norm_sqr(self) -> f64 {
        self.re * self.re + self.im * self.im
    }
}

impl Add for ComplexAmplitude {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Mul for ComplexAmplitude {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

fn check_range(l: usize, k: usize) -> Result<()> {
    if l < 2 {
        return Err(Error::DenominatorOutOfRange { l, m: l });
    }
    if k == 0 || k >= l {
        return Err(Error::PhaseOutOfRange { k, l });
    }
    Ok(())
}

/// `sum_j x[j] * exp(-i 2π j k / l)` over every sample of `x`.
pub fn dft_at_fractional_period(x: &Signal, l: usize, k: usize) -> Result<ComplexAmplitude> {
    dft_at_fractional_period_with(x, l, k, &mut Uncounted)
}

/// Costs `2m` multiplications and `m` transcendental calls. The phase
/// `j*k mod l` is integer bookkeeping and is not counted.
pub fn dft_at_fractional_period_with<C: OpCounter>(
    x: &Signal,
    l: usize,
    k: usize,
    counter: &mut C,
) -> Result<ComplexAmplitude> {
    check_range(l, k)?;
    let step = TAU / l as f64;
    let mut re = 0.0;
    let mut im = 0.0;
    for (j, &v) in x.values().iter().enumerate() {
        let phase = ((j as u128 * k as u128) % l as u128) as f64;
        let (sin, cos) = counter.sin_cos(phase * step);
        re = counter.mul_acc(re, v, cos);
        let product = counter.mul(v, sin);
        im = counter.add(im, -product);
    }
    Ok(ComplexAmplitude::new(re, im))
}

pub fn power_at_fractional_period(x: &Signal, l: usize, k: usize) -> Result<f64> {
    power_at_fractional_period_with(x, l, k, &mut Uncounted)
}

/// `2m + 2` multiplications: the sum plus the squared modulus.
pub fn power_at_fractional_period_with<C: OpCounter>(
    x: &Signal,
    l: usize,
    k: usize,
    counter: &mut C,
) -> Result<f64> {
    let a = dft_at_fractional_period_with(x, l, k, counter)?;
    let re2 = counter.mul(a.re, a.re);
    let im2 = counter.mul(a.im, a.im);
    Ok(counter.add(re2, im2))
}

/// Every bin of the length-`l` DFT of `y`, `l = y.len()`.
pub fn dft_full(y: &[f64]) -> Result<Vec<ComplexAmplitude>> {
    if y.is_empty() {
        return Err(Error::EmptySignal);
    }
    let l = y.len();
    let step = TAU / l as f64;
    Ok((0..l)
        .map(|k| {
            y.iter()
                .enumerate()
                .fold(ComplexAmplitude::default(), |acc, (t, &v)| {
                    let (sin, cos) = (((t * k) % l) as f64 * step).sin_cos();
                    ComplexAmplitude::new(acc.re + v * cos, acc.im - v * sin)
                })
        })
        .collect())
}
