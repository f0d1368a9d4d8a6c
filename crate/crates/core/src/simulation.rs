//! Seeded synthetic signals: sums of sinusoids plus white Gaussian noise.

use std::f64::consts::{FRAC_PI_4, PI, TAU};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::error::{Error, Result};
use crate::signal::Signal;

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_NOISE_STD_DEV: f64 = 1.0;
pub const DEFAULT_LENGTH: usize = 300;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Waveform {
    Sin,
    Cos,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Component {
    pub waveform: Waveform,
    /// Samples per cycle; may be fractional.
    pub period: f64,
    /// Radians.
    pub phase: f64,
    pub amplitude: f64,
}

impl Component {
    pub fn sin(period: f64, phase: f64) -> Self {
        Self {
            waveform: Waveform::Sin,
            period,
            phase,
            amplitude: 1.0,
        }
    }

    pub fn cos(period: f64, phase: f64) -> Self {
        Self {
            waveform: Waveform::Cos,
            ..Self::sin(period, phase)
        }
    }

    /// Value at sample index `n` (1-based).
    pub fn eval(&self, n: usize) -> f64 {
        let angle = TAU * n as f64 / self.period + self.phase;
        self.amplitude
            * match self.waveform {
                Waveform::Sin => angle.sin(),
                Waveform::Cos => angle.cos(),
            }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SinusoidSpec {
    pub components: Vec<Component>,
    pub length: usize,
    pub noise_std_dev: f64,
    pub seed: u64,
}

impl SinusoidSpec {
    /// `sin(2πn/3.7 + π/4) + cos(2πn/5.6 + 3π/4) + noise`, `n = 1..=300`.
    pub fn two_tone(seed: u64) -> Self {
        Self {
            components: vec![
                Component::sin(3.7, FRAC_PI_4),
                Component::cos(5.6, 3.0 * PI / 4.0),
            ],
            length: DEFAULT_LENGTH,
            noise_std_dev: DEFAULT_NOISE_STD_DEV,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.length == 0 {
            return Err(Error::InvalidSimulation("length must be at least 1".into()));
        }
        if !(self.noise_std_dev.is_finite() && self.noise_std_dev >= 0.0) {
            return Err(Error::InvalidSimulation(format!(
                "noise standard deviation must be finite and non-negative, got {}",
                self.noise_std_dev
            )));
        }
        for c in &self.components {
            if !(c.period.is_finite() && c.period > 1.0) {
                return Err(Error::InvalidSimulation(format!(
                    "component period must be greater than 1, got {}",
                    c.period
                )));
            }
            if !c.phase.is_finite() || !c.amplitude.is_finite() {
                return Err(Error::InvalidSimulation(
                    "component phase and amplitude must be finite".into(),
                ));
            }
        }
        Ok(())
    }
}

/// Samples `n = 1..=length`. The noise stream depends only on `seed`; with
/// `noise_std_dev == 0` no noise is drawn.
pub fn generate(spec: &SinusoidSpec) -> Result<Signal> {
    spec.validate()?;
    let mut values: Vec<f64> = (1..=spec.length)
        .map(|n| spec.components.iter().map(|c| c.eval(n)).sum())
        .collect();
    if spec.noise_std_dev > 0.0 {
        let normal = Normal::new(0.0, spec.noise_std_dev)
            .map_err(|e| Error::InvalidSimulation(e.to_string()))?;
        let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
        for v in &mut values {
            *v += normal.sample(&mut rng);
        }
    }
    Signal::new(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_tone_defaults() {
        let spec = SinusoidSpec::two_tone(7);
        assert_eq!(spec.length, 300);
        assert_eq!(generate(&spec).unwrap().len(), 300);
    }

    #[test]
    fn quarter_period_samples() {
        let spec = SinusoidSpec {
            components: vec![Component::sin(4.0, 0.0)],
            length: 8,
            noise_std_dev: 0.0,
            seed: 0,
        };
        let x = generate(&spec).unwrap();
        let expected = [1.0, 0.0, -1.0, 0.0, 1.0, 0.0, -1.0, 0.0];
        for (got, want) in x.values().iter().zip(expected) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn noiseless_matches_direct_evaluation() {
        let spec = SinusoidSpec {
            noise_std_dev: 0.0,
            ..SinusoidSpec::two_tone(0)
        };
        let x = generate(&spec).unwrap();
        for (i, v) in x.values().iter().enumerate() {
            let n = (i + 1) as f64;
            let direct = (TAU * n / 3.7 + PI / 4.0).sin() + (TAU * n / 5.6 + 3.0 * PI / 4.0).cos();
            assert!((v - direct).abs() <= 1e-12);
        }
    }

    #[test]
    fn same_seed_same_signal() {
        let a = generate(&SinusoidSpec::two_tone(11)).unwrap();
        let b = generate(&SinusoidSpec::two_tone(11)).unwrap();
        let c = generate(&SinusoidSpec::two_tone(12)).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn noise_mean_is_near_zero() {
        let spec = SinusoidSpec {
            components: vec![],
            length: 100_000,
            noise_std_dev: 1.0,
            seed: DEFAULT_SEED,
        };
        let x = generate(&spec).unwrap();
        let mean = x.values().iter().sum::<f64>() / x.len() as f64;
        assert!(mean.abs() <= 0.02, "mean {mean}");
        let var = x.values().iter().map(|v| (v - mean).powi(2)).sum::<f64>() / x.len() as f64;
        assert!((var - 1.0).abs() < 0.02, "variance {var}");
    }

    #[test]
    fn rejects_invalid_specs() {
        let mut spec = SinusoidSpec::two_tone(0);
        spec.length = 0;
        assert!(matches!(generate(&spec), Err(Error::InvalidSimulation(_))));
        let mut spec = SinusoidSpec::two_tone(0);
        spec.noise_std_dev = -1.0;
        assert!(generate(&spec).is_err());
        let mut spec = SinusoidSpec::two_tone(0);
        spec.components.push(Component::sin(1.0, 0.0));
        assert!(generate(&spec).is_err());
    }
}
