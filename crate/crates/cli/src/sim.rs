//! Simulation flags shared by `simulate` and `scan --simulate`.

use std::f64::consts::PI;

use clap::Args;
use fracspec::simulation::{
    Component, SinusoidSpec, DEFAULT_LENGTH, DEFAULT_NOISE_STD_DEV, DEFAULT_SEED,
};

use crate::error::CliError;

#[derive(Debug, Clone, Args)]
pub struct SimArgs {
    /// Number of samples, indexed from n = 1
    #[arg(long, default_value_t = DEFAULT_LENGTH)]
    pub length: usize,

    /// Sine component PERIOD:PHASE[:AMPLITUDE]; phase in radians, `pi` allowed (e.g. 3.7:pi/4)
    #[arg(long = "sin", value_name = "P:PHASE")]
    pub sin: Vec<String>,

    /// Cosine component PERIOD:PHASE[:AMPLITUDE]
    #[arg(long = "cos", value_name = "P:PHASE")]
    pub cos: Vec<String>,

    /// Standard deviation of the white Gaussian noise
    #[arg(long, default_value_t = DEFAULT_NOISE_STD_DEV)]
    pub noise: f64,

    /// Noise generator seed
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

impl SimArgs {
    /// Without any `--sin`/`--cos`, the two-tone 3.7 / 5.6 signal is used.
    pub fn to_spec(&self) -> Result<SinusoidSpec, CliError> {
        let mut components = Vec::new();
        for s in &self.sin {
            components.push(parse_component(s, Component::sin)?);
        }
        for s in &self.cos {
            components.push(parse_component(s, Component::cos)?);
        }
        if components.is_empty() {
            components = SinusoidSpec::two_tone(self.seed).components;
        }
        let spec = SinusoidSpec {
            components,
            length: self.length,
            noise_std_dev: self.noise,
            seed: self.seed,
        };
        spec.validate()
            .map_err(|e| CliError::InvalidArguments(e.to_string()))?;
        Ok(spec)
    }
}

fn parse_component(s: &str, make: fn(f64, f64) -> Component) -> Result<Component, CliError> {
    let invalid = |why: String| CliError::InvalidArguments(format!("component {s:?}: {why}"));
    let parts: Vec<&str> = s.split(':').collect();
    if !(2..=3).contains(&parts.len()) {
        return Err(invalid("expected PERIOD:PHASE[:AMPLITUDE]".into()));
    }
    let period = parts[0]
        .trim()
        .parse::<f64>()
        .map_err(|_| invalid(format!("bad period {:?}", parts[0])))?;
    let phase =
        parse_angle(parts[1]).ok_or_else(|| invalid(format!("bad phase {:?}", parts[1])))?;
    let mut component = make(period, phase);
    if let Some(a) = parts.get(2) {
        component.amplitude = a
            .trim()
            .parse()
            .map_err(|_| invalid(format!("bad amplitude {a:?}")))?;
    }
    Ok(component)
}

/// A plain number or `[-][COEF][*]pi[/DEN]`, e.g. `0.5`, `pi/4`, `3pi/4`, `-2*pi`.
pub fn parse_angle(s: &str) -> Option<f64> {
    let s = s.trim().to_ascii_lowercase();
    if let Ok(v) = s.parse::<f64>() {
        return v.is_finite().then_some(v);
    }
    let (coef, rest) = s.split_once("pi")?;
    let coef = coef.trim().trim_end_matches('*').trim();
    let coef = match coef {
        "" | "+" => 1.0,
        "-" => -1.0,
        c => c.parse::<f64>().ok()?,
    };
    let rest = rest.trim();
    let den = if rest.is_empty() {
        1.0
    } else {
        rest.strip_prefix('/')?.trim().parse::<f64>().ok()?
    };
    let v = coef * PI / den;
    v.is_finite().then_some(v)
}
