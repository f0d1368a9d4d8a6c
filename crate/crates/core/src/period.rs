use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A period `l/k` with `1 <= k < l`, stored in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalPeriod {
    l: usize,
    k: usize,
}

impl RationalPeriod {
    /// Builds `l/k` and reduces it by `gcd(l, k)`.
    pub fn new(l: usize, k: usize) -> Result<Self> {
        if k == 0 || k >= l {
            return Err(Error::PhaseOutOfRange { k, l });
        }
        let d = gcd(l, k);
        Ok(Self { l: l / d, k: k / d })
    }

    /// Denominator of the spectrum: length of the congruence derivative sequence.
    pub fn l(&self) -> usize {
        self.l
    }

    /// Phase index: the DFT bin of the derivative sequence.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn value(&self) -> f64 {
        self.l as f64 / self.k as f64
    }
}

impl fmt::Display for RationalPeriod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.l, self.k)
    }
}

impl FromStr for RationalPeriod {
    type Err = Error;

    /// Accepts `l/k` or a bare integer `l` (meaning `l/1`).
    fn from_str(s: &str) -> Result<Self> {
        let syntax = || Error::PeriodSyntax(s.to_string());
        let (l, k) = match s.trim().split_once('/') {
            Some((l, k)) => (l.trim(), k.trim()),
            None => (s.trim(), "1"),
        };
        let l = l.parse::<usize>().map_err(|_| syntax())?;
        let k = k.parse::<usize>().map_err(|_| syntax())?;
        RationalPeriod::new(l, k)
    }
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Best rational approximation `l/k` of `target` with `k <= max_denominator`.
///
/// Walks the continued-fraction convergents of the exact binary value of
/// `target`, then picks between the last admissible convergent and the
/// largest admissible semiconvergent. Equal errors resolve to the smaller `l`.
pub fn resolve_period(target: f64, max_denominator: usize) -> Result<RationalPeriod> {
    if !target.is_finite() || target <= 1.0 {
        return Err(Error::InvalidTarget(target));
    }
    if max_denominator == 0 {
        return Err(Error::ZeroDenominatorBound);
    }
    let (num, den) = exact_fraction(target).ok_or(Error::TargetTooLarge(target))?;
    // Keeps every cross product below 2^128.
    let max_den = (max_denominator as u128).min(u32::MAX as u128);

    let (l, k) = if den <= max_den {
        (num, den)
    } else {
        let (mut p0, mut q0, mut p1, mut q1) = (0u128, 1u128, 1u128, 0u128);
        let (mut n, mut d) = (num, den);
        loop {
            let a = n / d;
            let q2 = q0 + a * q1;
            if q2 > max_den {
                break;
            }
            (p0, q0, p1, q1) = (p1, q1, p0 + a * p1, q2);
            (n, d) = (d, n - a * d);
        }
        let t = (max_den - q0) / q1;
        let semi = (p0 + t * p1, q0 + t * q1);
        let conv = (p1, q1);
        let err = |(p, q): (u128, u128)| abs_diff(p * den, num * q);
        // |p/q - x| compared as err(p,q)/q across the two candidates.
        let lhs = err(semi) * conv.1;
        let rhs = err(conv) * semi.1;
        match lhs.cmp(&rhs) {
            std::cmp::Ordering::Less => semi,
            std::cmp::Ordering::Greater => conv,
            std::cmp::Ordering::Equal => {
                if semi.0 < conv.0 {
                    semi
                } else {
                    conv
                }
            }
        }
    };

    let l = usize::try_from(l).map_err(|_| Error::TargetTooLarge(target))?;
    let k = usize::try_from(k).map_err(|_| Error::TargetTooLarge(target))?;
    if l <= k {
        return Err(Error::DegeneratePeriod { target, l, k });
    }
    RationalPeriod::new(l, k)
}

fn abs_diff(a: u128, b: u128) -> u128 {
    a.max(b) - a.min(b)
}

/// `x = num / den` exactly, in lowest terms, for finite `x > 1` below 2^63.
fn exact_fraction(x: f64) -> Option<(u128, u128)> {
    if x >= 2f64.powi(63) {
        return None;
    }
    let bits = x.to_bits();
    let biased = ((bits >> 52) & 0x7ff) as i64;
    let mut mantissa = (bits & ((1u64 << 52) - 1)) | (1u64 << 52);
    let mut exponent = biased - 1075;
    while exponent < 0 && mantissa & 1 == 0 {
        mantissa >>= 1;
        exponent += 1;
    }
    if exponent >= 0 {
        Some(((mantissa as u128) << exponent, 1))
    } else {
        Some((mantissa as u128, 1u128 << (-exponent)))
    }
}
