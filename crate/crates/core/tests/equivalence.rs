//! The fast path against direct DFT sums.

use fracspec::oracle::{dft_at_fractional_period, dft_full, power_at_fractional_period};
use fracspec::period::RationalPeriod;
use fracspec::{congruence_derivative, fps, fps_at, Signal};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

fn random_signal(rng: &mut ChaCha8Rng, m: usize) -> Signal {
    Signal::new((0..m).map(|_| rng.sample(StandardNormal)).collect()).unwrap()
}

fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn fps_matches_direct_sum_on_truncated_signal() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst = 0.0f64;
    for _ in 0..60 {
        let m = rng.random_range(2..=300);
        let x = random_signal(&mut rng, m);
        for l in 2..=m.min(40) {
            let truncated = x.truncated((m / l) * l);
            for k in (1..l).filter(|&k| gcd(l, k) == 1) {
                let p = RationalPeriod::new(l, k).unwrap();
                let fast = fps(&x, p).unwrap();
                let slow = power_at_fractional_period(&truncated, l, k).unwrap();
                let e = rel_err(fast, slow);
                worst = worst.max(e);
                assert!(e <= 1e-9, "m={m} l={l} k={k}: {fast} vs {slow}");
            }
        }
    }
    eprintln!("worst relative error {worst:e}");
}

#[test]
fn derivative_dft_equals_signal_dft_at_scaled_bin() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (l, n) in [(3usize, 4usize), (4, 5), (7, 3), (10, 6), (12, 2)] {
        let m = l * n;
        let x = random_signal(&mut rng, m);
        let y = congruence_derivative(&x, l).unwrap();
        let y_bins = dft_full(y.values()).unwrap();
        let x_bins = dft_full(x.values()).unwrap();
        for k in 1..l {
            let direct = dft_at_fractional_period(&x, l, k).unwrap();
            let scale = x_bins[k * n].norm_sqr().sqrt().max(1.0);
            for other in [direct, x_bins[k * n]] {
                assert!(
                    (y_bins[k].re - other.re).abs() <= 1e-9 * scale,
                    "l={l} k={k}"
                );
                assert!(
                    (y_bins[k].im - other.im).abs() <= 1e-9 * scale,
                    "l={l} k={k}"
                );
            }
            // Conjugate symmetry of X(kn) and X((l-k)n).
            let mirror = x_bins[(l - k) * n].conj();
            assert!((x_bins[k * n].re - mirror.re).abs() <= 1e-12 * scale);
            assert!((x_bins[k * n].im - mirror.im).abs() <= 1e-12 * scale);
        }
    }
}

#[test]
fn unreduced_fraction_agrees_on_shared_truncation() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..200 {
        let l_reduced = rng.random_range(2..=12);
        let k_reduced = rng.random_range(1..l_reduced);
        if gcd(l_reduced, k_reduced) != 1 {
            continue;
        }
        let d = rng.random_range(2..=4);
        let (l, k) = (l_reduced * d, k_reduced * d);
        let m = rng.random_range(l..=200.max(l));
        let x = random_signal(&mut rng, m);
        let shared = x.truncated((m / l) * l);
        let unreduced = fps_at(&shared, l, k).unwrap();
        let reduced = fps_at(&shared, l_reduced, k_reduced).unwrap();
        assert!(
            rel_err(unreduced, reduced) <= 1e-9,
            "{l}/{k} vs {l_reduced}/{k_reduced}"
        );
    }
}

#[test]
fn frozen_small_cases() {
    let x = Signal::new(vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0]).unwrap();
    let p = RationalPeriod::new(3, 1).unwrap();
    // |X(2)|² of the length-6 DFT: Y(1) = -3 + i√3.
    let x_bins = dft_full(x.values()).unwrap();
    assert!((x_bins[2].norm_sqr() - 12.0).abs() < 1e-12);
    assert!((fps(&x, p).unwrap() - 12.0).abs() < 1e-12);
}
