//! Fourier power spectrum at fractional periods.
//!
//! The power of a real series at period `l/k` equals the power of its
//! length-`l` congruence derivative sequence at bin `k`. That power is a
//! quadratic form in the derivative sequence whose coefficients depend only
//! on the lag, so it collapses to a cosine-weighted sum of circular
//! autocorrelations. Cosines for `k = 1` suffice for every `k` through a
//! modular reflection, and are kept in a process-wide cache.
//!
//! ```
//! use fracspec::{fps, RationalPeriod, Signal};
//!
//! let x = Signal::new(vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0]).unwrap();
//! let p = RationalPeriod::new(3, 1).unwrap();
//! assert!((fps(&x, p).unwrap() - 12.0).abs() < 1e-12);
//! ```

pub mod bench;
pub mod counter;
pub mod error;
pub mod mapping;
pub mod oracle;
pub mod period;
pub mod signal;
pub mod simulation;
pub mod spectrum;

pub use counter::{OpCounter, OpCounts, Uncounted};
pub use error::{Error, Result};
pub use period::{resolve_period, RationalPeriod};
pub use signal::Signal;
pub use spectrum::{
    all_shift_sums, coefficient_lookup, coefficient_table, congruence_derivative, fps, fps_all,
    fps_at, scan, shift_sum, CoefficientTable, CongruenceDerivative, ShiftSums, SpectrumRow,
};
