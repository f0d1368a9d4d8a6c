//! Fast fractional period spectrum.
//!
//! `congruence_derivative` folds the signal onto `l` residues using additions
//! only. `all_shift_sums` takes the circular autocorrelation of the folded
//! sequence for the first half of the lags. `fps` weights those lags by
//! cosines looked up from the `k = 1` coefficient table.

mod coefficients;
mod derivative;
mod power;

pub use coefficients::{
    coefficient_lookup, coefficient_table, precompute_coefficient_tables, CoefficientTable,
    DEFAULT_EAGER_BOUND,
};
pub use derivative::{
    all_shift_sums, all_shift_sums_with, congruence_derivative, congruence_derivative_with,
    shift_sum, CongruenceDerivative, ShiftSums,
};
pub use power::{
    fps, fps_all, fps_all_with, fps_at, fps_at_with, fps_from_shift_sums, scan, SpectrumRow,
};
