use crate::counter::{OpCounter, Uncounted};
use crate::error::{Error, Result};
use crate::signal::Signal;

/// Length-`l` fold of a signal: `y[t] = sum_j x[j*l + t]` over `n = floor(m/l)` periods.
#[derive(Debug, Clone, PartialEq)]
pub struct CongruenceDerivative {
    values: Vec<f64>,
    fold_count: usize,
}

impl CongruenceDerivative {
    /// Wraps an already folded sequence, e.g. one computed elsewhere.
    pub fn from_values(values: Vec<f64>, fold_count: usize) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySignal);
        }
        Ok(Self {
            values,
            fold_count: fold_count.max(1),
        })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `l`, the period the signal was folded on.
    pub fn period(&self) -> usize {
        self.values.len()
    }

    /// `n`, the number of whole periods summed into each element.
    pub fn fold_count(&self) -> usize {
        self.fold_count
    }

    /// `n * l`, the number of source samples that contributed.
    pub fn effective_length(&self) -> usize {
        self.fold_count * self.values.len()
    }
}

pub fn congruence_derivative(x: &Signal, l: usize) -> Result<CongruenceDerivative> {
    congruence_derivative_with(x, l, &mut Uncounted)
}

/// Samples past `floor(m/l) * l` are dropped.
pub fn congruence_derivative_with<C: OpCounter>(
    x: &Signal,
    l: usize,
    counter: &mut C,
) -> Result<CongruenceDerivative> {
    let m = x.len();
    if l == 0 || l > m {
        return Err(Error::DenominatorOutOfRange { l, m });
    }
    let fold_count = m / l;
    let mut chunks = x.values()[..fold_count * l].chunks_exact(l);
    let mut values = chunks.next().map(<[f64]>::to_vec).unwrap_or_default();
    for chunk in chunks {
        for (acc, &v) in values.iter_mut().zip(chunk) {
            *acc = counter.add(*acc, v);
        }
    }
    Ok(CongruenceDerivative { values, fold_count })
}

/// Circular autocorrelation `z[l,q] = sum_t y[t] * y[(t+q) mod l]`.
pub fn shift_sum(y: &CongruenceDerivative, q: usize) -> Result<f64> {
    let l = y.period();
    if q >= l {
        return Err(Error::LagOutOfRange { q, l });
    }
    Ok(circular_lag(y.values(), q, &mut Uncounted))
}

fn circular_lag<C: OpCounter>(y: &[f64], q: usize, counter: &mut C) -> f64 {
    let l = y.len();
    let mut acc = 0.0;
    for t in 0..l - q {
        acc = counter.mul_acc(acc, y[t], y[t + q]);
    }
    for t in l - q..l {
        acc = counter.mul_acc(acc, y[t], y[t + q - l]);
    }
    acc
}

/// Shift sums for the lags the closed form needs.
///
/// `sums[q]` holds `z[l,q]` for `q = 0..=(l-1)/2` when `l` is odd and
/// `q = 0..l/2` when `l` is even. For even `l` the half-period product
/// `sum_{t < l/2} y[t] * y[t + l/2]` is kept separately; it equals `z[l,l/2] / 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftSums {
    l: usize,
    sums: Vec<f64>,
    half_sum: Option<f64>,
}

impl ShiftSums {
    pub fn period(&self) -> usize {
        self.l
    }

    pub fn sums(&self) -> &[f64] {
        &self.sums
    }

    pub fn half_sum(&self) -> Option<f64> {
        self.half_sum
    }

    /// `z[l,q]` for any lag in `0..l`, using `z[l,q] = z[l,l-q]`.
    pub fn lag(&self, q: usize) -> Result<f64> {
        let l = self.l;
        if q >= l {
            return Err(Error::LagOutOfRange { q, l });
        }
        let q = q.min(l - q);
        match self.half_sum {
            Some(h) if q == l / 2 => Ok(2.0 * h),
            _ => Ok(self.sums[q]),
        }
    }
}

pub fn all_shift_sums(y: &CongruenceDerivative) -> ShiftSums {
    all_shift_sums_with(y, &mut Uncounted)
}

/// Uses `l * (l + 1) / 2` multiplications for either parity of `l`.
pub fn all_shift_sums_with<C: OpCounter>(y: &CongruenceDerivative, counter: &mut C) -> ShiftSums {
    let values = y.values();
    let l = values.len();
    let full_lags = if l % 2 == 1 { (l - 1) / 2 } else { l / 2 - 1 };
    let sums = (0..=full_lags)
        .map(|q| circular_lag(values, q, counter))
        .collect();
    let half_sum = l.is_multiple_of(2).then(|| {
        let half = l / 2;
        let mut acc = 0.0;
        for t in 0..half {
            acc = counter.mul_acc(acc, values[t], values[t + half]);
        }
        acc
    });
    ShiftSums { l, sums, half_sum }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counter::OpCounts;

    fn signal(v: &[f64]) -> Signal {
        Signal::new(v.to_vec()).unwrap()
    }

    fn brute_lag(y: &[f64], q: usize) -> f64 {
        let l = y.len();
        (0..l).map(|t| y[t] * y[(t + q) % l]).sum()
    }

    #[test]
    fn folds_whole_periods() {
        let y = congruence_derivative(&signal(&[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]), 3).unwrap();
        assert_eq!(y.values(), &[5.0, 7.0, 9.0]);
        assert_eq!(y.fold_count(), 2);
        assert_eq!(y.effective_length(), 6);
    }

    #[test]
    fn constant_signal_folds_to_constant() {
        let c = 1.5;
        let y = congruence_derivative(&signal(&[c; 12]), 4).unwrap();
        assert_eq!(y.values(), &[12.0 * c / 4.0; 4]);
    }

    #[test]
    fn trailing_samples_are_truncated() {
        let x: Vec<f64> = (0..10).map(|i| (i * i) as f64 + 0.5).collect();
        let y = congruence_derivative(&signal(&x), 3).unwrap();
        assert_eq!(y.fold_count(), 3);
        assert_eq!(y.effective_length(), 9);
        for t in 0..3 {
            let expected: f64 = (0..3).map(|j| x[j * 3 + t]).sum();
            assert_eq!(y.values()[t], expected);
        }
    }

    #[test]
    fn fold_with_l_equal_m_is_identity() {
        let x = [3.0, -1.0, 2.5];
        let y = congruence_derivative(&signal(&x), 3).unwrap();
        assert_eq!(y.values(), &x);
        assert_eq!(y.fold_count(), 1);
    }

    #[test]
    fn rejects_out_of_range_denominator() {
        let x = signal(&[1.0, 2.0]);
        assert_eq!(
            congruence_derivative(&x, 0),
            Err(Error::DenominatorOutOfRange { l: 0, m: 2 })
        );
        assert_eq!(
            congruence_derivative(&x, 3),
            Err(Error::DenominatorOutOfRange { l: 3, m: 2 })
        );
    }

    #[test]
    fn folding_uses_no_multiplications() {
        let x: Vec<f64> = (0..100).map(|i| i as f64).collect();
        let mut counts = OpCounts::default();
        congruence_derivative_with(&signal(&x), 7, &mut counts).unwrap();
        assert_eq!(counts.multiplications, 0);
        assert_eq!(counts.additions, (14 - 1) * 7);
    }

    #[test]
    fn shift_sum_examples() {
        let y = CongruenceDerivative::from_values(vec![5.0, 7.0, 9.0], 2).unwrap();
        assert_eq!(shift_sum(&y, 0).unwrap(), 155.0);
        assert_eq!(shift_sum(&y, 1).unwrap(), 143.0);
        assert_eq!(shift_sum(&y, 2).unwrap(), 143.0);
        assert_eq!(shift_sum(&y, 3), Err(Error::LagOutOfRange { q: 3, l: 3 }));
    }

    #[test]
    fn shift_sum_is_symmetric_in_lag() {
        let v = vec![0.3, -1.2, 2.2, 0.7, -0.1, 1.9, -2.4, 0.05];
        let y = CongruenceDerivative::from_values(v.clone(), 1).unwrap();
        assert_eq!(shift_sum(&y, 3).unwrap(), brute_lag(&v, 3));
        assert!((shift_sum(&y, 3).unwrap() - shift_sum(&y, 5).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn all_shift_sums_odd_and_even() {
        let y = CongruenceDerivative::from_values(vec![5.0, 7.0, 9.0], 1).unwrap();
        let z = all_shift_sums(&y);
        assert_eq!(z.sums(), &[155.0, 143.0]);
        assert_eq!(z.half_sum(), None);

        let y = CongruenceDerivative::from_values(vec![1.0; 4], 1).unwrap();
        let z = all_shift_sums(&y);
        assert_eq!(z.sums(), &[4.0, 4.0]);
        assert_eq!(z.half_sum(), Some(2.0));
        assert_eq!(z.lag(2).unwrap(), 4.0);
    }

    #[test]
    fn all_shift_sums_match_per_lag_calls() {
        let v: Vec<f64> = (0..12).map(|i| ((i * 7919) % 13) as f64 - 6.0).collect();
        let y = CongruenceDerivative::from_values(v.clone(), 1).unwrap();
        let z = all_shift_sums(&y);
        assert_eq!(z.sums().len(), 6);
        for q in 0..12 {
            assert_eq!(z.lag(q).unwrap(), brute_lag(&v, q), "lag {q}");
        }
        for (q, &s) in z.sums().iter().enumerate() {
            assert_eq!(s, shift_sum(&y, q).unwrap());
        }
    }

    #[test]
    fn shift_sum_multiplication_budget() {
        for l in 1..40usize {
            let y = CongruenceDerivative::from_values(vec![1.0; l], 1).unwrap();
            let mut counts = OpCounts::default();
            all_shift_sums_with(&y, &mut counts);
            assert_eq!(counts.multiplications as usize, l * (l + 1) / 2, "l={l}");
        }
    }
}
