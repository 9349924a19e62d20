//! Numerically stable softmax / log-sum-exp primitives.
//!
//! Every normalization in the crate goes through these: rule firing weights,
//! class probabilities, and temperature-softened distributions. The max is
//! subtracted before exponentiation so arbitrarily negative log-firing values
//! (products of many Gaussian memberships) stay well-behaved.

use crate::math;
use alloc::vec;
use alloc::vec::Vec;

/// log(sum(exp(x_i))) without overflow. Returns -inf for an empty slice.
pub fn log_sum_exp(xs: &[f64]) -> f64 {
    let max = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !max.is_finite() {
        return max;
    }
    let sum: f64 = xs.iter().map(|&x| math::exp(x - max)).sum();
    max + math::ln(sum)
}

/// Writes softmax(xs) into `out`. Entries sum to 1 for any finite input.
pub fn softmax_into(xs: &[f64], out: &mut [f64]) {
    debug_assert_eq!(xs.len(), out.len());
    let max = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut sum = 0.0;
    for (o, &x) in out.iter_mut().zip(xs) {
        let e = math::exp(x - max);
        *o = e;
        sum += e;
    }
    let inv = 1.0 / sum;
    for o in out.iter_mut() {
        *o *= inv;
    }
}

pub fn softmax(xs: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; xs.len()];
    softmax_into(xs, &mut out);
    out
}

/// Writes log(softmax(xs)) into `out`; stable for large-magnitude logits.
pub fn log_softmax_into(xs: &[f64], out: &mut [f64]) {
    debug_assert_eq!(xs.len(), out.len());
    let lse = log_sum_exp(xs);
    for (o, &x) in out.iter_mut().zip(xs) {
        *o = x - lse;
    }
}

/// Index of the largest entry; first index wins ties.
pub fn argmax(xs: &[f64]) -> usize {
    let mut best = 0;
    for (i, &x) in xs.iter().enumerate().skip(1) {
        if x > xs[best] {
            best = i;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn softmax_sums_to_one_under_extreme_logits() {
        let xs = [-1000.0, -1001.0, -999.5, 0.0, 700.0];
        let p = softmax(&xs);
        assert_relative_eq!(p.iter().sum::<f64>(), 1.0, epsilon = 1e-12);
        assert!(p.iter().all(|&v| (0.0..=1.0).contains(&v)));
        assert_eq!(argmax(&p), 4);
    }

    #[test]
    fn log_sum_exp_matches_direct_sum_when_safe() {
        let xs = [0.3, -1.2, 2.0];
        let direct = xs.iter().map(|x| x.exp()).sum::<f64>().ln();
        assert_relative_eq!(log_sum_exp(&xs), direct, epsilon = 1e-12);
    }

    #[test]
    fn log_softmax_is_shift_invariant() {
        let xs = [1.0, 2.0, 3.0];
        let shifted: Vec<f64> = xs.iter().map(|x| x + 123.0).collect();
        let mut a = vec![0.0; 3];
        let mut b = vec![0.0; 3];
        log_softmax_into(&xs, &mut a);
        log_softmax_into(&shifted, &mut b);
        for (x, y) in a.iter().zip(&b) {
            assert_relative_eq!(x, y, epsilon = 1e-12);
        }
    }

    #[test]
    fn argmax_prefers_first_on_ties() {
        assert_eq!(argmax(&[0.5, 0.5, 0.1]), 0);
    }
}
