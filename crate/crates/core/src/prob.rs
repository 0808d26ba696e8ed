//! Shared probability helpers: numerically stable softmax and the crate-wide
//! argmax tie rule.

/// Stable softmax via max subtraction. Output sums to 1 within 1e-9.
pub fn softmax(logits: &[f64]) -> Vec<f64> {
    let max = logits.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let exps: Vec<f64> = logits.iter().map(|&z| (z - max).exp()).collect();
    let sum: f64 = exps.iter().sum();
    exps.into_iter().map(|e| e / sum).collect()
}

/// Stable log-softmax: `z_i - max - ln(sum(exp(z - max)))`.
pub fn log_softmax(scores: &[f64]) -> Vec<f64> {
    let max = scores.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let log_sum: f64 = scores.iter().map(|&z| (z - max).exp()).sum::<f64>().ln();
    scores.iter().map(|&z| z - max - log_sum).collect()
}

/// Index of the maximum value; ties break toward the lowest index.
///
/// This is the single prediction rule shared by every model, so comparisons
/// between models are never tie-break artifacts.
pub fn argmax(values: &[f64]) -> usize {
    assert!(!values.is_empty(), "argmax of empty slice");
    let mut best = 0;
    for (i, &v) in values.iter().enumerate().skip(1) {
        if v > values[best] {
            best = i;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn softmax_of_zeros_is_uniform() {
        let p = softmax(&[0.0, 0.0, 0.0, 0.0]);
        for &v in &p {
            assert!((v - 0.25).abs() < 1e-12);
        }
    }

    #[test]
    fn softmax_sums_to_one_even_for_huge_logits() {
        let p = softmax(&[1e6, -1e6, 500.0, 0.0]);
        assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-9);
        assert!(p.iter().all(|&v| v.is_finite()));
    }

    #[test]
    fn softmax_is_shift_invariant() {
        let a = softmax(&[0.3, -1.2, 2.0, 0.0]);
        let b = softmax(&[100.3, 98.8, 102.0, 100.0]);
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn log_softmax_exponentiates_to_softmax() {
        let scores = [1.0, -0.5, 3.0, 0.25];
        let lp = log_softmax(&scores);
        let p = softmax(&scores);
        for (l, q) in lp.iter().zip(&p) {
            assert!((l.exp() - q).abs() < 1e-12);
        }
    }

    #[test]
    fn argmax_breaks_ties_toward_lowest_index() {
        assert_eq!(argmax(&[1.0, 1.0, 1.0, 1.0]), 0);
        assert_eq!(argmax(&[0.0, 2.0, 2.0, 1.0]), 1);
        assert_eq!(argmax(&[0.0, 0.0, 0.0, 3.0]), 3);
    }
}
