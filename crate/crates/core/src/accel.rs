//! Polynomial extrapolation of truncated sums in `1/M`.
//!
//! For real integer exponents ≥ 2 the truncation error of every series in
//! this crate has an asymptotic expansion in integer powers of `1/M`, so the
//! values at `M/16, M/8, M/4, M/2, M` determine the limit to high order.

use num_complex::Complex64;

/// Number of halvings below the requested truncation.
pub const LEVELS: u32 = 4;

/// Smallest `M` accepted for extrapolation; the coarsest level is `M >> LEVELS`.
pub const MIN_M: u64 = 8 << LEVELS;

/// Truncation points used for extrapolation, ascending, ending at `m`.
pub fn checkpoints(m: u64) -> Vec<u64> {
    (0..=LEVELS).rev().map(|k| m >> k).collect()
}

/// True when every exponent is a real integer ≥ 2.
pub fn applicable<'a>(exps: impl IntoIterator<Item = &'a Complex64>) -> bool {
    exps.into_iter().all(|s| s.im == 0.0 && s.re.fract() == 0.0 && s.re >= 2.0)
}

fn lagrange_at_zero(h: &[f64]) -> Vec<f64> {
    (0..h.len())
        .map(|i| {
            (0..h.len())
                .filter(|&j| j != i)
                .map(|j| h[j] / (h[j] - h[i]))
                .product()
        })
        .collect()
}

fn combine(w: &[f64], v: &[Complex64]) -> Complex64 {
    w.iter().zip(v).map(|(w, v)| v * *w).sum()
}

/// Extrapolates `values[i]` (the truncation at `ms[i]`) to `M = ∞`.
///
/// Returns the extrapolated value and an error estimate: the spread against
/// the two lower-order extrapolations that omit the coarsest or the finest
/// point, plus the floating rounding of the partial sums amplified by the
/// extrapolation weights.
pub fn extrapolate(ms: &[u64], values: &[Complex64]) -> (Complex64, f64) {
    assert_eq!(ms.len(), values.len());
    assert!(ms.len() >= 3);
    let h: Vec<f64> = ms.iter().map(|&m| 1.0 / m as f64).collect();
    let n = h.len();
    let w = lagrange_at_zero(&h);
    let best = combine(&w, values);
    let without_coarse = combine(&lagrange_at_zero(&h[1..]), &values[1..]);
    let without_fine = combine(&lagrange_at_zero(&h[..n - 1]), &values[..n - 1]);
    let scale = values.iter().map(|v| v.norm()).fold(0.0, f64::max);
    let rounding: f64 = w
        .iter()
        .zip(ms)
        .map(|(w, &m)| w.abs() * (m as f64) * f64::EPSILON * scale.max(1.0))
        .sum();
    let est = (best - without_coarse).norm() + (best - without_fine).norm() + rounding;
    (best, est)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_for_polynomials_in_inverse_m() {
        let ms = checkpoints(320);
        let f = |m: u64| {
            let h = 1.0 / m as f64;
            Complex64::new(2.5 + 3.0 * h - 7.0 * h * h + h * h * h, 0.0)
        };
        let vals: Vec<_> = ms.iter().map(|&m| f(m)).collect();
        let (v, est) = extrapolate(&ms, &vals);
        assert!((v.re - 2.5).abs() < 1e-10, "{v}");
        assert!(est < 1e-9);
    }

    #[test]
    fn basel_partial_sums() {
        let ms = checkpoints(2000);
        let mut vals = Vec::new();
        let mut acc = 0.0;
        let mut k = 0;
        for n in 1..=2000u64 {
            acc += 1.0 / (n * n) as f64;
            if n == ms[k] {
                vals.push(Complex64::new(acc, 0.0));
                k += 1;
                if k == ms.len() {
                    break;
                }
            }
        }
        let (v, est) = extrapolate(&ms, &vals);
        let exact = std::f64::consts::PI.powi(2) / 6.0;
        assert!((v.re - exact).abs() <= est);
        assert!(est < 1e-9, "{est}");
    }

    #[test]
    fn applicability() {
        assert!(applicable(&[Complex64::new(2.0, 0.0), Complex64::new(3.0, 0.0)]));
        assert!(!applicable(&[Complex64::new(1.0, 0.0)]));
        assert!(!applicable(&[Complex64::new(2.5, 0.0)]));
    }
}
