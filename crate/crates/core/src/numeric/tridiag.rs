//! Symmetric tridiagonal eigenvalues by Sturm-sequence bisection.

use alloc::vec::Vec;

/// Number of eigenvalues of the pencil `(T, W)` strictly below `x`, where `T`
/// is symmetric tridiagonal with diagonal `diag` and off-diagonal `off`, and
/// `W` is diagonal and positive (`None` means the identity).
pub fn sturm_count(diag: &[f64], off: &[f64], weights: Option<&[f64]>, x: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0;
    for i in 0..diag.len() {
        let w = weights.map_or(1.0, |w| w[i]);
        let e2 = if i == 0 { 0.0 } else { off[i - 1] * off[i - 1] };
        q = diag[i] - x * w - if i == 0 { 0.0 } else { e2 / q };
        if q == 0.0 {
            q = -f64::EPSILON * (diag[i].abs() + (x * w).abs() + f64::MIN_POSITIVE);
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Gershgorin interval containing every eigenvalue of a standard problem.
pub fn gershgorin(diag: &[f64], off: &[f64]) -> (f64, f64) {
    let n = diag.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let r = if i > 0 { off[i - 1].abs() } else { 0.0 } + if i + 1 < n { off[i].abs() } else { 0.0 };
        lo = lo.min(diag[i] - r);
        hi = hi.max(diag[i] + r);
    }
    (lo, hi)
}

/// The `count` lowest eigenvalues of a symmetric tridiagonal matrix,
/// in ascending order, each bisected to absolute width `tol`.
pub fn lowest_eigenvalues(diag: &[f64], off: &[f64], count: usize, tol: f64) -> Vec<f64> {
    let count = count.min(diag.len());
    let (lo0, hi0) = gershgorin(diag, off);
    let pad = 1e-12 * (lo0.abs() + hi0.abs()) + 1e-300;
    (0..count)
        .map(|k| {
            let (mut lo, mut hi) = (lo0 - pad, hi0 + pad);
            while hi - lo > tol.max(4.0 * f64::EPSILON * lo.abs().max(hi.abs())) {
                let mid = 0.5 * (lo + hi);
                if sturm_count(diag, off, None, mid) > k {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            0.5 * (lo + hi)
        })
        .collect()
}
