//! Small numerical building blocks shared by the solvers and the oracles.

pub mod quadrature;
pub mod roots;
pub mod tridiag;

use alloc::vec::Vec;
use core::ops::{Add, Mul, Sub};

/// Neville extrapolation of samples `(x_i, y_i)` to `x = 0`.
///
/// Returns the final estimate and the difference between the two highest
/// orders, which serves as an error indicator.
pub fn neville_to_zero<V>(xs: &[f64], ys: &[V]) -> (V, f64)
where
    V: Copy + Add<Output = V> + Sub<Output = V> + Mul<f64, Output = V> + Magnitude,
{
    assert_eq!(xs.len(), ys.len());
    assert!(!xs.is_empty());
    let mut p: Vec<V> = ys.to_vec();
    let n = xs.len();
    let mut err = f64::INFINITY;
    for m in 1..n {
        let prev_top = p[n - 1];
        for i in (m..n).rev() {
            let (xa, xb) = (xs[i - m], xs[i]);
            p[i] = p[i] + (p[i] - p[i - 1]) * (xb / (xa - xb));
        }
        err = (p[n - 1] - prev_top).magnitude();
    }
    (p[n - 1], err)
}

/// Richardson tableau for a sequence computed at step sizes `h, h/2, h/4, ...`
/// with an error expansion in powers of `h^order_step`.
pub fn richardson(values: &[f64], order_step: i32) -> (f64, f64) {
    assert!(!values.is_empty());
    let mut row: Vec<f64> = values.to_vec();
    let base = libm::pow(2.0, f64::from(order_step));
    let mut factor = base;
    let mut err = f64::INFINITY;
    for _ in 1..values.len() {
        let next: Vec<f64> = row.windows(2).map(|w| w[1] + (w[1] - w[0]) / (factor - 1.0)).collect();
        err = libm::fabs(next[next.len() - 1] - row[row.len() - 1]);
        row = next;
        factor *= base;
    }
    (row[0], err)
}

/// Absolute size of a scalar, real or complex.
pub trait Magnitude {
    fn magnitude(&self) -> f64;
}

impl Magnitude for f64 {
    fn magnitude(&self) -> f64 {
        libm::fabs(*self)
    }
}

impl Magnitude for num_complex::Complex64 {
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}
