use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // inherent methods shadow it when std is linked
use num_traits::Float;

use crate::numeric::neville_to_zero;
use crate::numeric::quadrature::{integrate, QuadOptions};
use crate::{Error, Result};

/// Enough panels for a few thousand oscillations per window.
const MAX_INTERVALS: usize = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OverlapEstimate {
    pub value: Complex64,
    /// Quadrature error plus the spread of the window extrapolation.
    pub error: f64,
}

/// `∫₀^∞ conj(f(r)) g(r) dr`, evaluated in `s = ln r` on
/// `[r_max e^{−60}, r_max]`.
///
/// An Abel factor `e^{−εr}` with `ε = 1/(2r_max), 1/(4r_max), …` tames slowly
/// decaying integrands; the windowed values are extrapolated to `ε → 0`.
/// For integrands that decay well inside `r_max` the window is inert.
pub fn overlap_quadrature<F, G>(f: F, g: G, r_max: f64) -> Result<OverlapEstimate>
where
    F: Fn(f64) -> Result<Complex64>,
    G: Fn(f64) -> Result<Complex64>,
{
    crate::error::check_positive("r_max", r_max)?;
    let s_hi = r_max.ln();
    let s_lo = s_hi - 60.0;
    let eps0 = 0.5 / r_max;
    let mut eps = Vec::new();
    let mut values = Vec::new();
    let mut quad_error: f64 = 0.0;
    for j in 0..4 {
        let e = eps0 / f64::from(1 << j);
        let integrand = |s: f64| -> Result<Complex64> {
            let r = s.exp();
            Ok(f(r)?.conj() * g(r)? * (r * (-e * r).exp()))
        };
        let res = integrate(
            integrand,
            s_lo,
            s_hi,
            QuadOptions { abs_tol: 1e-13, rel_tol: 1e-12, max_intervals: MAX_INTERVALS },
        )?;
        quad_error = quad_error.max(res.error);
        eps.push(e);
        values.push(res.value);
    }
    let (value, spread) = neville_to_zero(&eps, &values);
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(Error::NoConvergence("overlap quadrature"));
    }
    Ok(OverlapEstimate { value, error: quad_error + spread })
}
