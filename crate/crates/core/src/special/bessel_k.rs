use core::f64::consts::PI;

use num_complex::Complex64;
#[allow(unused_imports)] // inherent methods shadow it when std is linked
use num_traits::Float;

use super::{arg_gamma_one_plus_i, ImagOrderParams};
use crate::{Error, Result};

/// `K_{iν}(x)` for `ν ∈ (0, NU_MAX]` and `x > 0`.
///
/// Small arguments (`x ≤ max(2, 1.02ν)`) use the ascending series of
/// `I_{±iν}`, large arguments the Hankel expansion once its terms have
/// decayed below `1e-17`, and everything in between a trapezoidal rule along
/// the steepest-descent path of the Schläfli integral.
pub fn bessel_k_imag(p: ImagOrderParams) -> Result<f64> {
    p.validate()?;
    if in_series_region(p.nu, p.x) {
        return Ok(series(p.nu, p.x));
    }
    let scaled = scaled_large(p.nu, p.x)?;
    let log = scaled.ln() - p.x;
    if log < f64::MIN_POSITIVE.ln() {
        return Err(Error::Underflow);
    }
    Ok(log.exp())
}

/// `e^x K_{iν}(x)`, finite for every supported `x`.
pub fn bessel_k_imag_scaled(p: ImagOrderParams) -> Result<f64> {
    p.validate()?;
    if in_series_region(p.nu, p.x) {
        Ok(series(p.nu, p.x) * p.x.exp())
    } else {
        scaled_large(p.nu, p.x)
    }
}

/// Leading small-`x` behaviour
/// `−√(π/(ν sinh νπ)) sin(ν ln(x/2) − arg Γ(1+iν))`.
pub fn bessel_k_imag_small_argument(p: ImagOrderParams) -> Result<f64> {
    p.validate()?;
    let phase = p.nu * (0.5 * p.x).ln() - arg_gamma_one_plus_i(p.nu);
    Ok(-prefactor(p.nu) * phase.sin())
}

fn in_series_region(nu: f64, x: f64) -> bool {
    x <= 2.0 || x <= 1.02 * nu
}

// √(π / (ν sinh νπ)) without overflow
fn prefactor(nu: f64) -> f64 {
    (2.0 * PI / nu).sqrt() * (-0.5 * nu * PI).exp() / (-(-2.0 * nu * PI).exp_m1()).sqrt()
}

fn series(nu: f64, x: f64) -> f64 {
    let z = 0.25 * x * x;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut k = 1.0;
    loop {
        term = term * z / (k * Complex64::new(k, nu));
        sum += term;
        if term.norm() <= 1e-17 * sum.norm() && k > z {
            break;
        }
        k += 1.0;
    }
    let phase = nu * (0.5 * x).ln() - arg_gamma_one_plus_i(nu);
    let rotated = Complex64::from_polar(1.0, phase) * sum;
    -prefactor(nu) * rotated.im
}

fn scaled_large(nu: f64, x: f64) -> Result<f64> {
    if let Some(v) = hankel_expansion(nu, x) {
        return Ok(v);
    }
    steepest_descent(nu, x)
}

/// Large-argument expansion of `e^x K_{iν}(x)`, or `None` when its terms grow
/// above the leading one or fail to reach `1e-17` before diverging.
fn hankel_expansion(nu: f64, x: f64) -> Option<f64> {
    let mu4 = -4.0 * nu * nu;
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut k = 1.0f64;
    while k < 2.0 * x {
        let odd = 2.0 * k - 1.0;
        term *= (mu4 - odd * odd) / (8.0 * k * x);
        if term.abs() > 1.0 {
            return None;
        }
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            return Some((PI / (2.0 * x)).sqrt() * sum);
        }
        k += 1.0;
    }
    None
}

/// `e^x K_{iν}(x) = ∫₀^∞ exp(−x(cosh u cos v − 1) − ν v) du` with
/// `sin v = ν u / (x sinh u)`, valid for `x > ν`.
fn steepest_descent(nu: f64, x: f64) -> Result<f64> {
    let v0 = (nu / x).asin();
    let f = |u: f64| -> f64 {
        let v = if u == 0.0 { v0 } else { (nu * u / (x * u.sinh())).asin() };
        let sh = (0.5 * u).sinh();
        let sv = (0.5 * v).sin();
        let arg = 2.0 * sh * sh * v.cos() - 2.0 * sv * sv;
        (-x * arg - nu * v).exp()
    };
    let tail_sum = |h: f64, offset: f64, stride: f64| -> f64 {
        let mut s = 0.0;
        let mut j = 0.0;
        loop {
            let t = f(h * (offset + stride * j));
            s += t;
            if t <= 1e-19 * s || s == 0.0 && j > 50.0 {
                break s;
            }
            j += 1.0;
        }
    };
    let mut h = 0.2;
    let mut total = h * (0.5 * f(0.0) + tail_sum(h, 1.0, 1.0));
    for level in 0..14 {
        let half = 0.5 * h;
        let refined = 0.5 * total + half * tail_sum(half, 1.0, 2.0);
        let change = (refined - total).abs();
        total = refined;
        h = half;
        if level >= 1 && change <= 1e-10 * total.abs() {
            return Ok(total);
        }
    }
    Err(Error::NoConvergence("steepest-descent quadrature for K_iν"))
}
