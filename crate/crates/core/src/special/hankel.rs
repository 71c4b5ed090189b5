use core::f64::consts::{FRAC_PI_4, PI};

use num_complex::Complex64;
#[allow(unused_imports)] // inherent methods shadow it when std is linked
use num_traits::Float;

use super::{arg_gamma_one_plus_i, ImagOrderParams};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HankelKind {
    First,
    Second,
}

/// `H^{(1,2)}_{iν}(x)`.
pub fn hankel_imag(kind: HankelKind, p: ImagOrderParams) -> Result<Complex64> {
    hankel_imag_with_derivative(kind, p).map(|(h, _)| h)
}

/// `H^{(1,2)}_{iν}(x)` and its `x`-derivative.
///
/// Both kinds follow from `h = e^{−νπ/2} H^{(1)}_{iν}` via
/// `H^{(1)} = e^{νπ/2} h` and `H^{(2)} = e^{−νπ/2} conj(h)`.
pub fn hankel_imag_with_derivative(kind: HankelKind, p: ImagOrderParams) -> Result<(Complex64, Complex64)> {
    let (h, dh) = hankel1_imag_scaled(p)?;
    let (scale, h, dh) = match kind {
        HankelKind::First => ((0.5 * PI * p.nu).exp(), h, dh),
        HankelKind::Second => ((-0.5 * PI * p.nu).exp(), h.conj(), dh.conj()),
    };
    Ok((h * scale, dh * scale))
}

/// `e^{−νπ/2} H^{(1)}_{iν}(x)` and its derivative; both stay of order one
/// for every `ν` and `x ≳ 1`.
pub fn hankel1_imag_scaled(p: ImagOrderParams) -> Result<(Complex64, Complex64)> {
    p.validate()?;
    let (nu, x) = (p.nu, p.x);
    if x <= series_limit(nu) {
        return Ok(series(nu, x));
    }
    if let Some(v) = expansion(nu, x) {
        return Ok(v);
    }
    let mut anchor = 2.0 * x;
    let start = loop {
        if let Some(v) = expansion(nu, anchor) {
            break v;
        }
        anchor *= 2.0;
        if anchor > 1e7 {
            return Err(Error::NoConvergence("Hankel large-argument anchor"));
        }
    };
    integrate(nu, anchor, start, x)
}

fn series_limit(nu: f64) -> f64 {
    6.0 + 0.5 * nu
}

fn series(nu: f64, x: f64) -> (Complex64, Complex64) {
    let z = 0.25 * x * x;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut dsum = Complex64::new(0.0, nu) * term;
    let mut k = 1.0;
    loop {
        term = term * (-z) / (k * Complex64::new(k, nu));
        sum += term;
        dsum += Complex64::new(2.0 * k, nu) * term;
        if term.norm() * (1.0 + 2.0 * k + nu) <= 1e-17 * sum.norm() && k > z.sqrt() {
            break;
        }
        k += 1.0;
    }
    let phase = nu * (0.5 * x).ln() - arg_gamma_one_plus_i(nu);
    let rot = Complex64::from_polar(1.0, phase);
    let w = rot * sum;
    let wd = rot * dsum / x;
    let damp = (-PI * nu).exp();
    let a = (2.0 / (PI * nu * -(-2.0 * PI * nu).exp_m1())).sqrt();
    let (minus, plus) = (a * -(-PI * nu).exp_m1(), a * (1.0 + damp));
    (Complex64::new(minus * w.re, plus * w.im), Complex64::new(minus * wd.re, plus * wd.im))
}

fn expansion(nu: f64, x: f64) -> Option<(Complex64, Complex64)> {
    let mu4 = -4.0 * nu * nu;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut dsum = Complex64::new(-0.5 / x, 1.0);
    let mut k = 1.0f64;
    while k < 2.0 * x {
        let odd = 2.0 * k - 1.0;
        term *= Complex64::new(0.0, (mu4 - odd * odd) / (8.0 * k * x));
        if term.norm() > 1.0 {
            return None;
        }
        sum += term;
        dsum += term * Complex64::new(-(k + 0.5) / x, 1.0);
        if term.norm() <= 1e-17 * sum.norm() {
            let lead = Complex64::from_polar((2.0 / (PI * x)).sqrt(), x - FRAC_PI_4);
            return Some((lead * sum, lead * dsum));
        }
        k += 1.0;
    }
    None
}

/// Taylor-series integration of `x²y'' + xy' + (x² + ν²)y = 0` from `x0`
/// (where `(y, y')` is known) to `target < x0`.
fn integrate(nu: f64, x0: f64, start: (Complex64, Complex64), target: f64) -> Result<(Complex64, Complex64)> {
    let nu2 = nu * nu;
    let (mut y, mut dy) = start;
    let mut x = x0;
    let mut coeffs = [Complex64::new(0.0, 0.0); 160];
    while x > target {
        let omega = (1.0 + nu2 / (x * x)).sqrt();
        let step = (0.3 * x).min(1.5 / omega).min(x - target);
        let hs = -step;
        coeffs[0] = y;
        coeffs[1] = dy;
        let mut val = y + dy * hs;
        let mut der = dy;
        let mut pow = hs;
        let mut small = 0;
        let x2 = x * x;
        let mut converged = false;
        for m in 0..coeffs.len() - 2 {
            let mf = m as f64;
            let mut rhs = coeffs[m + 1] * (x * (mf + 1.0) * (2.0 * mf + 1.0)) + coeffs[m] * (mf * mf + x2 + nu2);
            if m >= 1 {
                rhs += coeffs[m - 1] * (2.0 * x);
            }
            if m >= 2 {
                rhs += coeffs[m - 2];
            }
            let c = -rhs / (x2 * (mf + 2.0) * (mf + 1.0));
            coeffs[m + 2] = c;
            der += c * ((mf + 2.0) * pow);
            pow *= hs;
            let t = c * pow;
            val += t;
            if t.norm() <= 1e-18 * val.norm()
                && (c * ((mf + 2.0) * pow / hs)).norm() <= 1e-18 * der.norm().max(val.norm())
            {
                small += 1;
                if small >= 3 {
                    converged = true;
                    break;
                }
            } else {
                small = 0;
            }
        }
        if !converged {
            return Err(Error::NoConvergence("Taylor integration of the Bessel equation"));
        }
        y = val;
        dy = der;
        x -= step;
    }
    Ok((y, dy))
}
