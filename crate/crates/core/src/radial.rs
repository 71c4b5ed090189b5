//! Radial problem in a subcritical channel: the geometric bound-state tower,
//! the S-matrix, and the radial wavefunctions.
//!
//! With `ν = √(λ_c − λ)` the radial equation reduces to
//! `−R'' − (ν² + 1/4) R / r² = E R`, whose regular-at-infinity solutions are
//! `√r K_{iν}(κr)` and `√r H_{iν}(kr)`. The scale `κ*` fixes the self-adjoint
//! extension.

use core::f64::consts::{FRAC_PI_4, PI};

use alloc::vec::Vec;
use num_complex::Complex64;
#[allow(unused_imports)] // inherent methods shadow it when std is linked
use num_traits::Float;

use crate::numeric::neville_to_zero;
use crate::special::{bessel_k_imag_scaled, hankel1_imag_scaled, ImagOrderParams};
use crate::{Error, Result};

/// `λ_c = −(n − 3)²/4`.
pub fn critical_lambda(n: usize) -> f64 {
    let d = n as f64 - 3.0;
    -0.25 * d * d
}

/// A subcritical channel of the `n`-body problem with three-body scale `κ*`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelParams {
    pub n: usize,
    pub lambda: f64,
    pub kappa_star: f64,
    nu: f64,
}

impl ChannelParams {
    pub fn new(n: usize, lambda: f64, kappa_star: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewParticles(n));
        }
        crate::error::check_finite("lambda", lambda)?;
        crate::error::check_positive("kappa_star", kappa_star)?;
        let critical = critical_lambda(n);
        if lambda >= critical {
            return Err(Error::NotSubcritical { lambda, critical });
        }
        Ok(Self { n, lambda, kappa_star, nu: (critical - lambda).sqrt() })
    }

    /// Three-body channel with index `ν`.
    pub fn three_body(nu: f64, kappa_star: f64) -> Result<Self> {
        crate::error::check_positive("nu", nu)?;
        Self::new(3, -nu * nu, kappa_star)
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }
}

/// Level `ℓ` of the tower `κ_ℓ = κ* e^{−ℓπ/ν}`, `E = −κ²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundState {
    pub ell: i64,
    pub kappa: f64,
    pub energy: f64,
    /// `|N|² = κ sinh(νπ)/ν`, normalizing `N √(2κr/π) K_{iν}(κr)`.
    pub norm_sq: f64,
}

pub fn bound_state(p: &ChannelParams, ell: i64) -> Result<BoundState> {
    let nu = p.nu;
    let ln_kappa = p.kappa_star.ln() - ell as f64 * PI / nu;
    let max_ln = f64::MAX.ln();
    if 2.0 * ln_kappa > max_ln {
        return Err(Error::Overflow);
    }
    if 2.0 * ln_kappa < f64::MIN_POSITIVE.ln() {
        return Err(Error::Underflow);
    }
    let ln_sinh = nu * PI + (-(-2.0 * nu * PI).exp_m1()).ln() - 2f64.ln();
    let ln_norm = ln_kappa + ln_sinh - nu.ln();
    if ln_norm > max_ln {
        return Err(Error::Overflow);
    }
    if ln_norm < f64::MIN_POSITIVE.ln() {
        return Err(Error::Underflow);
    }
    let kappa = ln_kappa.exp();
    Ok(BoundState { ell, kappa, energy: -kappa * kappa, norm_sq: ln_norm.exp() })
}

/// `R_κ(r) = N √(2κr/π) K_{iν}(κr)`; decays to exactly zero once it drops
/// below the smallest normal double.
pub fn bound_radial_wavefunction(p: &ChannelParams, state: &BoundState, r: f64) -> Result<f64> {
    crate::error::check_positive("r", r)?;
    let x = state.kappa * r;
    let scaled = bessel_k_imag_scaled(ImagOrderParams::new(p.nu, x))?;
    let value = state.norm_sq.sqrt() * (2.0 * x / PI).sqrt() * scaled * (-x).exp();
    Ok(if value.abs() < f64::MIN_POSITIVE { 0.0 } else { value })
}

/// `S(k) = i sinh(νπ/2 − iν ln(k/κ*)) / sinh(νπ/2 + iν ln(k/κ*))` for real
/// `k > 0`, unimodular by construction.
pub fn s_matrix(p: &ChannelParams, k: f64) -> Result<Complex64> {
    crate::error::check_positive("k", k)?;
    let a = 0.5 * p.nu * PI;
    let b = p.nu * (k / p.kappa_star).ln();
    // sinh(a + ib) e^{−a}
    let damp = (-2.0 * a).exp();
    let d = Complex64::new(0.5 * (1.0 - damp) * b.cos(), 0.5 * (1.0 + damp) * b.sin());
    Ok(Complex64::i() * d.conj() / d)
}

/// Analytic continuation of [`s_matrix`] to complex `k` off the negative
/// real axis.
pub fn s_matrix_complex(p: &ChannelParams, k: Complex64) -> Result<Complex64> {
    if !(k.re.is_finite() && k.im.is_finite()) || k.norm() == 0.0 {
        return Err(Error::Domain { name: "k", value: k.norm() });
    }
    let a = Complex64::new(0.5 * p.nu * PI, 0.0);
    let l = (k / p.kappa_star).ln() * Complex64::new(0.0, p.nu);
    Ok(Complex64::i() * (a - l).sinh() / (a + l).sinh())
}

/// `R_k(r) = √(πkr/2) (e^{−iπ/4} conj(h) + S e^{iπ/4} h)` with
/// `h = e^{−νπ/2} H^{(1)}_{iν}(kr)`; tends to `e^{−ikr} + S e^{ikr}`.
pub fn scattering_radial_wavefunction(p: &ChannelParams, k: f64, r: f64) -> Result<Complex64> {
    crate::error::check_positive("r", r)?;
    let s = s_matrix(p, k)?;
    let x = k * r;
    let (h, _) = hankel1_imag_scaled(ImagOrderParams::new(p.nu, x))?;
    let phase = Complex64::from_polar(1.0, FRAC_PI_4);
    Ok((phase.conj() * h.conj() + s * phase * h) * (0.5 * PI * x).sqrt())
}

/// Numerical residue of `S` at `k = iκ_ℓ` next to the analytic value
/// `i κ_ℓ sinh(νπ)/ν = i |N|²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidueEstimate {
    pub numerical: Complex64,
    pub analytic: Complex64,
    pub relative_error: f64,
    /// Largest relative disagreement between approach directions.
    pub spread: f64,
}

/// Extrapolates `(k − iκ_ℓ) S(k)` to the pole along several rays
/// `k = iκ_ℓ (1 + δ e^{iα})`, `δ → 0`.
pub fn residue_check(p: &ChannelParams, ell: i64) -> Result<ResidueEstimate> {
    let state = bound_state(p, ell)?;
    let pole = Complex64::new(0.0, state.kappa);
    let analytic = Complex64::new(0.0, state.norm_sq);
    let mut estimates: Vec<Complex64> = Vec::new();
    for alpha in [0.0, FRAC_PI_4, -FRAC_PI_4] {
        let dir = Complex64::from_polar(1.0, alpha);
        let deltas: Vec<f64> = (0..8).map(|j| 0.04 / f64::from(1 << j)).collect();
        let values = deltas
            .iter()
            .map(|&d| {
                let step = pole * dir * d;
                Ok(step * s_matrix_complex(p, pole + step)?)
            })
            .collect::<Result<Vec<_>>>()?;
        estimates.push(neville_to_zero(&deltas, &values).0);
    }
    let numerical = estimates[0];
    let spread = estimates.iter().map(|e| (e - numerical).norm() / numerical.norm()).fold(0.0, f64::max);
    let relative_error = (numerical - analytic).norm() / analytic.norm();
    Ok(ResidueEstimate { numerical, analytic, relative_error, spread })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_is_i_at_the_scale() {
        let p = ChannelParams::three_body(1.3, 2.0).unwrap();
        let s = s_matrix(&p, 2.0).unwrap();
        assert!((s - Complex64::i()).norm() < 1e-15);
    }

    #[test]
    fn real_and_complex_forms_agree() {
        let p = ChannelParams::three_body(0.8, 1.0).unwrap();
        for k in [0.01, 0.3, 1.0, 7.0, 1e4] {
            let a = s_matrix(&p, k).unwrap();
            let b = s_matrix_complex(&p, Complex64::new(k, 0.0)).unwrap();
            assert!((a - b).norm() < 1e-13);
        }
    }
}
