//! Bessel functions of imaginary order `iν` at real positive argument.
//!
//! [`bessel_k_imag`] is real-valued and oscillates infinitely often as
//! `x → 0`; the Hankel functions are returned together with their
//! derivatives so that Wronskians can be checked directly.

mod bessel_k;
mod gamma;
mod hankel;

pub use bessel_k::{bessel_k_imag, bessel_k_imag_scaled, bessel_k_imag_small_argument};
pub use gamma::{arg_gamma_one_plus_i, ln_gamma};
pub use hankel::{hankel1_imag_scaled, hankel_imag, hankel_imag_with_derivative, HankelKind};

use crate::{Error, Result};

/// Largest order accepted by the special-function routines.
///
/// Accuracy is about `1e-13` relative up to `ν = 20` and degrades smoothly
/// to roughly `1e-10` at the cap, where the small-argument series loses
/// digits to cancellation near `x ≈ ν`.
pub const NU_MAX: f64 = 60.0;

/// Imaginary order `ν` and real argument `x` of `K_{iν}(x)` or `H_{iν}(x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImagOrderParams {
    pub nu: f64,
    pub x: f64,
}

impl ImagOrderParams {
    pub fn new(nu: f64, x: f64) -> Self {
        Self { nu, x }
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if !(self.nu.is_finite() && self.nu > 0.0 && self.nu <= NU_MAX) {
            return Err(Error::Domain { name: "nu", value: self.nu });
        }
        if !(self.x.is_finite() && self.x > 0.0) {
            return Err(Error::Domain { name: "x", value: self.x });
        }
        Ok(())
    }
}
