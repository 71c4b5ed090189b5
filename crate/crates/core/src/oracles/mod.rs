//! Independent reference solvers used to validate the main routines.
//!
//! None of these share code paths with the solvers they check: the Bessel
//! oracle integrates the defining cosine integral in double-double
//! arithmetic, the eigenvalue oracles are finite-difference discretizations
//! solved by Sturm bisection, and the overlap oracle is a windowed adaptive
//! quadrature.

mod bessel_quadrature;
mod dd;
mod fd_angular;
mod fd_radial;
mod overlap;

pub use bessel_quadrature::{quadrature_bessel_k, QuadratureValue};
pub use dd::Dd;
pub use fd_angular::fd_angular_eigenvalues;
pub use fd_radial::{fd_radial_spectrum, fd_radial_spectrum_signed};
pub use overlap::{overlap_quadrature, OverlapEstimate};

use crate::{Error, Result};

/// Uniform grid on `[lower, upper]` with `intervals` cells at the coarsest
/// level, refined `levels` times by halving for Richardson extrapolation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub lower: f64,
    pub upper: f64,
    pub intervals: usize,
    pub levels: usize,
}

impl GridSpec {
    pub fn new(lower: f64, upper: f64, intervals: usize, levels: usize) -> Result<Self> {
        let g = Self { lower, upper, intervals, levels };
        g.validate()?;
        Ok(g)
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if !(self.lower.is_finite() && self.upper.is_finite() && self.lower < self.upper) {
            return Err(Error::InvalidGrid("bounds must be finite and increasing"));
        }
        if self.intervals < 4 {
            return Err(Error::InvalidGrid("at least four intervals are needed"));
        }
        if self.levels == 0 || self.levels > 12 {
            return Err(Error::InvalidGrid("levels must lie in 1..=12"));
        }
        Ok(())
    }
}
