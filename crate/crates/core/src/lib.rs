//! Few-body physics of one-dimensional particles with contact interactions
//! whose strength scales as `g/x`.
//!
//! The crate covers the three-body problem in hyperspherical form: the angular
//! quantization condition on the sector `[0, π/3]`, the phase diagram of
//! broken continuous scale invariance, the Efimov-like bound-state tower, the
//! two-body-like S-matrix in each subcritical channel, and the imaginary-order
//! Bessel and Hankel functions these need. Independent reference solvers live
//! in [`oracles`].
//!
//! Units: `ħ²/(2m) = 1`, so energies are squared wave numbers.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod angular;
pub mod coordinates;
mod error;
pub mod numeric;
pub mod oracles;
pub mod radial;
pub mod special;
pub mod tolerances;

pub use error::{Error, Result};

/// Opening angle of one ordering sector for three particles.
pub const SECTOR_ANGLE: f64 = core::f64::consts::FRAC_PI_3;
