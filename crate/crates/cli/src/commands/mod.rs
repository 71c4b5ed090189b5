pub mod phases;
pub mod sweeps;
pub mod verify;

use dsi_core::angular::{Coupling, CouplingPair};

use crate::args::CouplingArgs;
use crate::error::{usage, CliError};

pub fn finite(name: &str, x: f64) -> Result<f64, CliError> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(usage(format!("{name} must be finite, got {x}")))
    }
}

pub fn positive(name: &str, x: f64) -> Result<f64, CliError> {
    if x.is_finite() && x > 0.0 {
        Ok(x)
    } else {
        Err(usage(format!("{name} must be positive and finite, got {x}")))
    }
}

pub fn couplings(args: &CouplingArgs) -> Result<CouplingPair, CliError> {
    Ok(CouplingPair::new(Coupling::from_g(args.g1)?, Coupling::from_g(args.g2)?))
}

/// `n` points from `lo` to `hi` inclusive, geometric.
pub fn geomspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    let ratio = (hi / lo).ln();
    let mut v: Vec<f64> = (0..n).map(|i| lo * (ratio * i as f64 / (n - 1) as f64).exp()).collect();
    v[n - 1] = hi;
    v
}

/// `n` points from `lo` to `hi` inclusive.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}
