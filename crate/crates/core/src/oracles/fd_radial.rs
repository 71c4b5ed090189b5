use alloc::vec::Vec;

#[allow(unused_imports)] // inherent methods shadow it when std is linked
use num_traits::Float;

use super::GridSpec;
use crate::numeric::richardson;
use crate::numeric::tridiag::sturm_count;
use crate::{Error, Result};

/// Deepest `count` bound-state energies of `−R'' − (ν² + 1/4)R/r² = ER` on
/// `[r_min, r_max]` with Dirichlet walls, ordered from the deepest.
///
/// The substitution `r = e^s`, `R = √r u` turns the problem into
/// `−u'' − ν²u = E e^{2s} u`, which is discretized on a uniform `s` grid
/// (`grid.lower = ln r_min`, `grid.upper = ln r_max`). Eigenvalues of the
/// resulting pencil are located by Sturm counts and geometric bisection in
/// `|E|`, then Richardson-extrapolated in `h²` across levels.
pub fn fd_radial_spectrum(nu: f64, grid: GridSpec, count: usize) -> Result<Vec<f64>> {
    crate::error::check_positive("nu", nu)?;
    fd_radial_spectrum_signed(-nu * nu, grid, count)
}

/// As [`fd_radial_spectrum`] with the `1/r²` strength given as
/// `strength = −ν²`; non-negative strength yields no bound states.
pub fn fd_radial_spectrum_signed(strength: f64, grid: GridSpec, count: usize) -> Result<Vec<f64>> {
    grid.validate()?;
    crate::error::check_finite("strength", strength)?;
    if count == 0 {
        return Ok(Vec::new());
    }
    let mut per_level: Vec<Vec<f64>> = Vec::new();
    for level in 0..grid.levels {
        let n = grid.intervals << level;
        let h = (grid.upper - grid.lower) / n as f64;
        let inv_h2 = 1.0 / (h * h);
        let interior = n - 1;
        let diag = alloc::vec![2.0 * inv_h2 + strength; interior];
        let off = alloc::vec![-inv_h2; interior.saturating_sub(1)];
        let weights: Vec<f64> = (1..n).map(|i| (2.0 * (grid.lower + h * i as f64)).exp()).collect();
        let count_below = |e: f64| sturm_count(&diag, &off, Some(&weights), e);
        let available = count_below(0.0);
        if available < count {
            return Err(Error::InsufficientLevels { found: available, needed: count });
        }
        // Generalized Gershgorin bound: E ≥ min_i (strength) / w_i.
        let deepest = strength.min(0.0) / weights[0] * 1.01 - f64::MIN_POSITIVE;
        let mut levels = Vec::with_capacity(count);
        for j in 0..count {
            // Walk toward zero by halving until level j is passed, then
            // bisect geometrically: count_below(lo) ≤ j < count_below(hi).
            let mut lo = deepest;
            let mut hi = 0.5 * lo;
            while count_below(hi) <= j {
                lo = hi;
                hi *= 0.5;
                if hi.abs() < f64::MIN_POSITIVE {
                    return Err(Error::InsufficientLevels { found: j, needed: count });
                }
            }
            while lo / hi > 1.0 + 1e-14 {
                let mid = -(lo * hi).sqrt();
                if mid <= lo || mid >= hi {
                    break;
                }
                if count_below(mid) > j {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            levels.push(0.5 * (lo + hi));
        }
        per_level.push(levels);
    }
    Ok((0..count)
        .map(|j| {
            let column: Vec<f64> = per_level.iter().map(|v| v[j]).collect();
            richardson(&column, 2).0
        })
        .collect())
}
