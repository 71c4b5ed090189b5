use alloc::vec::Vec;
use core::f64::consts::SQRT_2;

use super::GridSpec;
use crate::angular::{Coupling, CouplingPair};
use crate::numeric::richardson;
use crate::numeric::tridiag::lowest_eigenvalues;
use crate::{Error, Result, SECTOR_ANGLE};

/// Lowest `count` eigenvalues of `−Θ'' = λΘ` on the sector from a
/// second-order finite-difference discretization.
///
/// Robin walls use a ghost-point closure (`Θ'(0) = Θ(0)/g₁`,
/// `Θ'(L) = −Θ(L)/g₂`), Dirichlet walls drop the boundary node. The matrix is
/// symmetrized by rescaling the boundary unknowns, solved by Sturm bisection
/// at every refinement level, and Richardson-extrapolated in `h²`.
pub fn fd_angular_eigenvalues(couplings: &CouplingPair, grid: GridSpec, count: usize) -> Result<Vec<f64>> {
    grid.validate()?;
    if (grid.lower - 0.0).abs() > 1e-14 || (grid.upper - SECTOR_ANGLE).abs() > 1e-14 {
        return Err(Error::InvalidGrid("angular grid must span [0, π/3]"));
    }
    let mut per_level: Vec<Vec<f64>> = Vec::new();
    for level in 0..grid.levels {
        let n = grid.intervals << level;
        let (diag, off) = assemble(couplings, n);
        if diag.len() < count {
            return Err(Error::InvalidGrid("fewer grid points than requested eigenvalues"));
        }
        let h2 = {
            let h = SECTOR_ANGLE / n as f64;
            h * h
        };
        per_level.push(lowest_eigenvalues(&diag, &off, count, 1e-13 / h2));
    }
    Ok((0..count)
        .map(|j| {
            let column: Vec<f64> = per_level.iter().map(|v| v[j]).collect();
            richardson(&column, 2).0
        })
        .collect())
}

/// Symmetric tridiagonal discretization of `−d²/dθ²` with `n` cells.
fn assemble(c: &CouplingPair, n: usize) -> (Vec<f64>, Vec<f64>) {
    let h = SECTOR_ANGLE / n as f64;
    let inv_h2 = 1.0 / (h * h);
    // Unknowns at nodes 0..=n; Robin ends keep their node.
    let left_robin = robin_rate(c.left);
    let right_robin = robin_rate(c.right);
    let first = if left_robin.is_some() { 0 } else { 1 };
    let last = if right_robin.is_some() { n } else { n - 1 };
    let m = last - first + 1;
    let mut diag = alloc::vec![2.0 * inv_h2; m];
    let mut off = alloc::vec![-inv_h2; m - 1];
    if let Some(rate) = left_robin {
        // Ghost node Θ_{−1} = Θ_1 − 2hΘ_0/g; rescaling Θ_0 by √2 makes the
        // row symmetric with off-diagonal −√2/h².
        diag[0] = 2.0 * (1.0 + h * rate) * inv_h2;
        off[0] = -SQRT_2 * inv_h2;
    }
    if let Some(rate) = right_robin {
        diag[m - 1] = 2.0 * (1.0 + h * rate) * inv_h2;
        off[m - 2] = -SQRT_2 * inv_h2;
    }
    (diag, off)
}

/// `1/g` of a Robin wall (zero for Neumann), or `None` for Dirichlet.
fn robin_rate(c: Coupling) -> Option<f64> {
    match c {
        Coupling::Neumann => Some(0.0),
        Coupling::Finite(0.0) => None,
        Coupling::Finite(g) => Some(1.0 / g),
    }
}
