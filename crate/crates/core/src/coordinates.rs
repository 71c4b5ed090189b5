//! Jacobi and hyperspherical coordinates, ordering sectors and the assembly
//! of symmetrized wavefunctions.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // inherent methods shadow it when std is linked
use num_traits::Float;

use crate::{Error, Result};

/// Positions of `n ≥ 2` identical particles on a line.
#[derive(Debug, Clone, PartialEq)]
pub struct ParticleConfig {
    positions: Vec<f64>,
}

impl ParticleConfig {
    pub fn new(positions: Vec<f64>) -> Result<Self> {
        if positions.len() < 2 {
            return Err(Error::TooFewParticles(positions.len()));
        }
        for &x in &positions {
            if !x.is_finite() {
                return Err(Error::Domain { name: "position", value: x });
            }
        }
        Ok(Self { positions })
    }

    pub fn positions(&self) -> &[f64] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// First pair of particles whose positions agree to within
    /// `policy.relative` of the configuration's spread.
    pub fn coincident_pair(&self, policy: CoincidencePolicy) -> Option<(usize, usize)> {
        let spread = self.positions.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        let tol = policy.relative * spread;
        for j in 0..self.positions.len() {
            for k in j + 1..self.positions.len() {
                if (self.positions[j] - self.positions[k]).abs() <= tol {
                    return Some((j, k));
                }
            }
        }
        None
    }
}

/// How close two particles may come before they count as coincident.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoincidencePolicy {
    pub relative: f64,
}

impl Default for CoincidencePolicy {
    fn default() -> Self {
        Self { relative: 1e-12 }
    }
}

/// Hyperspherical decomposition of a Jacobi vector `(ξ_1, …, ξ_n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HypersphericalPoint {
    /// Centre-of-mass coordinate `ξ_n = Σx/√n`.
    pub xi_n: f64,
    /// Hyperradius.
    pub r: f64,
    /// Unit vector `ξ̂_j = ξ_j / r` for `j = 1..n-1`.
    pub hat_xi: Vec<f64>,
    /// Hyperangle with `(ξ̂_1, ξ̂_2) = (sin θ, cos θ)`; three particles only.
    pub theta: Option<f64>,
}

impl HypersphericalPoint {
    pub fn particle_count(&self) -> usize {
        self.hat_xi.len() + 1
    }
}

/// Descending reordering of a configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct SectorDecomposition {
    /// Positions in descending order.
    pub sorted: Vec<f64>,
    /// `sorted[i] = positions[permutation[i]]`.
    pub permutation: Vec<usize>,
    /// Parity of `permutation`, equal to `Π_{j<k} sgn(x_j − x_k)`.
    pub sign: i8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statistics {
    Bose,
    Fermi,
}

/// Row `j` (0-based) of the orthogonal Jacobi matrix.
///
/// Rows `0..n-1` are `(1, …, 1, −j, 0, …)/√(j(j+1))` with `j` ones, the last
/// row is `(1, …, 1)/√n`.
pub fn jacobi_row(n: usize, row: usize) -> Vec<f64> {
    let mut e = alloc::vec![0.0; n];
    if row + 1 == n {
        let c = 1.0 / (n as f64).sqrt();
        e.iter_mut().for_each(|v| *v = c);
    } else {
        let j = (row + 1) as f64;
        let c = 1.0 / (j * (j + 1.0)).sqrt();
        e.iter_mut().take(row + 1).for_each(|v| *v = c);
        e[row + 1] = -j * c;
    }
    e
}

/// Jacobi coordinates `ξ_j = e_j · x`.
pub fn jacobi_transform(config: &ParticleConfig) -> Vec<f64> {
    let x = config.positions();
    let n = x.len();
    (0..n).map(|row| jacobi_row(n, row).iter().zip(x).map(|(e, xi)| e * xi).sum()).collect()
}

/// Positions from Jacobi coordinates (the transform is orthogonal).
pub fn inverse_jacobi(xi: &[f64]) -> Result<ParticleConfig> {
    let n = xi.len();
    if n < 2 {
        return Err(Error::TooFewParticles(n));
    }
    let mut x = alloc::vec![0.0; n];
    for (row, &c) in xi.iter().enumerate() {
        for (xk, e) in x.iter_mut().zip(jacobi_row(n, row)) {
            *xk += c * e;
        }
    }
    ParticleConfig::new(x)
}

/// Hyperradius, hyperangles and centre of mass from Jacobi coordinates.
pub fn hyperspherical(xi: &[f64]) -> Result<HypersphericalPoint> {
    let n = xi.len();
    if n < 2 {
        return Err(Error::TooFewParticles(n));
    }
    let rel = &xi[..n - 1];
    let r = rel.iter().map(|v| v * v).sum::<f64>().sqrt();
    if r == 0.0 || !r.is_finite() {
        return Err(Error::DegenerateInput);
    }
    let hat_xi: Vec<f64> = rel.iter().map(|v| v / r).collect();
    let theta = (n == 3).then(|| hat_xi[0].atan2(hat_xi[1]));
    Ok(HypersphericalPoint { xi_n: xi[n - 1], r, hat_xi, theta })
}

/// Hyperspherical point of a configuration, checking the Jacobi vector length.
pub fn hyperspherical_checked(config: &ParticleConfig, xi: &[f64]) -> Result<HypersphericalPoint> {
    if xi.len() != config.len() {
        return Err(Error::LengthMismatch { expected: config.len(), got: xi.len() });
    }
    hyperspherical(xi)
}

/// Configuration with the given centre of mass, hyperradius and hyperangle
/// (three particles).
pub fn three_body_config(xi_n: f64, r: f64, theta: f64) -> Result<ParticleConfig> {
    inverse_jacobi(&[r * theta.sin(), r * theta.cos(), xi_n])
}

/// `√((1/n) Σ_{j<k} (x_j − x_k)²)`, equal to the hyperradius.
pub fn hyperradius_pairwise(config: &ParticleConfig) -> f64 {
    let x = config.positions();
    let n = x.len();
    let mut s = 0.0;
    for j in 0..n {
        for k in j + 1..n {
            let d = x[j] - x[k];
            s += d * d;
        }
    }
    (s / n as f64).sqrt()
}

/// Sorts positions in descending order and records the permutation parity.
pub fn sector_map(positions: &[f64]) -> Result<SectorDecomposition> {
    if positions.len() < 2 {
        return Err(Error::TooFewParticles(positions.len()));
    }
    let mut permutation: Vec<usize> = (0..positions.len()).collect();
    permutation.sort_by(|&a, &b| positions[b].total_cmp(&positions[a]));
    for w in permutation.windows(2) {
        if positions[w[0]] == positions[w[1]] {
            let (a, b) = (w[0].min(w[1]), w[0].max(w[1]));
            return Err(Error::Coincidence(a, b));
        }
    }
    let sorted = permutation.iter().map(|&i| positions[i]).collect();
    let sign = permutation_parity(&permutation);
    Ok(SectorDecomposition { sorted, permutation, sign })
}

/// `Π_{j<k} sgn(x_j − x_k)`; zero when two positions coincide.
pub fn pairwise_sign_product(positions: &[f64]) -> i8 {
    let mut s = 1i8;
    for j in 0..positions.len() {
        for k in j + 1..positions.len() {
            let d = positions[j] - positions[k];
            if d == 0.0 {
                return 0;
            }
            if d < 0.0 {
                s = -s;
            }
        }
    }
    s
}

fn permutation_parity(perm: &[usize]) -> i8 {
    let mut seen = alloc::vec![false; perm.len()];
    let mut sign = 1i8;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// Strength `a_j = r g` of the contact term on boundary `j` of the unit
/// sphere, for `j = 1..n-1`.
pub fn coupling_profile(boundary: usize, g: f64, point: &HypersphericalPoint) -> Result<f64> {
    if boundary == 0 || boundary >= point.particle_count() {
        return Err(Error::Domain { name: "boundary index", value: boundary as f64 });
    }
    Ok(point.r * g)
}

/// `1/√(n!)`.
pub fn symmetrization_factor(n: usize) -> f64 {
    let fact: f64 = (1..=n).map(|k| k as f64).product();
    1.0 / fact.sqrt()
}

/// Full wavefunction
/// `Ψ = (1/√n!) · s · r^{−(n−2)/2} · e^{iPξ_n} · R(r) · Θ(sorted hyperangles)`,
/// where `s` is the permutation sign for fermions and 1 for bosons.
///
/// `angular` is evaluated at the hyperspherical point of the descending
/// reordering, so it only ever sees the principal sector.
pub fn assemble_wavefunction<R, A>(
    config: &ParticleConfig,
    cm_momentum: f64,
    radial: R,
    angular: A,
    statistics: Statistics,
    policy: CoincidencePolicy,
) -> Result<Complex64>
where
    R: FnOnce(f64) -> Result<Complex64>,
    A: FnOnce(&HypersphericalPoint) -> Result<Complex64>,
{
    if let Some((j, k)) = config.coincident_pair(policy) {
        return Err(Error::Coincidence(j, k));
    }
    let sector = sector_map(config.positions())?;
    let sorted = ParticleConfig::new(sector.sorted)?;
    let point = hyperspherical(&jacobi_transform(&sorted))?;
    let n = config.len();
    let sign = match statistics {
        Statistics::Bose => 1.0,
        Statistics::Fermi => f64::from(sector.sign),
    };
    let radial_part = radial(point.r)?;
    let angular_part = angular(&point)?;
    let weight = sign * symmetrization_factor(n) * point.r.powf(-0.5 * (n as f64 - 2.0));
    let cm = Complex64::from_polar(1.0, cm_momentum * point.xi_n);
    Ok(cm * radial_part * angular_part * weight)
}
