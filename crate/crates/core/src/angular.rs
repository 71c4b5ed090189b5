//! Three-body angular problem on the sector `θ ∈ [0, π/3]`.
//!
//! The contact conditions at the two walls are
//! `Θ'(0) = Θ(0)/g₁` and `Θ'(π/3) = −Θ(π/3)/g₂`. Each coupling is carried as
//! a homogeneous pair `(a, b)` with left-wall condition `a Θ' − b Θ = 0`, so
//! that Dirichlet (`g = 0`) and Neumann (`g = ±∞`) are ordinary members of the
//! family.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_3, FRAC_PI_6, PI};

use num_complex::Complex64;
#[allow(unused_imports)] // inherent methods shadow it when std is linked
use num_traits::Float;

use crate::numeric::quadrature::{integrate, QuadOptions};
use crate::numeric::roots::brent;
use crate::{Error, Result, SECTOR_ANGLE};

const L: f64 = SECTOR_ANGLE;

/// Boundary condition at one wall.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Coupling {
    /// Finite coupling `g`; `g = 0` is a Dirichlet wall.
    Finite(f64),
    /// `g → ±∞`: vanishing normal derivative.
    Neumann,
}

impl Coupling {
    pub fn dirichlet() -> Self {
        Coupling::Finite(0.0)
    }

    /// Builds a coupling from a float, mapping `±∞` to Neumann.
    pub fn from_g(g: f64) -> Result<Self> {
        if g.is_nan() {
            Err(Error::Domain { name: "g", value: g })
        } else if g.is_infinite() {
            Ok(Coupling::Neumann)
        } else {
            Ok(Coupling::Finite(g))
        }
    }

    /// `g` as a float, `+∞` for Neumann.
    pub fn g(&self) -> f64 {
        match *self {
            Coupling::Finite(g) => g,
            Coupling::Neumann => f64::INFINITY,
        }
    }

    fn pair(&self) -> (f64, f64) {
        match *self {
            Coupling::Finite(g) => (g, 1.0),
            Coupling::Neumann => (1.0, 0.0),
        }
    }
}

/// Couplings on the two walls of the principal sector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplingPair {
    pub left: Coupling,
    pub right: Coupling,
}

impl CouplingPair {
    pub fn new(left: Coupling, right: Coupling) -> Self {
        Self { left, right }
    }

    /// Pair of finite couplings.
    pub fn finite(g1: f64, g2: f64) -> Result<Self> {
        for g in [g1, g2] {
            if !g.is_finite() {
                return Err(Error::Domain { name: "g", value: g });
            }
        }
        Ok(Self::new(Coupling::Finite(g1), Coupling::Finite(g2)))
    }

    pub fn symmetric(g: f64) -> Result<Self> {
        Self::finite(g, g)
    }
}

/// Region of the `(g₁, g₂)` plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PhaseRegion {
    /// Only the channel attached to `min(g₁, g₂) < 0` with `g₁, g₂ < 0`.
    D0Only,
    /// Only the channel that crosses zero on `g₁ + g₂ = −π/3`.
    D1Only,
    D0AndD1,
    /// No subcritical channel: continuous scale invariance is intact.
    Unbroken,
}

impl PhaseRegion {
    pub fn label(&self) -> &'static str {
        match self {
            PhaseRegion::D0Only => "D0",
            PhaseRegion::D1Only => "D1",
            PhaseRegion::D0AndD1 => "D0∩D1",
            PhaseRegion::Unbroken => "unbroken",
        }
    }

    pub fn channel_count(&self) -> usize {
        match self {
            PhaseRegion::D0Only | PhaseRegion::D1Only => 1,
            PhaseRegion::D0AndD1 => 2,
            PhaseRegion::Unbroken => 0,
        }
    }
}

/// One eigenpair of the angular problem, normalized to unit `L²` norm on
/// `[0, π/3]` with `Θ(0) > 0` (or `Θ'(0) > 0` for a Dirichlet left wall).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularChannel {
    pub lambda: f64,
    /// `√(−λ)` for `λ < 0`.
    pub nu: Option<f64>,
    /// Coefficients of `Θ = A e^{i√λ θ} + B e^{−i√λ θ}`; `None` at `λ = 0`
    /// where the plane-wave form degenerates.
    pub plane_wave: Option<(Complex64, Complex64)>,
    pub channel_index: usize,
    a1: f64,
    b1: f64,
    norm: f64,
}

/// Result of a phase classification.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseVerdict {
    pub broken: bool,
    pub region: PhaseRegion,
    /// Subcritical channels (`λ < 0`), lowest first.
    pub channels: Vec<AngularChannel>,
}

/// Values of `cos(√λ θ)` and `sin(√λ θ)/√λ` (or their hyperbolic
/// continuations), multiplied by `e^{−νL}` when `λ = −ν² < 0`.
#[derive(Debug, Clone, Copy)]
struct Basis {
    c: f64,
    s: f64,
}

fn basis(lambda: f64, theta: f64) -> Basis {
    if lambda > 0.0 {
        let k = lambda.sqrt();
        Basis { c: (k * theta).cos(), s: (k * theta).sin() / k }
    } else if lambda < 0.0 {
        let nu = (-lambda).sqrt();
        let up = (nu * (theta - L)).exp();
        let down = (-nu * (theta + L)).exp();
        // sinh(νθ) e^{−νL} / ν without cancellation at small νθ
        let s = -(-2.0 * nu * theta).exp_m1() * up / (2.0 * nu);
        Basis { c: 0.5 * (up + down), s }
    } else {
        Basis { c: 1.0, s: theta }
    }
}

/// Solution with the left boundary condition built in:
/// `y = a₁ C(θ) + b₁ S(θ)`, returned as `(y, y')` in the scaled units of
/// [`basis`].
fn shoot(lambda: f64, a1: f64, b1: f64, theta: f64) -> (f64, f64) {
    let b = basis(lambda, theta);
    (a1 * b.c + b1 * b.s, -a1 * lambda * b.s + b1 * b.c)
}

fn residual_raw(lambda: f64, c: &CouplingPair) -> (f64, f64) {
    let (a1, b1) = c.left.pair();
    let (a2, b2) = c.right.pair();
    let bl = basis(lambda, L);
    let g = if lambda < 0.0 && -lambda * L * L >= 1.0 {
        // Same expression regrouped by e^{±νθ}; avoids cancelling the
        // growing exponential against itself when both walls bind.
        let nu = (-lambda).sqrt();
        let grow = (nu * a1 + b1) * (nu * a2 + b2);
        let decay = (nu * a1 - b1) * (nu * a2 - b2) * (-2.0 * nu * L).exp();
        -(grow - decay) / (2.0 * nu)
    } else {
        bl.s * (a1 * a2 * lambda - b1 * b2) - (a1 * b2 + a2 * b1) * bl.c
    };
    let (sh, ch) = if lambda > 0.0 { (L.min(1.0 / lambda.sqrt()), 1.0) } else { (bl.s, bl.c) };
    let scale = ((a1 * a2 * lambda).abs() + (b1 * b2).abs()) * sh + ((a1 * b2).abs() + (a2 * b1).abs()) * ch;
    (g, scale)
}

/// Normalized quantization residual. Its zeros are exactly the eigenvalues;
/// it is entire in `λ`, dimensionless, and of order one away from roots.
pub fn quantization_residual(lambda: f64, couplings: &CouplingPair) -> f64 {
    let (g, scale) = residual_raw(lambda, couplings);
    if scale == 0.0 {
        0.0
    } else {
        g / scale
    }
}

fn angle_mod_pi(x: f64, y: f64) -> f64 {
    let mut a = y.atan2(x);
    if a < 0.0 {
        a += PI;
    }
    if a >= PI {
        a -= PI;
    }
    a
}

/// Number of eigenvalues strictly below `lambda` (Prüfer count).
pub fn eigenvalue_count_below(lambda: f64, couplings: &CouplingPair) -> usize {
    let (a1, b1) = couplings.left.pair();
    let (a2, b2) = couplings.right.pair();
    let (y, dy) = shoot(lambda, a1, b1, L);
    let zeros = if lambda > 0.0 {
        let k = lambda.sqrt();
        let psi0 = angle_mod_pi(b1, k * a1);
        ((psi0 + k * L) / PI).floor() as usize
    } else if a1 != 0.0 && (y == 0.0 || y.signum() != a1.signum()) {
        1
    } else {
        0
    };
    let frac = angle_mod_pi(dy, y);
    let mut target = angle_mod_pi(b2, -a2);
    if target == 0.0 {
        target = PI;
    }
    zeros + usize::from(frac > target)
}

/// Limits on the root search. The lower end starts at `−nu_max²` and doubles
/// `nu_max` until no eigenvalue lies below, up to `nu_limit`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchBounds {
    pub nu_max: f64,
    pub nu_limit: f64,
}

impl Default for SearchBounds {
    fn default() -> Self {
        Self { nu_max: 50.0, nu_limit: 1e9 }
    }
}

/// The lowest `count` eigenvalues, each isolated by bisection on the Prüfer
/// count and polished with Brent's method on the residual.
pub fn angular_eigenvalues(couplings: &CouplingPair, count: usize) -> Result<Vec<AngularChannel>> {
    angular_eigenvalues_with(couplings, count, SearchBounds::default())
}

pub fn angular_eigenvalues_with(
    couplings: &CouplingPair,
    count: usize,
    bounds: SearchBounds,
) -> Result<Vec<AngularChannel>> {
    if let Coupling::Finite(g) = couplings.left {
        crate::error::check_finite("g1", g)?;
    }
    if let Coupling::Finite(g) = couplings.right {
        crate::error::check_finite("g2", g)?;
    }
    let mut nu_max = bounds.nu_max;
    while eigenvalue_count_below(-nu_max * nu_max, couplings) > 0 {
        nu_max *= 2.0;
        if nu_max > bounds.nu_limit {
            return Err(Error::BracketExhausted { index: 0, limit: -bounds.nu_limit * bounds.nu_limit });
        }
    }
    let floor = -nu_max * nu_max;
    // Dirichlet eigenvalues 9(j+1)² bound the Robin ones from above.
    let ceiling = 9.0 * ((count + 1) * (count + 1)) as f64 + 1.0;
    (0..count)
        .map(|j| {
            let lambda = isolate_and_polish(couplings, j, floor, ceiling)?;
            Ok(build_channel(couplings, lambda, j))
        })
        .collect()
}

fn isolate_and_polish(c: &CouplingPair, j: usize, floor: f64, ceiling: f64) -> Result<f64> {
    let (mut lo, mut hi) = (floor, ceiling);
    let mut n_lo = eigenvalue_count_below(lo, c);
    let mut n_hi = eigenvalue_count_below(hi, c);
    if n_hi <= j {
        return Err(Error::BracketExhausted { index: j, limit: ceiling });
    }
    let mut iterations = 0;
    while !(n_lo == j && n_hi == j + 1) {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi || iterations > 400 {
            return Ok(mid);
        }
        let n = eigenvalue_count_below(mid, c);
        if n <= j {
            lo = mid;
            n_lo = n;
        } else {
            hi = mid;
            n_hi = n;
        }
        iterations += 1;
    }
    let f = |x: f64| quantization_residual(x, c);
    let (flo, fhi) = (f(lo), f(hi));
    let xtol = 4.0 * f64::EPSILON * lo.abs().max(hi.abs()) + 1e-300;
    match brent(f, lo, hi, flo, fhi, xtol) {
        Ok(x) => Ok(x),
        Err(_) => {
            // The residual's sign did not bracket (rounding at a tiny bracket):
            // finish by bisection on the count.
            while hi - lo > xtol {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                if eigenvalue_count_below(mid, c) <= j {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            Ok(0.5 * (lo + hi))
        }
    }
}

fn build_channel(c: &CouplingPair, lambda: f64, index: usize) -> AngularChannel {
    let (mut a1, mut b1) = c.left.pair();
    let sign = if a1 != 0.0 { a1.signum() } else { b1.signum() };
    a1 *= sign;
    b1 *= sign;
    let norm = integrate(
        |t: f64| {
            let (y, _) = shoot(lambda, a1, b1, t);
            Ok(y * y)
        },
        0.0,
        L,
        QuadOptions { abs_tol: 0.0, rel_tol: 1e-14, max_intervals: 200 },
    )
    .map(|r| r.value.sqrt())
    .unwrap_or(f64::NAN);
    let nu = (lambda < 0.0).then(|| (-lambda).sqrt());
    let plane_wave = plane_wave_coefficients(lambda, a1, b1, norm);
    AngularChannel { lambda, nu, plane_wave, channel_index: index, a1, b1, norm }
}

fn plane_wave_coefficients(lambda: f64, a1: f64, b1: f64, norm: f64) -> Option<(Complex64, Complex64)> {
    if lambda == 0.0 {
        return None;
    }
    // Θ = a₁ cos(kθ) + b₁ sin(kθ)/k = A e^{ikθ} + B e^{−ikθ}, k = √λ.
    let k = Complex64::new(lambda, 0.0).sqrt();
    let scale = if lambda < 0.0 { (-(-lambda).sqrt() * L).exp() } else { 1.0 };
    let i = Complex64::i();
    let a = (Complex64::new(0.5 * a1, 0.0) + b1 / (2.0 * i * k)) * (scale / norm);
    let b = (Complex64::new(0.5 * a1, 0.0) - b1 / (2.0 * i * k)) * (scale / norm);
    Some((a, b))
}

impl AngularChannel {
    /// `Θ(θ)` for `θ ∈ [0, π/3]`.
    pub fn value(&self, theta: f64) -> f64 {
        shoot(self.lambda, self.a1, self.b1, theta).0 / self.norm
    }

    /// `Θ'(θ)` for `θ ∈ [0, π/3]`.
    pub fn derivative(&self, theta: f64) -> f64 {
        shoot(self.lambda, self.a1, self.b1, theta).1 / self.norm
    }

    /// `Θ` at the hyperangle of a three-body point in the principal sector.
    pub fn value_at(&self, point: &crate::coordinates::HypersphericalPoint) -> Result<f64> {
        match point.theta {
            Some(t) if (-1e-12..=L + 1e-12).contains(&t) => Ok(self.value(t.clamp(0.0, L))),
            Some(t) => Err(Error::Domain { name: "theta", value: t }),
            None => Err(Error::Domain { name: "particle count", value: point.particle_count() as f64 }),
        }
    }
}

/// Normalized eigenfunction of `channel` at `theta`, after checking that the
/// channel belongs to `couplings`.
pub fn eigenfunction(channel: &AngularChannel, couplings: &CouplingPair, theta: f64) -> Result<f64> {
    let residual = quantization_residual(channel.lambda, couplings);
    if residual.abs() > 1e-8 {
        return Err(Error::ChannelMismatch { lambda: channel.lambda, residual });
    }
    if !(0.0..=L).contains(&theta) {
        return Err(Error::Domain { name: "theta", value: theta });
    }
    Ok(channel.value(theta))
}

/// Closed-form region of the phase diagram.
pub fn phase_region(couplings: &CouplingPair) -> PhaseRegion {
    let (g1, g2) = (couplings.left.g(), couplings.right.g());
    let d0 = g1 < 0.0 && g2 < 0.0;
    let d1 = g1 + g2 > -FRAC_PI_3 && g1.min(g2) < 0.0;
    match (d0, d1) {
        (true, true) => PhaseRegion::D0AndD1,
        (true, false) => PhaseRegion::D0Only,
        (false, true) => PhaseRegion::D1Only,
        (false, false) => PhaseRegion::Unbroken,
    }
}

/// Subcritical channels and the region they put the couplings in.
///
/// The region comes from the closed-form criterion; the channels from the
/// root finder. On a region boundary the two may disagree by one channel
/// within rounding.
pub fn classify_phase(couplings: &CouplingPair) -> Result<PhaseVerdict> {
    let region = phase_region(couplings);
    let negatives = eigenvalue_count_below(0.0, couplings);
    let channels: Vec<AngularChannel> =
        angular_eigenvalues(couplings, negatives)?.into_iter().filter(|ch| ch.lambda < 0.0).collect();
    Ok(PhaseVerdict { broken: !channels.is_empty(), region, channels })
}

/// Index of the eigenvalue that crosses zero on the line `g₁ + g₂ = −π/3`:
/// the second one when both couplings are attractive (the lowest is then the
/// deeper channel that never crosses zero), otherwise the lowest.
pub fn crossing_channel_index(couplings: &CouplingPair) -> usize {
    usize::from(couplings.left.g() < 0.0 && couplings.right.g() < 0.0)
}

/// Eigenvalue of the channel returned by [`crossing_channel_index`].
pub fn crossing_eigenvalue(couplings: &CouplingPair) -> Result<f64> {
    let idx = crossing_channel_index(couplings);
    Ok(angular_eigenvalues(couplings, idx + 1)?[idx].lambda)
}

/// For equal couplings `g ∈ (−π/6, 0)` the two negative eigenvalues
/// `−ν₀², −ν₁²` solve `gν = −coth(πν/6)` and `gν = −tanh(πν/6)`.
/// Returns `(ν₀, ν₁)` with `ν₀ > ν₁`.
pub fn symmetric_channel_roots(g: f64) -> Result<(f64, f64)> {
    if !(g > -FRAC_PI_6 && g < 0.0) {
        return Err(Error::Domain { name: "g", value: g });
    }
    let even = |nu: f64| g * nu + 1.0 / (FRAC_PI_6 * nu).tanh();
    let odd = |nu: f64| {
        let t = FRAC_PI_6 * nu;
        let ratio = if t < 1e-8 { FRAC_PI_6 } else { t.tanh() / nu };
        g + ratio
    };
    let hi = 4.0 / g.abs();
    let lo0 = 1e-3;
    let nu0 = brent(even, lo0, hi, even(lo0), even(hi), 1e-15)?;
    let lo1 = 1e-12;
    let nu1 = brent(odd, lo1, hi, odd(lo1), odd(hi), 1e-15)?;
    Ok((nu0, nu1))
}

/// Spatial extent `√2 r sin(1/ν)` of the dimer bound in a channel of
/// index `ν` at hyperradius `r`.
pub fn dimer_extent(nu: f64, r: f64) -> Result<f64> {
    crate::error::check_positive("nu", nu)?;
    crate::error::check_positive("r", r)?;
    Ok(core::f64::consts::SQRT_2 * r * (1.0 / nu).sin())
}
