//! The single tolerance table shared by the verification suites and the
//! acceptance tests.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Profile {
    #[default]
    Default,
    Strict,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Dirichlet and Neumann eigenvalues against `9m²`.
    pub angular_limits: f64,
    /// Symmetric-coupling eigenvalues against the coth/tanh roots.
    pub symmetric_roots: f64,
    /// `|λ|` of the crossing channel on `g₁ + g₂ = −π/3`.
    pub boundary_lambda: f64,
    /// Offset from the boundary line for the sign-change test.
    pub boundary_offset: f64,
    /// Finite-difference angular oracle against the root finder.
    pub fd_angular: f64,
    pub unitarity: f64,
    pub log_periodicity: f64,
    /// Relative residue error at the bound-state poles.
    pub residue: f64,
    pub conjugation: f64,
    /// Relative deviation of radial-oracle level ratios from `e^{−2π/ν}`.
    pub radial_ratio: f64,
    pub normalization: f64,
    pub bound_bound: f64,
    pub bound_scattering: f64,
    /// Relative deviation from `N e^{−κr}` at `κr = 50`.
    pub bound_asymptote: f64,
    /// Deviation from `e^{−ikr} + S e^{ikr}` at `kr = 100`.
    pub scattering_asymptote: f64,
    /// `K_{iν}` against the quadrature oracle (relative).
    pub bessel_oracle: f64,
    pub wronskian: f64,
    pub exchange_symmetry: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        angular_limits: 1e-10,
        symmetric_roots: 1e-10,
        boundary_lambda: 1e-4,
        boundary_offset: 1e-6,
        fd_angular: 1e-4,
        unitarity: 1e-12,
        log_periodicity: 1e-12,
        residue: 1e-6,
        conjugation: 1e-12,
        radial_ratio: 1e-2,
        normalization: 1e-6,
        bound_bound: 1e-6,
        bound_scattering: 1e-5,
        bound_asymptote: 1e-3,
        scattering_asymptote: 1e-2,
        bessel_oracle: 1e-10,
        wronskian: 1e-9,
        exchange_symmetry: 1e-12,
    };

    pub const STRICT: Tolerances = Tolerances {
        angular_limits: 1e-12,
        symmetric_roots: 1e-12,
        boundary_lambda: 1e-6,
        fd_angular: 1e-6,
        residue: 1e-8,
        radial_ratio: 5e-3,
        normalization: 1e-8,
        bound_bound: 1e-8,
        bound_scattering: 1e-7,
        bessel_oracle: 1e-11,
        wronskian: 1e-11,
        ..Self::DEFAULT
    };

    pub fn for_profile(profile: Profile) -> Self {
        match profile {
            Profile::Default => Self::DEFAULT,
            Profile::Strict => Self::STRICT,
        }
    }
}
