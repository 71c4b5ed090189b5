use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "dsi",
    version,
    about = "Sweeps and verification for three-body contact interactions in one dimension"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Output file; standard output when omitted.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Output format. Tables default to CSV, verification reports to JSON.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Worker threads for grid sweeps (0 picks the number of cores).
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
    #[arg(long, global = true, value_enum, default_value_t = ToleranceProfile::Default)]
    pub tolerance_profile: ToleranceProfile,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ToleranceProfile {
    Default,
    Strict,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Phase diagram over a rectangle of couplings.
    Phases(PhasesArgs),
    /// Lowest angular eigenvalues for one coupling pair.
    Angular(AngularArgs),
    /// Geometric tower of three-body bound states.
    Spectrum(SpectrumArgs),
    /// S-matrix trace on a log-spaced momentum grid around κ*.
    Smatrix(SmatrixArgs),
    /// Sampled radial or angular wavefunctions.
    Wavefunction(WavefunctionArgs),
    /// Oracle comparison suites with a pass/fail report.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct PhasesArgs {
    /// Range of g₁ as `LO,HI`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_values_t = [-2.0, 2.0])]
    pub g1_range: Vec<f64>,
    /// Range of g₂ as `LO,HI`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_values_t = [-2.0, 2.0])]
    pub g2_range: Vec<f64>,
    /// Points per axis.
    #[arg(long, default_value_t = 41)]
    pub resolution: usize,
}

#[derive(Debug, Args)]
pub struct CouplingArgs {
    /// Left-wall coupling; `inf` selects the Neumann wall, 0 the Dirichlet wall.
    #[arg(long, allow_negative_numbers = true)]
    pub g1: f64,
    /// Right-wall coupling.
    #[arg(long, allow_negative_numbers = true)]
    pub g2: f64,
}

#[derive(Debug, Args)]
pub struct AngularArgs {
    #[command(flatten)]
    pub couplings: CouplingArgs,
    #[arg(long, default_value_t = 5)]
    pub count: usize,
}

#[derive(Debug, Args)]
pub struct ChannelArgs {
    /// Channel index ν (`λ = −ν²`).
    #[arg(long)]
    pub nu: f64,
    /// Three-body parameter κ*.
    #[arg(long, default_value_t = 1.0)]
    pub kappa_star: f64,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub channel: ChannelArgs,
    #[arg(long, allow_negative_numbers = true, default_value_t = -2)]
    pub ell_min: i64,
    #[arg(long, allow_negative_numbers = true, default_value_t = 2)]
    pub ell_max: i64,
}

#[derive(Debug, Args)]
pub struct SmatrixArgs {
    #[command(flatten)]
    pub channel: ChannelArgs,
    /// Decades of k covered, centred on κ*.
    #[arg(long, default_value_t = 8.0)]
    pub k_decades: f64,
    #[arg(long, default_value_t = 401)]
    pub points: usize,
}

#[derive(Debug, Args)]
pub struct WavefunctionArgs {
    #[command(subcommand)]
    pub kind: WavefunctionKind,
}

#[derive(Debug, Args)]
pub struct RadialGrid {
    /// Smallest hyperradius (log-spaced grid).
    #[arg(long)]
    pub r_min: Option<f64>,
    /// Largest hyperradius.
    #[arg(long)]
    pub r_max: Option<f64>,
    #[arg(long, default_value_t = 200)]
    pub points: usize,
}

#[derive(Debug, Subcommand)]
pub enum WavefunctionKind {
    /// Normalized bound-state radial function `R_{κ_ℓ}(r)`.
    Bound {
        #[command(flatten)]
        channel: ChannelArgs,
        #[arg(long, allow_negative_numbers = true, default_value_t = 0)]
        ell: i64,
        #[command(flatten)]
        grid: RadialGrid,
    },
    /// Scattering radial function `R_k(r)`.
    Scattering {
        #[command(flatten)]
        channel: ChannelArgs,
        #[arg(long)]
        k: f64,
        #[command(flatten)]
        grid: RadialGrid,
    },
    /// Normalized angular eigenfunction `Θ(θ)` on `[0, π/3]`.
    Angular {
        #[command(flatten)]
        couplings: CouplingArgs,
        /// Position of the eigenvalue in ascending order.
        #[arg(long, default_value_t = 0)]
        index: usize,
        #[arg(long, default_value_t = 101)]
        points: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum)]
pub enum Suite {
    Angular,
    Radial,
    Smatrix,
    Special,
    Orthogonality,
    Statistics,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suites to run; all when omitted.
    #[arg(long = "suite", value_enum)]
    pub suites: Vec<Suite>,
    /// Relative perturbation of ν inside the S-matrix checks (test mode).
    #[arg(long, hide = true)]
    pub perturb_nu: Option<f64>,
}
