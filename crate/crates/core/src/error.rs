use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("at least two particles are required, got {0}")]
    TooFewParticles(usize),
    #[error("expected {expected} components, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("particles {0} and {1} coincide")]
    Coincidence(usize, usize),
    #[error("all relative coordinates vanish")]
    DegenerateInput,
    #[error("{name} = {value} is outside the supported domain")]
    Domain { name: &'static str, value: f64 },
    #[error("result underflows the double-precision range")]
    Underflow,
    #[error("result overflows the double-precision range")]
    Overflow,
    #[error("no bracket for eigenvalue {index} below lambda = {limit}")]
    BracketExhausted { index: usize, limit: f64 },
    #[error("{0} failed to converge")]
    NoConvergence(&'static str),
    #[error("lambda = {lambda} does not satisfy the quantization condition (residual {residual})")]
    ChannelMismatch { lambda: f64, residual: f64 },
    #[error("lambda = {lambda} is not below the critical value {critical}")]
    NotSubcritical { lambda: f64, critical: f64 },
    #[error("found {found} levels, {needed} requested")]
    InsufficientLevels { found: usize, needed: usize },
    #[error("invalid grid: {0}")]
    InvalidGrid(&'static str),
}

pub(crate) fn check_finite(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Domain { name, value })
    }
}

pub(crate) fn check_positive(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::Domain { name, value })
    }
}
