use std::process::ExitCode;

use dsi_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("verification failed: {0} check(s) outside tolerance")]
    Verification(usize),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Usage(_) | CliError::Io(_) | CliError::Csv(_) | CliError::Json(_) => 1,
            CliError::Verification(_) => 2,
            CliError::Core(e) if is_numerical_range(e) => 3,
            CliError::Core(_) => 1,
        })
    }
}

/// Errors that come from leaving the numerically supported range rather
/// than from malformed input.
pub fn is_numerical_range(e: &CoreError) -> bool {
    matches!(
        e,
        CoreError::Underflow
            | CoreError::Overflow
            | CoreError::NoConvergence(_)
            | CoreError::BracketExhausted { .. }
            | CoreError::InsufficientLevels { .. }
    )
}

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}
