use std::process::ExitCode;

use thiserror::Error;

/// Failures surfaced by the command-line tools, each tied to an exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad arguments or unreadable input (exit 2).
    #[error("{0}")]
    Usage(String),
    /// Two algorithms disagreed; this is a bug, not a user error (exit 3).
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Consistency(_) => ExitCode::from(3),
        }
    }
}

impl From<bdtw_core::Error> for CliError {
    fn from(e: bdtw_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}
