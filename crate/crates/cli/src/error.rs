use std::path::PathBuf;

use thiserror::Error;

/// Usage and input errors; all exit with status 2. A failed verification is
/// not an error and is reported through the command outcome instead.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {message}")]
    Parse { path: PathBuf, message: String },
    #[error(transparent)]
    Core(#[from] msr_core::Error),
}

impl CliError {
    pub const EXIT_CODE: u8 = 2;

    pub fn parse(path: impl Into<PathBuf>, message: impl ToString) -> Self {
        CliError::Parse { path: path.into(), message: message.to_string() }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
