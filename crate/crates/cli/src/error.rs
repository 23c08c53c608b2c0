use std::fmt;

use sbath_core::Error;

/// Process exit status. The numeric values are a stable contract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    Usage = 1,
    Config = 2,
    Numerical = 3,
    Io = 4,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug)]
pub struct CliError {
    pub status: ExitStatus,
    pub message: String,
}

pub type CliResult<T> = std::result::Result<T, CliError>;

impl CliError {
    pub fn new(status: ExitStatus, message: impl Into<String>) -> Self {
        CliError {
            status,
            message: message.into(),
        }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        CliError::new(ExitStatus::Usage, message)
    }

    pub fn config(message: impl Into<String>) -> Self {
        CliError::new(ExitStatus::Config, message)
    }

    /// Malformed input file contents.
    pub fn format(message: impl Into<String>) -> Self {
        CliError::new(ExitStatus::Config, message)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Singular { .. } | Error::Truncation { .. } | Error::Quadrature { .. } => {
                ExitStatus::Numerical
            }
            Error::Io(_) => ExitStatus::Io,
            Error::InvalidArgument(_)
            | Error::InvalidSpec(_)
            | Error::UnknownNode(_)
            | Error::UnknownPreset(_)
            | Error::Parse(_)
            | Error::Schema { .. } => ExitStatus::Config,
        };
        CliError::new(status, e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::new(ExitStatus::Io, e.to_string())
    }
}
