//! Command-line front end, file formats and verification suites.

pub mod checks;
pub mod commands;
pub mod output;
pub mod tolerances;

use invsq_core::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 2;
    pub const DOMAIN: i32 = 3;
    pub const VERIFY_FAILED: i32 = 4;
    pub const NONCONVERGENCE: i32 = 5;
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(std::io::Error),
    Core(Error),
    VerifyFailed(Vec<&'static str>),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => exit::USAGE,
            CliError::VerifyFailed(_) => exit::VERIFY_FAILED,
            CliError::Core(e) if e.is_nonconvergence() => exit::NONCONVERGENCE,
            CliError::Core(_) => exit::DOMAIN,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Io(e) => write!(f, "io: {e}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::VerifyFailed(names) => write!(f, "failed checks: {}", names.join(", ")),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Usage(format!("csv: {e}"))
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
