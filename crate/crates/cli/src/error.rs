use std::fmt;

/// Process exit statuses.
pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DATA: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    /// Bad flags, config or parameter ranges.
    Usage(String),
    /// Unreadable or malformed input, network and cache failures.
    Data(String),
    /// The command ran but a mathematical check did not hold.
    CheckFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Data(_) => EXIT_DATA,
            CliError::CheckFailed(_) => EXIT_CHECK_FAILED,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Data(m) | CliError::CheckFailed(m) => f.write_str(m),
        }
    }
}

impl From<licoef::Error> for CliError {
    fn from(e: licoef::Error) -> Self {
        use licoef::Error as E;
        let msg = e.to_string();
        match e {
            E::PrecisionTooLow { .. }
            | E::PrecisionExceedsLiteral { .. }
            | E::SourceDigits(_)
            | E::IndexOutOfRange { .. }
            | E::SymmetryRequired(_)
            | E::InvalidElement(_)
            | E::TailDomain { .. } => CliError::Usage(msg),
            _ => CliError::Data(msg),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Data(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
