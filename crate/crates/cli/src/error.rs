use std::fmt;

use udenom::Error;

/// Process exit statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Internal = 1,
    Parse = 2,
    Bound = 3,
    Consistency = 4,
    ReportMismatch = 5,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: ExitCode,
    pub message: String,
}

impl CliError {
    pub fn new(code: ExitCode, message: impl Into<String>) -> Self {
        CliError { code, message: message.into() }
    }

    pub fn parse(message: impl Into<String>) -> Self {
        Self::new(ExitCode::Parse, message)
    }

    pub fn consistency(message: impl Into<String>) -> Self {
        Self::new(ExitCode::Consistency, message)
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
        let code = match e {
            Error::GroupTooLarge { .. } | Error::SubsetBoundExceeded { .. } => ExitCode::Bound,
            Error::GaloisUnstable { .. } => ExitCode::Consistency,
            Error::ZeroVector
            | Error::LengthMismatch(..)
            | Error::InvalidKey(_)
            | Error::NotUnivariate(_)
            | Error::Invalid(_) => ExitCode::Parse,
            Error::InexactDivision(_) | Error::NonIntegral | Error::Overflow(_) => ExitCode::Internal,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::parse(format!("invalid input: {e}"))
    }
}
