//! Error type shared across the engine.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A session line failed to parse or validate. Line numbers are 1-based
    /// and count the header line.
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    /// Configuration or model file rejected.
    #[error("config: {0}")]
    Config(String),

    /// Scenario script rejected.
    #[error("scenario: {0}")]
    Scenario(String),

    /// A runtime contract was violated (out-of-range score, time regression,
    /// undefined metric and the like).
    #[error("{0}")]
    Domain(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, reason: impl Into<String>) -> Self {
        Error::Parse {
            line,
            reason: reason.into(),
        }
    }

    pub(crate) fn domain(reason: impl Into<String>) -> Self {
        Error::Domain(reason.into())
    }

    /// True for errors caused by bad input files rather than by the
    /// computation itself. The CLI maps these to a distinct exit code.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. } | Error::Config(_) | Error::Scenario(_) | Error::Io(_) | Error::Json(_)
        )
    }
}
