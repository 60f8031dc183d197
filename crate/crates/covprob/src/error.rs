//! Error type shared by every module in the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes for parameter validation and numerical evaluation.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter violates its documented precondition.
    #[error("domain: {0}")]
    Domain(String),
    /// Inputs make the target quantity undefined (e.g. A = B = 0, where the
    /// integral diverges).
    #[error("degenerate input: {0}")]
    Degenerate(String),
    /// No closed form exists for the requested parameter combination.
    #[error("no closed form: {0}")]
    NoClosedForm(String),
    /// An iterative scheme exhausted its budget before reaching tolerance.
    #[error("did not converge: {0}")]
    NoConvergence(String),
    /// A computed probability left [0, 1] by more than the allowed slack.
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// CLI process exit code: 4 for I/O failures, 3 for domain/math failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io(_) => 4,
            _ => 3,
        }
    }
}
