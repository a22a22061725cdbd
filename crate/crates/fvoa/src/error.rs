use thiserror::Error;

/// Errors produced by the verification library.
///
/// `Consistency` is special: it marks a violated mathematical claim, i.e. a
/// situation the theory says cannot occur on valid input.  Callers surface it
/// as a failed verification rather than a usage mistake.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("resource guard: {0}")]
    ResourceGuard(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("design violation: {0}")]
    Design(String),

    #[error("consistency failure ({claim}): {detail}")]
    Consistency { claim: String, detail: String },
}

impl Error {
    pub fn consistency(claim: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Consistency {
            claim: claim.into(),
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
