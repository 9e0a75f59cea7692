use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid knot: {0}")]
    InvalidKnot(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An internal consistency check failed. Always a bug or a wrong input table.
    #[error("consistency check `{check}` failed: {detail}")]
    Inconsistency { check: &'static str, detail: String },
}

impl Error {
    pub(crate) fn inconsistency(check: &'static str, detail: impl Into<String>) -> Self {
        Error::Inconsistency { check, detail: detail.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
