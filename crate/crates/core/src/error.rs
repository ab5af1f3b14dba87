use thiserror::Error;

/// Errors raised by precondition violations and malformed input.
///
/// Failed feasibility conditions are never errors; they are reported as
/// condition statuses with witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative input to square root: {0}")]
    NegativeSqrt(String),

    #[error("dimension must be at least 2, got {0}")]
    DimensionTooSmall(u64),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("angle equal to 1 has no annihilator factor")]
    AngleIsOne,

    #[error("value lies outside a single quadratic field: {0}")]
    NotQuadratic(String),

    #[error("invalid point set: {0}")]
    InvalidPointSet(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
