use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("unsupported root system {0}")]
    UnsupportedType(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("group of order {order} exceeds the gate of {limit}")]
    GroupTooLarge { order: usize, limit: usize },
    #[error("not a root: {0}")]
    NotARoot(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("unsupported representation: {0}")]
    UnsupportedRepresentation(String),
    #[error("extension does not exist: {0}")]
    NoExtension(String),
    #[error("non-integral inner product {0}")]
    NonIntegral(String),
    #[error("computation failed: {0}")]
    Internal(String),
    #[error("table mismatch: {0}")]
    Mismatch(String),
    #[error("data error: {0}")]
    Data(String),
}
