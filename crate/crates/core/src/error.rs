use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("grid mismatch: {0}")]
    GridMismatch(String),
    #[error("shift {shift} is not a multiple of the spacing {spacing}")]
    UnalignedShift { shift: f64, spacing: f64 },
    #[error("invalid exponent {0}")]
    InvalidExponent(f64),
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("ill-conditioned: {0}")]
    IllConditioned(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("construction failed: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
