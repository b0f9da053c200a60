//! Shared error type.

/// Errors raised anywhere in the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An argument is outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Inputs are structurally invalid (dimensions, ranks, sizes, options).
    #[error("invalid argument: {0}")]
    Argument(String),
    /// The data cannot support the requested computation.
    #[error("data error: {0}")]
    Data(String),
    /// A numerical procedure failed to produce a usable result.
    #[error("numerical failure: {0}")]
    Numeric(String),
}

pub type Result<T> = std::result::Result<T, Error>;
