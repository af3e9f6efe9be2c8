use thiserror::Error;

/// Errors raised by the core constructions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Ray-level operations are undefined for the zero vector.
    #[error("zero state has no ray")]
    ZeroState,

    #[error("axis must be a unit vector, got length {norm}")]
    NonUnitAxis { norm: f64 },

    #[error("matrix is not Hermitian (max deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("determinant must be 1, got {re}{im:+}i")]
    Determinant { re: f64, im: f64 },

    #[error("singular matrix cannot be normalized to unit determinant")]
    Singular,

    #[error("gamma index must be in 0..=3, got {0}")]
    GammaIndex(usize),

    #[error("{what} must lie in {min}..={max}, got {got}")]
    OutOfRange {
        what: &'static str,
        min: usize,
        max: usize,
        got: usize,
    },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("sample count must be at least 1")]
    NoSamples,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
