use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("singular matrix in {0}")]
    Singular(&'static str),

    #[error("projective comparison of two zero matrices is undefined")]
    BothZero,

    #[error("zero parameter or denominator: {0}")]
    ZeroParameter(String),

    #[error("constraint violated: {relation} (residual {residual})")]
    ConstraintViolated { relation: String, residual: String },

    #[error("no exact square root of {0}")]
    NoExactSqrt(String),

    #[error("exact powers require an integer exponent, got {0}")]
    NonIntegerExponent(String),

    #[error("elliptic modulus must satisfy 0 <= k < 1, got {0}")]
    ModulusOutOfRange(f64),

    #[error("determinant of a gauge factor must be 1, got {0}")]
    NotUnimodular(String),

    #[error("root selection failed: {0}")]
    RootSelection(String),

    #[error("orbit step word is empty")]
    EmptyWord,

    #[error("invalid generator letter {0:?} (expected a, b or c)")]
    BadGenerator(String),
}

pub type Result<T> = std::result::Result<T, Error>;
