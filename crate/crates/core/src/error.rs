use thiserror::Error;

use crate::qseries::DimVector;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("truncation bounds differ: {left} vs {right}")]
    TruncationMismatch { left: u32, right: u32 },

    #[error("series have different vertex counts: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("constant term {0} is not an invertible monomial")]
    NonInvertibleConstant(String),

    #[error("plethystic exponential needs a zero constant term, found {0}")]
    NonzeroConstantTerm(String),

    #[error("plethystic logarithm needs constant term 1, found {0}")]
    ConstantTermNotOne(String),

    #[error("expected a vector of length {expected}, found length {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("arrow matrix is not symmetric at ({i},{j}): {a_ij} arrows vs {a_ji} back")]
    AsymmetricQuiver { i: usize, j: usize, a_ij: u32, a_ji: u32 },

    #[error("arrow matrix must be {r}x{r}")]
    MalformedArrows { r: usize },

    #[error("quiver needs at least one vertex")]
    EmptyQuiver,

    #[error("vertex index {index} out of range for {count} vertices")]
    InvalidVertex { index: usize, count: usize },

    #[error("polynomial degree {0} must be even and non-negative")]
    OddDegree(i64),

    #[error("weight window {window} lies below the minimal twice-weight {min_twice_weight} of V_{d}")]
    WindowTooSmall {
        d: DimVector,
        min_twice_weight: i64,
        window: i64,
    },

    #[error("shuffle sum left a nonzero remainder after dividing out the Vandermonde factor")]
    DenominatorNotCleared,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
