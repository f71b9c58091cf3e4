use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("operator is not nilpotent")]
    NotNilpotent,

    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("diagonal bracket on basis vector {0}")]
    DiagonalBracket(usize),

    #[error("expected {expected} labels, got {found}")]
    LabelCount { expected: usize, found: usize },

    #[error("vector lies in the derived algebra")]
    VectorInDerivedAlgebra,

    #[error("subspace is not an ideal")]
    NotAnIdeal,

    #[error("dimension {n} is too small (minimum {min})")]
    DimensionTooSmall { n: usize, min: usize },

    #[error("unknown family g{0}")]
    UnknownFamily(usize),

    #[error("family g{family} is not defined in dimension {n}")]
    InadmissibleDimension { family: usize, n: usize },

    #[error("family g{0} requires the parameter alpha")]
    MissingParameter(usize),

    #[error("family g{0} takes no parameter")]
    UnexpectedParameter(usize),

    #[error("need 4 <= m <= k <= 2m-2, got m={m}, k={k}")]
    BoundsViolation { m: usize, k: usize },

    #[error("invalid simple-root subset: {0}")]
    InvalidSubset(String),

    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
