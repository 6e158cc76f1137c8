use thiserror::Error;

/// Errors raised by the exact kernels and the point/automorphism layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CmError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,

    #[error("matrix is singular")]
    Singular,

    #[error("[X,Y] + I has rank {rank}, expected 1")]
    RankConditionViolated { rank: usize },

    #[error("diagonal entries are not pairwise distinct")]
    DuplicateEigenvalue,

    #[error("scaling factor must be nonzero")]
    ZeroScale,

    #[error("size {0} is out of range: {1}")]
    InvalidSize(usize, &'static str),

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),

    #[error("intertwiner space of a point with itself has dimension {dim}, expected 1")]
    IntertwinerAnomaly { dim: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, CmError>;
