use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension must be at least {min}, got {found}")]
    DimensionTooSmall { min: usize, found: usize },

    #[error("vector norm {norm} is not within tolerance of 1")]
    NotNormalized { norm: f64 },

    #[error("zero vector cannot be normalized")]
    ZeroVector,

    #[error("states are orthogonal (|overlap| = {overlap:e})")]
    Orthogonal { overlap: f64 },

    #[error("end states coincide (overlap = {overlap})")]
    IdenticalStates { overlap: f64 },

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("invalid curve: {0}")]
    InvalidCurve(String),

    #[error("too few samples: need at least {min}, got {found}")]
    TooFewSamples { min: usize, found: usize },

    #[error("grid is not uniform")]
    NonUniformGrid,

    #[error("points are collinear or coincident; no unique circle")]
    Collinear,

    #[error("end states are not in degenerate canonical form: {0}")]
    NotCanonical(String),

    #[error("singular parameterization at s = {0}")]
    SingularParameterization(f64),

    #[error("profile violates boundary conditions: {0}")]
    BoundaryViolation(String),

    #[error("invalid profile function: {0}")]
    InvalidProfile(String),

    #[error("root finding failed: {0}")]
    RootFinding(String),
}

pub type Result<T> = std::result::Result<T, Error>;
