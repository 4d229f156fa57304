use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degenerate hyperplane: all coefficients are zero")]
    DegenerateHyperplane,
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid grid shape: n={n}, d={d} (both must be at least 1)")]
    InvalidShape { n: u32, d: u32 },
    #[error("point {0:?} does not lie in the grid")]
    PointOutsideGrid(Vec<u32>),
    #[error("coefficient does not fit in 64 bits")]
    CoefficientOverflow,
    #[error("negative weight or mass: {0}")]
    NegativeValue(String),
    #[error("unsupported parameter: {0}")]
    Unsupported(String),
    #[error("n = {n} is too small for the block construction (needs n >= {needed})")]
    GridTooSmall { n: u32, needed: u32 },
    #[error("linear program is infeasible: a demand row has no usable column")]
    Infeasible,
    #[error("integer program constraint violated: {0}")]
    ConstraintViolated(String),
    #[error("search space too large: {0}")]
    SearchTooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
