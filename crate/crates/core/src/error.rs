use thiserror::Error;

use crate::exactnum::Backend;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("backend mismatch: cannot combine {0} and {1} scalars")]
    BackendMismatch(Backend, Backend),

    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("root finding did not converge after {iterations} iterations (max residual {max_residual:e})")]
    RootsDidNotConverge { iterations: usize, max_residual: f64 },

    #[error("roots of the companion polynomial are not Gaussian rationals")]
    RootsNotExact,

    #[error("element does not generate the algebra")]
    NotAGenerator,

    #[error("algebra is not cyclic")]
    NotCyclic,

    #[error("operation requires dimension {expected}, found {found}")]
    WrongDimension { expected: usize, found: usize },

    #[error("invalid scalar literal {0:?}")]
    ScalarParse(String),

    #[error("invalid tolerance: {0}")]
    InvalidTolerance(String),

    #[error("subspace is not closed under the product")]
    NotClosed,

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
