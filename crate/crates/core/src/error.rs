use thiserror::Error;

/// Everything that can go wrong constructing domain objects or running
/// the solvers. Numeric contracts (accuracy, convergence) surface here;
/// programming errors (index bugs) panic instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("{what} = {value} outside sampled range [{lo}, {hi}]")]
    OutOfRange {
        what: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("insufficient nodes: need at least {needed}, got {got}")]
    InsufficientNodes { needed: usize, got: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("singular matrix (condition estimate {condition:.3e})")]
    SingularMatrix { condition: f64 },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("identical inputs: difference norm is zero")]
    IdenticalInputs,

    #[error("no convergence after {iterations} iterations (last relative step {last_step:.3e})")]
    NoConvergence { iterations: usize, last_step: f64 },

    #[error("numeric failure: {0}")]
    Numeric(String),
}

pub type Result<T> = std::result::Result<T, Error>;
