use thiserror::Error;

/// Errors raised by bound evaluation, optimization, and the empirical layer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid combination: {0}")]
    InvalidSpec(String),

    #[error("invalid threshold ladder: {0}")]
    InvalidLadder(String),

    #[error("allocation has {got} ladder entries but the ladder needs {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("allocation violates budget: total mass {total} exceeds {budget}")]
    BudgetExceeded { total: f64, budget: f64 },

    #[error("{name} = {value} is outside the allowed domain ({domain})")]
    Domain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("shift t = {value} has the wrong sign: this bound requires {required}")]
    ShiftSign { value: f64, required: &'static str },

    #[error("no sign change of {family} on [{lo}, {hi}]")]
    NoSignChange { family: String, lo: f64, hi: f64 },

    #[error("coefficient overflow in {arithmetic} arithmetic at limit {limit}")]
    Overflow {
        arithmetic: &'static str,
        limit: usize,
    },

    #[error("data integrity: {0}")]
    DataIntegrity(String),

    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    #[error("no primes up to {limit} pass the filter {filter}")]
    EmptyFilter { limit: u64, filter: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
