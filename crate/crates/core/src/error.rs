use thiserror::Error;

/// Errors returned by the wedge library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum WedgeError {
    #[error("parameter `{name}` is not finite: {value}")]
    NonFinite { name: &'static str, value: f64 },

    #[error("series evaluation needs all four parameters positive, got ({a1}, {b1}; {a2}, {b2})")]
    NonPositive { a1: f64, b1: f64, a2: f64, b2: f64 },

    #[error("number of terms must be in {min}..={max}, got {got}")]
    TermsOutOfRange { got: usize, min: usize, max: usize },

    #[error("{what} must be positive, got {value}")]
    NotPositive { what: &'static str, value: f64 },

    #[error("no partial sum up to {max_terms} terms is within {eps:e} of the reference")]
    NoConvergence { eps: f64, max_terms: usize },

    #[error("row {row}: column `{column}` is not finite ({value})")]
    BadRow { row: usize, column: &'static str, value: f64 },

    #[error("column lengths differ: a1={a1}, b1={b1}, a2={a2}, b2={b2}")]
    ColumnLength { a1: usize, b1: usize, a2: usize, b2: usize },

    #[error("invalid boundary: {0}")]
    Boundary(String),

    #[error("invalid worker count: {0}")]
    Workers(String),

    #[error("cannot allocate {rows} rows: out of memory")]
    OutOfMemory { rows: usize },

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T, E = WedgeError> = std::result::Result<T, E>;
