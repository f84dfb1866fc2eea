use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{context}: input contains a non-finite value")]
    NonFinite { context: &'static str },

    #[error("{context}: dimension mismatch (expected {expected}, found {found})")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("{context}: need at least {needed} samples, got {got}")]
    TooFewSamples {
        context: &'static str,
        needed: usize,
        got: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("neighbor graph is disconnected; smallest component has {size} points: {members:?}")]
    DisconnectedGraph { size: usize, members: Vec<usize> },

    #[error("{what} did not converge (residual {residual:.3e})")]
    NoConvergence { what: &'static str, residual: f64 },

    #[error("degenerate feature-space variance: all kernel eigenvalues below cutoff")]
    DegenerateSpectrum,

    #[error("training labels contain a single class only")]
    SingleClass,

    #[error("train/test split failed: {0}")]
    SplitFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
