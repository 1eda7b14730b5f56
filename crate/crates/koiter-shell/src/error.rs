//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Tangent vectors are (numerically) linearly dependent at a chart point.
    #[error("degenerate chart: area weight {w:.3e} below threshold {eps:.1e} at y = ({y1}, {y2})")]
    DegenerateChart { w: f64, eps: f64, y1: f64, y2: f64 },

    #[error("grid size must be even and at least 8, got {n1} x {n2}")]
    BadGridSize { n1: usize, n2: usize },

    #[error("field dimensions {got_n1}x{got_n2} do not match grid {n1}x{n2}")]
    DimensionMismatch {
        got_n1: usize,
        got_n2: usize,
        n1: usize,
        n2: usize,
    },

    #[error("bad field spec '{spec}': {reason}")]
    BadFieldSpec { spec: String, reason: String },

    #[error("energy evaluation produced a non-finite value in {context}")]
    NonFiniteEnergy { context: String },

    #[error("state became non-finite at step {step} (t = {t})")]
    NonFiniteState { step: u64, t: f64 },

    #[error("degenerate window for growth-rate fit: {reason}")]
    DegenerateWindow { reason: String },

    #[error("path {path} failed: {source}")]
    PathFailed {
        path: u64,
        #[source]
        source: Box<Error>,
    },

    #[error("config parse error at line {line}: {msg}")]
    ParseError { line: usize, msg: String },

    #[error("config validation failed: {constraint}")]
    ValidationError { constraint: String },

    #[error("bad dump format: {0}")]
    FormatError(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Exit code convention: 1 for configuration/validation problems,
    /// 2 for runtime numerical failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ParseError { .. }
            | Error::ValidationError { .. }
            | Error::BadFieldSpec { .. }
            | Error::BadGridSize { .. }
            | Error::DimensionMismatch { .. } => 1,
            Error::PathFailed { source, .. } => source.exit_code(),
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
