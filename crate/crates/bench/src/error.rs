use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error(transparent)]
    Solver(#[from] tenom::Error),
    #[error("non-finite state in cell ({i}, {j}) during step {step} (t = {time})")]
    Instability { step: usize, time: f64, i: usize, j: usize },
    #[error("initial condition of `{case}` yields {got} values per cell, expected {expected}")]
    InitialState { case: String, expected: usize, got: usize },
    #[error("unknown case `{0}`")]
    UnknownCase(String),
    #[error("field shapes differ: expected {expected:?}, got {got:?}")]
    ShapeMismatch { expected: Vec<usize>, got: Vec<usize> },
    #[error("a convergence study needs at least two resolutions, got {0}")]
    TooFewLevels(usize),
    #[error("case `{0}` has no reference solution")]
    NoReference(String),
    #[error("invalid override: {0}")]
    InvalidOverride(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl BenchError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        BenchError::Io { path: path.into(), source }
    }

    /// Short machine-readable tag for the error line printed by the CLI.
    pub fn kind(&self) -> &'static str {
        match self {
            BenchError::Instability { .. } => "instability",
            BenchError::InitialState { .. } => "initial-state",
            BenchError::Solver(_) => "solver",
            BenchError::UnknownCase(_) => "unknown-case",
            BenchError::ShapeMismatch { .. } => "shape-mismatch",
            BenchError::TooFewLevels(_) => "too-few-levels",
            BenchError::NoReference(_) => "no-reference",
            BenchError::InvalidOverride(_) => "invalid-override",
            BenchError::Io { .. } => "io",
            BenchError::Json(_) => "json",
        }
    }
}

pub type Result<T> = std::result::Result<T, BenchError>;
