use thiserror::Error;

/// Errors raised by the reconstruction kernels and the solver.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("candidate index {index} out of range for a {order}-point scheme")]
    CandidateOutOfRange { index: usize, order: usize },
    #[error("unsupported stencil order {0}")]
    UnsupportedOrder(usize),
    #[error("window has {got} points, expected {expected}")]
    WindowLength { expected: usize, got: usize },
    #[error("invalid scheme configuration: {0}")]
    InvalidScheme(String),
    #[error("unknown {what} `{name}`")]
    Unknown { what: &'static str, name: String },
    #[error("periodic boundary on the {axis} axis must be set on both sides")]
    PeriodicPairing { axis: &'static str },
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("invalid boundary: {0}")]
    InvalidBoundary(String),
    #[error("positivity violation: {0}")]
    Positivity(String),
    #[error("non-finite value after RK stage {stage} in cell {cell}")]
    NonFinite { stage: usize, cell: usize },
    #[error("invalid time step: {0}")]
    InvalidTimeStep(String),
    #[error("step limit of {0} reached before the end time")]
    StepLimit(usize),
    #[error("invalid source term: {0}")]
    InvalidSource(String),
    #[error("wavenumber {0} is not resolvable on the probe grid")]
    InvalidWavenumber(f64),
    #[error("mode amplitude fell below round-off at wavenumber {0}")]
    AmplitudeLost(f64),
    #[error("internal error: every candidate stencil was cut off")]
    AllCandidatesCut,
}

pub type Result<T> = std::result::Result<T, Error>;
