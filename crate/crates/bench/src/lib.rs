//! Benchmark cases for the tenom solver: case registry, reference solutions,
//! error norms and run artifacts.

pub mod cases;
pub mod error;
pub mod norms;
pub mod reference;
pub mod runner;
pub mod solution;

pub use cases::{case_registry, find_case, CaseSpec};
pub use error::{BenchError, Result};
pub use norms::{error_norms, ConvergenceRow, ErrorNorms};
pub use runner::{convergence_table, run, simulate, Overrides, RunOptions, RunOutcome, RunReport};
pub use solution::Solution;
