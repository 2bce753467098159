//! High-order shock-capturing reconstruction in the TENO-M family.
//!
//! Candidate stencils of incremental width are classified as smooth or
//! nonsmooth by a sharp cut-off on normalized scale-separated smoothness
//! indicators. TENO discards nonsmooth candidates and renormalizes the linear
//! weights; TENO-M instead replaces them with a limited flux (Van Albada,
//! fifth-order TVD or monotonicity-preserving) and keeps the optimal linear
//! weights. Around the reconstruction the crate provides a conservative
//! finite-difference solver for scalar advection and the 1D/2D compressible
//! Euler equations, and an approximate-dispersion-relation analyzer.
//!
//! Inner loops (interface sweeps, 2D row/column sweeps, wavenumber sweeps)
//! run on rayon when the `parallel` feature is enabled and
//! [`Execution::Parallel`] is selected; results are bitwise identical to the
//! sequential path.

pub mod adr;
pub mod error;
pub mod euler;
pub mod flux;
pub mod integrator;
pub mod limiter;
pub mod mesh;
pub mod parallel;
pub mod scheme;
pub mod stencil;

mod smoothness_tables;

pub use error::{Error, Result};
pub use euler::{Euler1d, Euler2d, LinearAdvection, System};
pub use flux::FluxKind;
pub use integrator::{Solver, SourceSpec, TimeConfig};
pub use limiter::{Curvature, LimiterKind, MpParams};
pub use mesh::{Axis, Boundary, BoundarySpec, Field, UniformGrid};
pub use parallel::Execution;
pub use scheme::{CtMode, Family, SchemeConfig};
