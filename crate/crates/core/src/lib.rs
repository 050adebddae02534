//! Open-quantum-system simulation: deterministic Lindblad evolution of
//! ensemble states and its stochastic unraveling into quantum-jump
//! trajectories of individual systems.
//!
//! The crate is organized around the pipeline
//!
//! ```text
//!   qstate      finite-dimensional operator algebra (Hermitian ops,
//!               density matrices, projectors, spectral decompositions)
//!   lindblad    the generator L[Ω] = -i[H,Ω] + α Σ (TΩT† - ½{Ω,T†T})
//!               and a fixed-step RK4 master-equation integrator
//!   unravel     stochastic trajectories of individual systems: the
//!               spectral-step sampler and the waiting-time sampler
//!   doubleslit  a grid-discretized cavity with a two-slit barrier and
//!               screen pixels acting as jump targets
//!   ensemble    parallel Monte Carlo over trajectories, hit histograms,
//!               comparison against the master equation
//! ```

pub mod doubleslit;
pub mod ensemble;
pub mod error;
pub mod lindblad;
pub mod qstate;
pub mod sparse;
pub mod unravel;

pub use error::{Error, Result};

/// Shorthand for the complex scalar used throughout.
pub type C64 = num_complex::Complex64;
