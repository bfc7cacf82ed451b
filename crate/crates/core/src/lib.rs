//! Finite-volume laboratory for the 1-D compressible Euler and Navier-Stokes
//! equations built around kinetic-energy-preserving and entropy-conservative
//! central fluxes, with scalar and matrix dissipation, plus 2-D
//! normal-direction flux kernels.

// `!(x > 0.0)` is used on purpose so that NaN fails validation.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod config;
pub mod diagnostics;
pub mod dissipation1d;
pub mod error;
pub mod flux1d;
pub mod flux2d;
pub mod presets;
pub mod reconstruction;
pub mod riemann;
pub mod run;
pub mod spatial;
pub mod thermo;
pub mod timeint;

pub use error::{Result, SolverError};
pub use flux1d::{CentralFlux, FluxVector};
pub use thermo::{ConsState, EntropyVars, GasModel, PrimState, ViscosityLaw};
