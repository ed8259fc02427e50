//! Numerical realization of the regular graph of parametric geometry of numbers.
//!
//! For a dimension `n` and parameter `λ ∈ [1/n, ∞]` the regular graph fixes
//! every classical and uniform exponent of simultaneous approximation
//! (`λ_{n,j}`, `ŵλ_{n,j}`) and, by duality, of linear forms (`w_{n,j}`,
//! `ŵw_{n,j}`). This crate computes those spectra, the sign changes of
//! `λ_{n,j}(λ) − 1/n`, and the upper bounds for uniform approximation that
//! follow if the regular graph is extremal.
//!
//! ```
//! use regraph::{lambda_spectrum, GraphParams};
//!
//! let spec = lambda_spectrum(&GraphParams::new(2, 1.0)?)?;
//! let golden = (5f64.sqrt() - 1.0) / 2.0;
//! assert!((spec.values[1] - golden).abs() < 1e-12);
//! # Ok::<(), regraph::Error>(())
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod error;
pub mod grid;
pub mod numerics;
pub mod regular_graph;
pub mod thresholds;
pub mod verify;

pub use bounds::{
    bound_report, conditional_bound, glueck_bound, mit_check, tau_delta, unconditional_bound,
    BoundReport, PointwiseBounds, TauDelta,
};
pub use error::{Error, Result};
pub use grid::SweepSpec;
pub use numerics::{bracket_scan, solve_monotone, Bracket, Monotonicity, RootResult};
pub use regular_graph::{
    dual_spectrum, f_aux, from_dual, lambda_spectrum, last_minimum, phi, psi_profile,
    relation_report, to_dual, vartheta, DualSpectrum, GraphParams, LambdaSpectrum, PsiProfile,
    RelationReport,
};
pub use thresholds::{
    chi, chi_prime_at_one, classify, schmidt_interval, sign_at, Classification, SchmidtInterval,
    ThresholdResult,
};
