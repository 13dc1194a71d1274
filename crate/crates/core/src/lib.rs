//! Optimal symmetric 1→2 cloning of a qubit ensemble made of two pairs of
//! orthogonal states.
//!
//! The crate is organised bottom-up:
//!
//! - [`linalg`] and [`bloch`]: small dense complex matrices (dimension 1, 2,
//!   4 or 8), Kronecker products, partial traces and Bloch-vector conversion.
//! - [`ensemble`]: the four input states parametrized by one angle `phi`.
//! - [`cloner`]: the cloning isometry, its simulation, and the closed-form
//!   fidelity and shrinking factors.
//! - [`optimizer`]: closed-form optimum, stationarity residuals and an
//!   independent grid-search maximizer.
//! - [`report`]: a combined per-angle summary used by the command line tool.
//!
//! ```
//! use twopair_core::optimizer::optimal_fidelity;
//!
//! let f = optimal_fidelity(std::f64::consts::FRAC_PI_4).unwrap();
//! assert!((f - 0.8535533905932737).abs() < 1e-15);
//! ```

#![forbid(unsafe_code)]

pub mod bloch;
pub mod cloner;
pub mod ensemble;
pub mod error;
pub mod linalg;
pub mod optimizer;
pub mod report;

pub use bloch::{bloch_from_density, density_from_bloch, BlochVector};
pub use cloner::{
    apply_cloner, build_isometry, copy_state, fidelity, fidelity_closed_form, fidelity_general, shrinking_factors,
    AncillaAssignment, ClonerCoefficients, CloningIsometry, OverlapSet, ShrinkingFactors,
};
pub use ensemble::{angle_grid, make_ensemble, pair_structure, EnsembleAngle, FourStateEnsemble, PairStructure};
pub use error::{Error, Result};
pub use linalg::{partial_trace, tensor, Complex64, ComplexMatrix};
pub use optimizer::{
    lagrange_residual, numeric_optimize, optimal_coefficients, optimal_fidelity, optimal_shrinking, LagrangeResidual,
    NumericSearchReport, OptimalSolution,
};
pub use report::CloneReport;
