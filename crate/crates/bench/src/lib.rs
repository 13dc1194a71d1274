//! Fixtures shared by the benchmarks.

use twopair_core::{
    build_isometry, make_ensemble, optimal_coefficients, AncillaAssignment, CloningIsometry, FourStateEnsemble,
};

/// Ensemble and optimal isometry at `phi`.
pub fn optimal_setup(phi: f64) -> (FourStateEnsemble, CloningIsometry) {
    let ensemble = make_ensemble(phi).expect("phi in range");
    let coeffs = optimal_coefficients(phi).expect("phi in range");
    let v = build_isometry(&coeffs, &AncillaAssignment::default()).expect("feasible coefficients");
    (ensemble, v)
}
