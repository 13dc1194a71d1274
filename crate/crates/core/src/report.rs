//! Everything known about one cloner at one ensemble angle, computed both by
//! simulation and from the closed formulas.

use crate::bloch::{bloch_from_density, BlochVector};
use crate::cloner::{
    apply_cloner, build_isometry, copy_state, fidelity, fidelity_closed_form, fidelity_general, measured_shrinking,
    shrinking_factors, AncillaAssignment, ClonerCoefficients, ShrinkingFactors,
};
use crate::ensemble::{EnsembleAngle, FourStateEnsemble};
use crate::error::Result;
use crate::linalg::ComplexMatrix;
use crate::optimizer::{
    lagrange_residual, optimal_coefficients, optimal_fidelity, recover_multiplier, LagrangeResidual,
};

/// Simulation outcome for one input state.
#[derive(Debug, Clone, PartialEq)]
pub struct StateReport {
    pub input_bloch: BlochVector,
    pub copy1: ComplexMatrix,
    pub copy2: ComplexMatrix,
    pub copy_bloch: BlochVector,
    pub fidelity: f64,
    /// Entrywise distance between the two copies.
    pub copy_mismatch: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CloneReport {
    pub ensemble: FourStateEnsemble,
    pub coeffs: ClonerCoefficients,
    /// Whether `coeffs` are the closed-form optimum for this angle.
    pub optimal: bool,
    pub states: [StateReport; 4],
    pub closed_form_fidelity: f64,
    pub general_fidelity: f64,
    pub optimal_fidelity: f64,
    pub formula_shrinking: ShrinkingFactors,
    /// `[eta_x, eta_y, eta_z]` measured on the simulated channel.
    pub simulated_shrinking: [f64; 3],
    pub lambda: Option<f64>,
    pub residual: Option<LagrangeResidual>,
    pub isometry_defect: f64,
}

impl CloneReport {
    /// Uses the closed-form optimum unless `coeffs` is given.
    pub fn compute(phi: f64, coeffs: Option<ClonerCoefficients>) -> Result<Self> {
        let angle = EnsembleAngle::new(phi)?;
        let ensemble = FourStateEnsemble::new(angle);
        let optimal = coeffs.is_none();
        let coeffs = match coeffs {
            Some(c) => c,
            None => optimal_coefficients(phi)?,
        };
        let anc = AncillaAssignment::default();
        let iso = build_isometry(&coeffs, &anc)?;

        let mut states = Vec::with_capacity(4);
        for (psi, m) in ensemble.states().iter().zip(ensemble.bloch()) {
            let rho = apply_cloner(&iso, psi)?;
            let copy1 = copy_state(&rho, 1)?;
            let copy2 = copy_state(&rho, 2)?;
            states.push(StateReport {
                input_bloch: *m,
                copy_bloch: bloch_from_density(&copy1)?,
                fidelity: fidelity(psi, &copy1)?,
                copy_mismatch: copy1.max_abs_diff(&copy2)?,
                copy1,
                copy2,
            });
        }
        let states: [StateReport; 4] = states.try_into().expect("four states");

        let lambda = recover_multiplier(&coeffs, phi)?;
        let residual = lambda.map(|l| lagrange_residual(&coeffs, l, phi)).transpose()?;

        Ok(Self {
            closed_form_fidelity: fidelity_closed_form(&coeffs, angle),
            general_fidelity: fidelity_general(&coeffs, angle, &anc.overlaps()),
            optimal_fidelity: optimal_fidelity(phi)?,
            formula_shrinking: shrinking_factors(&coeffs),
            simulated_shrinking: measured_shrinking(&iso)?,
            isometry_defect: iso.isometry_defect(),
            ensemble,
            coeffs,
            optimal,
            states,
            lambda,
            residual,
        })
    }

    pub fn phi(&self) -> f64 {
        self.ensemble.angle().radians()
    }

    /// Largest pairwise difference among the four simulated fidelities.
    pub fn fidelity_spread(&self) -> f64 {
        let f = self.states.iter().map(|s| s.fidelity);
        let hi = f.clone().fold(f64::NEG_INFINITY, f64::max);
        let lo = f.fold(f64::INFINITY, f64::min);
        hi - lo
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};

    #[test]
    fn bb84_report() {
        let r = CloneReport::compute(FRAC_PI_4, None).unwrap();
        assert!(r.optimal);
        for s in &r.states {
            assert_abs_diff_eq!(s.fidelity, 0.853_553_390_593_273_8, epsilon = 1e-12);
            assert!(s.copy_mismatch < 1e-12);
        }
        assert!(r.fidelity_spread() < 1e-12);
        assert_abs_diff_eq!(r.formula_shrinking.eta_x, FRAC_1_SQRT_2, epsilon = 1e-12);
        assert_abs_diff_eq!(r.simulated_shrinking[2], FRAC_1_SQRT_2, epsilon = 1e-12);
        assert!(r.residual.unwrap().max_abs() < 1e-12);
    }

    #[test]
    fn override_with_basis_copier() {
        let r = CloneReport::compute(0.3, Some(ClonerCoefficients::basis_copier())).unwrap();
        assert!(!r.optimal);
        let want = 0.5 + 0.5 * 0.3f64.cos().powi(2);
        assert_abs_diff_eq!(want, 0.956_334, epsilon = 1e-6);
        for s in &r.states {
            assert_abs_diff_eq!(s.fidelity, want, epsilon = 1e-12);
        }
        assert_abs_diff_eq!(r.closed_form_fidelity, want, epsilon = 1e-15);
    }
}
