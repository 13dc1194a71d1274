//! Runtime verification of every invariant on an angle grid.
//!
//! Each property reports the largest deviation observed on the grid, the
//! angle where it occurred and the threshold it is held to. Closed-form and
//! simulation identities use `tolerance`; agreement with the numeric oracle
//! uses `100 * tolerance`, which gives 1e-10 and 1e-8 with the defaults.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use twopair_core::cloner::{channel_bloch, simulated_fidelity};
use twopair_core::{
    angle_grid, apply_cloner, bloch_from_density, build_isometry, copy_state, density_from_bloch, fidelity_closed_form,
    fidelity_general, make_ensemble, numeric_optimize, optimal_coefficients, optimal_fidelity, optimal_shrinking,
    pair_structure, shrinking_factors, AncillaAssignment, BlochVector, OptimalSolution, OverlapSet,
};

use crate::error::CliError;

/// Oracle tolerance relative to the identity tolerance.
pub const ORACLE_FACTOR: f64 = 100.0;
/// Maximum number of angles handed to the numeric oracle.
pub const ORACLE_POINTS: usize = 25;
/// Per-coefficient agreement required of the numeric oracle.
pub const ORACLE_COEFF_TOL: f64 = 1e-4;
const ORACLE_REFINE_TOL: f64 = 1e-13;
/// x–z plane probe directions per angle for the channel check.
const CHANNEL_PROBES: usize = 8;

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub tolerance: f64,
    pub grid: usize,
    pub oracle_grid: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            tolerance: 1e-10,
            grid: 1000,
            oracle_grid: 256,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropertyResult {
    pub name: &'static str,
    pub max_deviation: f64,
    pub worst_phi: f64,
    pub threshold: f64,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.max_deviation <= self.threshold
    }

    pub fn line(&self) -> String {
        format!(
            "{}  {:<44} max deviation {:.3e} (threshold {:.1e}) at phi = {:.6}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.max_deviation,
            self.threshold,
            self.worst_phi
        )
    }
}

/// Running maximum of a deviation over the grid.
struct Tracker {
    name: &'static str,
    threshold: f64,
    worst: f64,
    at: f64,
}

impl Tracker {
    fn new(name: &'static str, threshold: f64) -> Self {
        Self {
            name,
            threshold,
            worst: 0.0,
            at: f64::NAN,
        }
    }

    fn record(&mut self, phi: f64, deviation: f64) {
        // NaN deviations must fail the property.
        let d = if deviation.is_nan() { f64::INFINITY } else { deviation };
        if d > self.worst || self.at.is_nan() {
            self.worst = self.worst.max(d);
            self.at = phi;
        }
    }

    fn finish(self) -> PropertyResult {
        PropertyResult {
            name: self.name,
            max_deviation: self.worst,
            worst_phi: if self.at.is_nan() { 0.0 } else { self.at },
            threshold: self.threshold,
        }
    }
}

pub fn run_verify(config: &VerifyConfig) -> Result<Vec<PropertyResult>, CliError> {
    if config.tolerance.is_nan() || config.tolerance <= 0.0 {
        return Err(CliError::Usage(format!(
            "tolerance must be positive, got {}",
            config.tolerance
        )));
    }
    if config.grid < 2 {
        return Err(CliError::Usage(format!("grid must be at least 2, got {}", config.grid)));
    }
    let tol = config.tolerance;
    let anc = AncillaAssignment::default();

    let mut ensemble = Tracker::new("ensemble: norms, pairs, Bloch pattern", tol);
    let mut unitarity = Tracker::new("optimum: a^2 + 2b^2 + c^2 = 1", tol);
    let mut isometry = Tracker::new("cloner: V^dagger V = 1", tol);
    let mut sim_vs_closed = Tracker::new("fidelity: simulation = closed-form optimum", tol);
    let mut spread = Tracker::new("fidelity: four states agree", tol);
    let mut copies = Tracker::new("cloner: copy 1 = copy 2", tol);
    let mut overlap_form = Tracker::new("fidelity: overlap form = closed form", tol);
    let mut chain = Tracker::new("fidelity: F_opt = closed form of optimum", tol);
    let mut eta_norm = Tracker::new("shrinking: eta_x^2 + eta_z^2 = 1", tol);
    let mut eta_reflect = Tracker::new("shrinking: eta_x(phi) = eta_z(pi/2 - phi)", tol);
    let mut eta_coeffs = Tracker::new("shrinking: closed form = from coefficients", tol);
    let mut channel = Tracker::new("shrinking: channel maps m to (eta_x mx, 0, eta_z mz)", tol);
    let mut stationarity = Tracker::new("optimum: Lagrange residuals vanish", tol);

    let grid = angle_grid(config.grid);
    for &phi in &grid {
        let e = make_ensemble(phi)?;
        let angle = e.angle();

        let ps = pair_structure(&e);
        let (s, c) = phi.sin_cos();
        let pattern = [(s, c), (-s, c), (-s, -c), (s, -c)];
        let mut dev = ps.max_pair_overlap;
        for ((psi, m), (x, z)) in e.states().iter().zip(e.bloch()).zip(pattern) {
            dev = dev.max((psi.norm() - 1.0).abs());
            dev = dev.max(m.y().abs()).max((m.x() - x).abs()).max((m.z() - z).abs());
            dev = dev.max(bloch_from_density(&psi.projector()?)?.max_abs_diff(m));
        }
        ensemble.record(phi, dev);

        let coeffs = optimal_coefficients(phi)?;
        unitarity.record(phi, coeffs.unitarity_residual().abs());

        let v = build_isometry(&coeffs, &anc)?;
        isometry.record(phi, v.isometry_defect());

        let f_opt = optimal_fidelity(phi)?;
        let mut fids = [0.0; 4];
        let mut copy_dev: f64 = 0.0;
        for (slot, psi) in fids.iter_mut().zip(e.states()) {
            let rho = apply_cloner(&v, psi)?;
            let c1 = copy_state(&rho, 1)?;
            copy_dev = copy_dev.max(c1.max_abs_diff(&copy_state(&rho, 2)?)?);
            *slot = twopair_core::fidelity(psi, &c1)?;
        }
        copies.record(phi, copy_dev);
        sim_vs_closed.record(phi, fids.iter().map(|f| (f - f_opt).abs()).fold(0.0, f64::max));
        let hi = fids.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let lo = fids.iter().copied().fold(f64::INFINITY, f64::min);
        spread.record(phi, hi - lo);

        let closed = fidelity_closed_form(&coeffs, angle);
        overlap_form.record(
            phi,
            (fidelity_general(&coeffs, angle, &OverlapSet::MAXIMAL) - closed).abs(),
        );
        chain.record(phi, (f_opt - closed).abs());

        let eta = optimal_shrinking(phi)?;
        eta_norm.record(phi, (eta.eta_x.powi(2) + eta.eta_z.powi(2) - 1.0).abs());
        let mirrored = optimal_shrinking(angle.complement().radians())?;
        eta_reflect.record(phi, (eta.eta_x - mirrored.eta_z).abs());
        let from_coeffs = shrinking_factors(&coeffs);
        eta_coeffs.record(
            phi,
            (eta.eta_x - from_coeffs.eta_x)
                .abs()
                .max((eta.eta_z - from_coeffs.eta_z).abs()),
        );

        let mut ch: f64 = 0.0;
        for k in 0..CHANNEL_PROBES {
            let theta = std::f64::consts::TAU * (k as f64 + 0.5) / CHANNEL_PROBES as f64;
            let m = BlochVector::in_xz_plane(theta);
            let out = channel_bloch(&v, &m)?;
            ch = ch
                .max((out.x() - from_coeffs.eta_x * m.x()).abs())
                .max(out.y().abs())
                .max((out.z() - from_coeffs.eta_z * m.z()).abs());
        }
        channel.record(phi, ch);

        let sol = OptimalSolution::at(phi)?;
        stationarity.record(phi, sol.residual().map_or(f64::INFINITY, |r| r.max_abs()));
    }

    let mut results: Vec<PropertyResult> = [
        ensemble,
        unitarity,
        isometry,
        sim_vs_closed,
        spread,
        copies,
        overlap_form,
        chain,
        eta_norm,
        eta_reflect,
        eta_coeffs,
        channel,
        stationarity,
    ]
    .into_iter()
    .map(Tracker::finish)
    .collect();

    results.push(perfect_cloning_limits(tol)?);
    results.push(worst_case_location(&grid)?);
    results.extend(oracle_agreement(config)?);
    Ok(results)
}

/// `F_opt = 1` at both endpoints and the copy reproduces the input at `phi = 0`.
fn perfect_cloning_limits(tol: f64) -> Result<PropertyResult, CliError> {
    let mut t = Tracker::new("limits: perfect cloning at phi = 0, pi/2", tol);
    for phi in [0.0, FRAC_PI_2] {
        t.record(phi, (optimal_fidelity(phi)? - 1.0).abs());
    }
    let e = make_ensemble(0.0)?;
    let v = build_isometry(&optimal_coefficients(0.0)?, &AncillaAssignment::default())?;
    for (psi, m) in e.states().iter().zip(e.bloch()) {
        let copy = copy_state(&apply_cloner(&v, psi)?, 1)?;
        t.record(0.0, copy.max_abs_diff(&density_from_bloch(m))?);
        t.record(0.0, (simulated_fidelity(&v, psi)? - 1.0).abs());
    }
    Ok(t.finish())
}

/// Grid argmin of `F_opt` must fall within one grid step of `pi/4`.
fn worst_case_location(grid: &[f64]) -> Result<PropertyResult, CliError> {
    let step = FRAC_PI_2 / (grid.len() - 1) as f64;
    let mut best = (f64::NAN, f64::INFINITY);
    for &phi in grid {
        let f = optimal_fidelity(phi)?;
        if f < best.1 {
            best = (phi, f);
        }
    }
    Ok(PropertyResult {
        name: "optimum: worst case at pi/4",
        max_deviation: (best.0 - FRAC_PI_4).abs(),
        worst_phi: best.0,
        threshold: step * (1.0 + 1e-12),
    })
}

fn oracle_agreement(config: &VerifyConfig) -> Result<[PropertyResult; 2], CliError> {
    let mut fid = Tracker::new("oracle: numeric maximum = F_opt", config.tolerance * ORACLE_FACTOR);
    let mut coeff = Tracker::new("oracle: numeric maximizer = optimal (a, b, c)", ORACLE_COEFF_TOL);
    for phi in angle_grid(config.grid.min(ORACLE_POINTS)) {
        let rep = numeric_optimize(phi, config.oracle_grid, ORACLE_REFINE_TOL)?;
        let f_opt = optimal_fidelity(phi)?;
        fid.record(phi, (rep.best_fidelity - f_opt).abs());
        let opt = optimal_coefficients(phi)?;
        let c = rep.best_coeffs;
        coeff.record(
            phi,
            (c.a() - opt.a())
                .abs()
                .max((c.b() - opt.b()).abs())
                .max((c.c() - opt.c()).abs()),
        );
    }
    Ok([fid.finish(), coeff.finish()])
}

/// Prints one line per property; `Err` if any property failed.
pub fn report(results: &[PropertyResult]) -> (String, Result<(), CliError>) {
    let mut text = String::new();
    for r in results {
        text.push_str(&r.line());
        text.push('\n');
    }
    let failed: Vec<&PropertyResult> = results.iter().filter(|r| !r.passed()).collect();
    let outcome = if failed.is_empty() {
        text.push_str(&format!("all {} properties passed\n", results.len()));
        Ok(())
    } else {
        let first = failed[0];
        Err(CliError::Verification(format!(
            "{} of {} properties failed; first: {} (deviation {:.3e} at phi = {})",
            failed.len(),
            results.len(),
            first.name,
            first.max_deviation,
            first.worst_phi
        )))
    };
    (text, outcome)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endpoint_grid_passes() {
        let results = run_verify(&VerifyConfig {
            grid: 2,
            ..VerifyConfig::default()
        })
        .unwrap();
        assert!(results.iter().all(PropertyResult::passed), "{results:#?}");
    }

    #[test]
    fn sub_epsilon_tolerance_fails() {
        let results = run_verify(&VerifyConfig {
            tolerance: 1e-16,
            grid: 50,
            oracle_grid: 64,
        })
        .unwrap();
        let (_, outcome) = report(&results);
        assert!(matches!(outcome, Err(CliError::Verification(_))));
    }

    #[test]
    fn rejects_nonpositive_tolerance() {
        let cfg = VerifyConfig {
            tolerance: 0.0,
            ..VerifyConfig::default()
        };
        assert!(matches!(run_verify(&cfg), Err(CliError::Usage(_))));
    }
}
