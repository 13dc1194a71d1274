//! Optimal cloner coefficients in closed form, the stationarity conditions
//! they satisfy, and a derivative-free grid search used to confirm them.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2};

use rayon::prelude::*;

use crate::cloner::{closed_form_raw, ClonerCoefficients, ShrinkingFactors};
use crate::ensemble::EnsembleAngle;
use crate::error::{Error, Result};

/// Smallest coarse grid accepted by [`numeric_optimize`].
pub const MIN_GRID_DENSITY: usize = 64;

/// Refinement rounds before [`numeric_optimize`] gives up.
pub const MAX_REFINEMENTS: usize = 64;

const MULTIPLIER_PIVOT: f64 = 1e-9;

/// `K = 1 / sqrt(sin^4 phi + cos^4 phi)`; bounded by `sqrt(2)`.
fn k_factor(sin2: f64, cos2: f64) -> f64 {
    1.0 / (sin2 * sin2 + cos2 * cos2).sqrt()
}

/// `a = (1 + K cos^2 phi)/2`, `b = K sin^2 phi / 2`, `c = (1 - K cos^2 phi)/2`.
pub fn optimal_coefficients(phi: f64) -> Result<ClonerCoefficients> {
    let (s2, c2) = EnsembleAngle::new(phi)?.sin2_cos2();
    let k = k_factor(s2, c2);
    ClonerCoefficients::new(0.5 * (1.0 + c2 * k), 0.5 * s2 * k, (0.5 * (1.0 - c2 * k)).max(0.0))
}

/// `F_opt = (1 + sqrt(sin^4 phi + cos^4 phi)) / 2`.
pub fn optimal_fidelity(phi: f64) -> Result<f64> {
    let (s2, c2) = EnsembleAngle::new(phi)?.sin2_cos2();
    Ok(0.5 * (1.0 + (s2 * s2 + c2 * c2).sqrt()))
}

/// `eta_x = K sin^2 phi`, `eta_z = K cos^2 phi`.
pub fn optimal_shrinking(phi: f64) -> Result<ShrinkingFactors> {
    let (s2, c2) = EnsembleAngle::new(phi)?.sin2_cos2();
    let k = k_factor(s2, c2);
    Ok(ShrinkingFactors {
        eta_x: s2 * k,
        eta_z: c2 * k,
    })
}

/// Residuals of the stationarity system for maximizing the fidelity on the
/// constraint surface, in the order
///
/// ```text
/// r1 = a cos^2 + b sin^2 - 2 a λ
/// r2 = (a + c) sin^2 - 4 b λ
/// r3 = -c cos^2 + b sin^2 - 2 c λ
/// r4 = a^2 + 2 b^2 + c^2 - 1
/// ```
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LagrangeResidual(pub [f64; 4]);

impl LagrangeResidual {
    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0, |m, r| m.max(r.abs()))
    }

    /// Largest of `|r1|, |r2|, |r3|`, ignoring the constraint row.
    pub fn max_gradient_abs(&self) -> f64 {
        self.0[..3].iter().fold(0.0, |m, r| m.max(r.abs()))
    }
}

pub fn lagrange_residual(coeffs: &ClonerCoefficients, lambda: f64, phi: f64) -> Result<LagrangeResidual> {
    let (s2, c2) = EnsembleAngle::new(phi)?.sin2_cos2();
    let (a, b, c) = (coeffs.a(), coeffs.b(), coeffs.c());
    Ok(LagrangeResidual([
        a * c2 + b * s2 - 2.0 * a * lambda,
        (a + c) * s2 - 4.0 * b * lambda,
        -c * c2 + b * s2 - 2.0 * c * lambda,
        coeffs.unitarity_residual(),
    ]))
}

/// Multiplier solving the first stationarity equation, or the third when
/// `a` vanishes. `None` when both `a` and `c` vanish.
pub fn recover_multiplier(coeffs: &ClonerCoefficients, phi: f64) -> Result<Option<f64>> {
    let (s2, c2) = EnsembleAngle::new(phi)?.sin2_cos2();
    let (a, b, c) = (coeffs.a(), coeffs.b(), coeffs.c());
    Ok(if a > MULTIPLIER_PIVOT {
        Some((a * c2 + b * s2) / (2.0 * a))
    } else if c > MULTIPLIER_PIVOT {
        Some((b * s2 - c * c2) / (2.0 * c))
    } else {
        None
    })
}

/// Closed-form optimum at one angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimalSolution {
    pub phi: f64,
    pub coeffs: ClonerCoefficients,
    pub fidelity: f64,
    pub eta_x: f64,
    pub eta_z: f64,
    /// Lagrange multiplier; `None` if it could not be recovered.
    pub lambda: Option<f64>,
}

impl OptimalSolution {
    pub fn at(phi: f64) -> Result<Self> {
        let coeffs = optimal_coefficients(phi)?;
        let eta = optimal_shrinking(phi)?;
        Ok(Self {
            phi,
            coeffs,
            fidelity: optimal_fidelity(phi)?,
            eta_x: eta.eta_x,
            eta_z: eta.eta_z,
            lambda: recover_multiplier(&coeffs, phi)?,
        })
    }

    pub fn residual(&self) -> Option<LagrangeResidual> {
        self.lambda
            .map(|l| lagrange_residual(&self.coeffs, l, self.phi).expect("phi validated at construction"))
    }
}

/// Result of [`numeric_optimize`].
#[derive(Debug, Clone, PartialEq)]
pub struct NumericSearchReport {
    pub best_coeffs: ClonerCoefficients,
    pub best_fidelity: f64,
    /// Surface angles `(theta, psi)` of the best point.
    pub best_angles: (f64, f64),
    pub evaluations: usize,
    pub refinements: usize,
    /// Fidelity gain of the final refinement round.
    pub achieved_tolerance: f64,
    /// Local maxima of the coarse grid other than the global one.
    pub secondary_maxima: Vec<(ClonerCoefficients, f64)>,
}

/// Point on the constraint surface:
/// `a = sin θ cos ψ`, `b = cos θ / sqrt 2`, `c = sin θ sin ψ`.
fn surface_point(theta: f64, psi: f64) -> (f64, f64, f64) {
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = psi.sin_cos();
    ((st * cp).max(0.0), (ct * FRAC_1_SQRT_2).max(0.0), (st * sp).max(0.0))
}

fn surface_coeffs(theta: f64, psi: f64) -> ClonerCoefficients {
    let (a, b, c) = surface_point(theta, psi);
    ClonerCoefficients::new(a, b, c).expect("surface parametrization satisfies the constraint")
}

#[derive(Debug, Clone, Copy)]
struct Candidate {
    value: f64,
    theta: f64,
    psi: f64,
}

/// Best point of the tensor grid `thetas × psis`. Ties go to the smallest
/// `(theta, psi)` in lexicographic order, independent of thread scheduling.
fn scan(thetas: &[f64], psis: &[f64], sin2: f64, cos2: f64) -> Candidate {
    let row_best: Vec<Candidate> = thetas
        .par_iter()
        .map(|&theta| {
            let mut best = Candidate {
                value: f64::NEG_INFINITY,
                theta,
                psi: f64::NAN,
            };
            for &psi in psis {
                let (a, b, c) = surface_point(theta, psi);
                let value = closed_form_raw(a, b, c, sin2, cos2);
                if value > best.value {
                    best = Candidate { value, theta, psi };
                }
            }
            best
        })
        .collect();
    row_best
        .into_iter()
        .reduce(|best, cand| if cand.value > best.value { cand } else { best })
        .expect("non-empty grid")
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let step = (hi - lo) / (n - 1) as f64;
    (0..n)
        .map(|i| if i + 1 == n { hi } else { lo + step * i as f64 })
        .collect()
}

/// Points `center + j * step` for `|j| <= m` that stay in `[0, pi/2]`.
fn local_axis(center: f64, step: f64, m: usize) -> Vec<f64> {
    let m = m as i64;
    (-m..=m)
        .map(|j| center + step * j as f64)
        .filter(|x| (0.0..=FRAC_PI_2).contains(x))
        .collect()
}

#[allow(clippy::needless_range_loop)]
fn coarse_local_maxima(
    values: &[f64],
    thetas: &[f64],
    psis: &[f64],
    exclude: (f64, f64),
) -> Vec<(ClonerCoefficients, f64)> {
    const LIMIT: usize = 16;
    let n = psis.len();
    let at = |i: usize, j: usize| values[i * n + j];
    let mut found = Vec::new();
    for i in 0..thetas.len() {
        for j in 0..n {
            let v = at(i, j);
            let mut is_max = true;
            let mut strict = false;
            for di in -1i64..=1 {
                for dj in -1i64..=1 {
                    if di == 0 && dj == 0 {
                        continue;
                    }
                    let (ni, nj) = (i as i64 + di, j as i64 + dj);
                    if ni < 0 || nj < 0 || ni as usize >= thetas.len() || nj as usize >= n {
                        continue;
                    }
                    let w = at(ni as usize, nj as usize);
                    is_max &= v >= w;
                    strict |= v > w;
                }
            }
            if is_max && strict && (thetas[i], psis[j]) != exclude {
                found.push((surface_coeffs(thetas[i], psis[j]), v));
                if found.len() == LIMIT {
                    return found;
                }
            }
        }
    }
    found
}

/// Maximizes the closed-form fidelity over `a^2 + 2b^2 + c^2 = 1`,
/// `a, b, c >= 0`, without using derivatives.
///
/// The surface is parametrized by two angles in `[0, pi/2]`. A
/// `grid_density × grid_density` grid is scanned first. Each refinement
/// then scans a grid of the same density centred on the incumbent, with half
/// width equal to two previous grid steps, so the incumbent is always
/// revisited and the best value never decreases. The search stops once a
/// round improves the fidelity by less than `refine_tolerance`.
pub fn numeric_optimize(phi: f64, grid_density: usize, refine_tolerance: f64) -> Result<NumericSearchReport> {
    let angle = EnsembleAngle::new(phi)?;
    if grid_density < MIN_GRID_DENSITY {
        return Err(Error::GridTooCoarse(grid_density));
    }
    let (sin2, cos2) = angle.sin2_cos2();

    let axis = linspace(0.0, FRAC_PI_2, grid_density);
    let coarse_values: Vec<f64> = axis
        .par_iter()
        .flat_map_iter(|&theta| {
            axis.iter().map(move |&psi| {
                let (a, b, c) = surface_point(theta, psi);
                closed_form_raw(a, b, c, sin2, cos2)
            })
        })
        .collect();
    let mut best = Candidate {
        value: f64::NEG_INFINITY,
        theta: 0.0,
        psi: 0.0,
    };
    for (k, &value) in coarse_values.iter().enumerate() {
        if value > best.value {
            best = Candidate {
                value,
                theta: axis[k / grid_density],
                psi: axis[k % grid_density],
            };
        }
    }
    let secondary_maxima = coarse_local_maxima(&coarse_values, &axis, &axis, (best.theta, best.psi));
    let mut evaluations = coarse_values.len();

    let half = (grid_density / 2).max(1);
    let mut step = FRAC_PI_2 / (grid_density - 1) as f64;
    let mut refinements = 0;
    let achieved = loop {
        step = 2.0 * step / half as f64;
        let thetas = local_axis(best.theta, step, half);
        let psis = local_axis(best.psi, step, half);
        evaluations += thetas.len() * psis.len();
        let cand = scan(&thetas, &psis, sin2, cos2);
        refinements += 1;
        let gain = (cand.value - best.value).max(0.0);
        if cand.value >= best.value {
            best = cand;
        }
        if gain < refine_tolerance {
            break gain;
        }
        if refinements == MAX_REFINEMENTS {
            return Err(Error::NonConvergence {
                iterations: refinements,
                achieved: gain,
            });
        }
    };

    Ok(NumericSearchReport {
        best_coeffs: surface_coeffs(best.theta, best.psi),
        best_fidelity: best.value,
        best_angles: (best.theta, best.psi),
        evaluations,
        refinements,
        achieved_tolerance: achieved,
        secondary_maxima,
    })
}
