//! The four-state input family: two orthogonal pairs of real qubit states
//! in the x–z plane, controlled by a single angle `phi`.
//!
//! With `alpha = cos(phi/2)` and `beta = sin(phi/2)` the states are
//!
//! ```text
//! psi1 = alpha|0> + beta|1>     m1 = ( sin phi, 0,  cos phi)
//! psi2 = alpha|0> - beta|1>     m2 = (-sin phi, 0,  cos phi)
//! psi3 = beta|0>  - alpha|1>    m3 = (-sin phi, 0, -cos phi)
//! psi4 = beta|0>  + alpha|1>    m4 = ( sin phi, 0, -cos phi)
//! ```
//!
//! and the orthogonal pairs are `{psi1, psi3}` and `{psi2, psi4}`. Arrays in
//! this module are zero-based, so `states()[0]` is `psi1`.

use std::f64::consts::FRAC_PI_2;

use crate::bloch::BlochVector;
use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, CONSISTENCY_TOL};

/// Ensemble angle `phi` in `[0, pi/2]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct EnsembleAngle(f64);

impl EnsembleAngle {
    pub fn new(phi: f64) -> Result<Self> {
        if !(0.0..=FRAC_PI_2).contains(&phi) {
            return Err(Error::AngleOutOfRange(phi));
        }
        Ok(Self(phi))
    }

    #[inline]
    pub fn radians(self) -> f64 {
        self.0
    }

    /// `cos(phi/2)`
    #[inline]
    pub fn alpha(self) -> f64 {
        (0.5 * self.0).cos()
    }

    /// `sin(phi/2)`
    #[inline]
    pub fn beta(self) -> f64 {
        (0.5 * self.0).sin()
    }

    /// `(sin^2 phi, cos^2 phi)`
    #[inline]
    pub fn sin2_cos2(self) -> (f64, f64) {
        let (s, c) = self.0.sin_cos();
        (s * s, c * c)
    }

    /// The angle `pi/2 - phi`, which swaps the roles of the x and z axes.
    pub fn complement(self) -> Self {
        Self((FRAC_PI_2 - self.0).clamp(0.0, FRAC_PI_2))
    }
}

/// `n >= 2` evenly spaced angles covering `[0, pi/2]`, endpoints exact.
pub fn angle_grid(n: usize) -> Vec<f64> {
    assert!(n >= 2, "an angle grid needs both endpoints");
    (0..n)
        .map(|k| {
            if k + 1 == n {
                FRAC_PI_2
            } else {
                FRAC_PI_2 * k as f64 / (n - 1) as f64
            }
        })
        .collect()
}

/// The four input states and their Bloch vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct FourStateEnsemble {
    angle: EnsembleAngle,
    states: [ComplexMatrix; 4],
    bloch: [BlochVector; 4],
}

impl FourStateEnsemble {
    pub fn new(angle: EnsembleAngle) -> Self {
        let (alpha, beta) = (angle.alpha(), angle.beta());
        let ket = |u: f64, v: f64| ComplexMatrix::real_column(&[u, v]).expect("2-vector");
        let states = [ket(alpha, beta), ket(alpha, -beta), ket(beta, -alpha), ket(beta, alpha)];
        let (s, c) = angle.radians().sin_cos();
        let bv = |x: f64, z: f64| BlochVector::new(x, 0.0, z).expect("unit vector");
        let bloch = [bv(s, c), bv(-s, c), bv(-s, -c), bv(s, -c)];
        Self { angle, states, bloch }
    }

    #[inline]
    pub fn angle(&self) -> EnsembleAngle {
        self.angle
    }

    pub fn states(&self) -> &[ComplexMatrix; 4] {
        &self.states
    }

    pub fn bloch(&self) -> &[BlochVector; 4] {
        &self.bloch
    }
}

/// Builds the ensemble for `phi` (radians).
pub fn make_ensemble(phi: f64) -> Result<FourStateEnsemble> {
    Ok(FourStateEnsemble::new(EnsembleAngle::new(phi)?))
}

/// The two orthogonal pairs, with one-based state labels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairStructure {
    pub pairs: [(usize, usize); 2],
    /// Largest `|<psi_i|psi_j>|` within a pair.
    pub max_pair_overlap: f64,
    /// Set when two states from different pairs coincide up to phase, which
    /// happens at `phi = 0` (psi1 = psi2) and `phi = pi/2` (psi1 = psi4).
    pub degenerate: bool,
}

pub fn pair_structure(e: &FourStateEnsemble) -> PairStructure {
    let pairs = [(1, 3), (2, 4)];
    let overlap = |i: usize, j: usize| e.states[i - 1].inner(&e.states[j - 1]).expect("2-vectors").norm();
    let max_pair_overlap = pairs.iter().map(|&(i, j)| overlap(i, j)).fold(0.0, f64::max);
    debug_assert!(max_pair_overlap <= CONSISTENCY_TOL);
    let degenerate = [(1, 2), (1, 4), (3, 2), (3, 4)]
        .iter()
        .any(|&(i, j)| overlap(i, j) > 1.0 - CONSISTENCY_TOL);
    PairStructure {
        pairs,
        max_pair_overlap,
        degenerate,
    }
}
