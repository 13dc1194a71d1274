//! Bloch-ball representation of single-qubit density operators,
//! `rho = (1 + m · sigma) / 2`.

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues_2x2, Complex64, ComplexMatrix, INPUT_TOL};

/// Real 3-vector `(m_x, m_y, m_z)` with norm at most one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    x: f64,
    y: f64,
    z: f64,
}

impl BlochVector {
    /// Any point of the Bloch ball (mixed or pure).
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let norm = (x * x + y * y + z * z).sqrt();
        if !norm.is_finite() || norm > 1.0 + INPUT_TOL {
            return Err(Error::BlochNorm(norm));
        }
        Ok(Self { x, y, z })
    }

    /// A point on the Bloch sphere.
    pub fn pure(x: f64, y: f64, z: f64) -> Result<Self> {
        let norm = (x * x + y * y + z * z).sqrt();
        if !norm.is_finite() || (norm - 1.0).abs() > INPUT_TOL {
            return Err(Error::BlochNorm(norm));
        }
        Ok(Self { x, y, z })
    }

    /// Pure state in the x–z plane at polar angle `theta` from +z towards +x.
    pub fn in_xz_plane(theta: f64) -> Self {
        Self {
            x: theta.sin(),
            y: 0.0,
            z: theta.cos(),
        }
    }

    #[inline]
    pub fn x(&self) -> f64 {
        self.x
    }

    #[inline]
    pub fn y(&self) -> f64 {
        self.y
    }

    #[inline]
    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn components(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn norm(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    /// Largest componentwise absolute difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.x - other.x)
            .abs()
            .max((self.y - other.y).abs())
            .max((self.z - other.z).abs())
    }
}

/// `(1 + m · sigma) / 2`.
pub fn density_from_bloch(m: &BlochVector) -> ComplexMatrix {
    let half = 0.5;
    ComplexMatrix::from_row_major(
        2,
        2,
        vec![
            Complex64::new(half * (1.0 + m.z), 0.0),
            Complex64::new(half * m.x, -half * m.y),
            Complex64::new(half * m.x, half * m.y),
            Complex64::new(half * (1.0 - m.z), 0.0),
        ],
    )
    .expect("Bloch components are finite")
}

/// `m_k = Tr(rho sigma_k)` for a 2x2 Hermitian, unit-trace matrix.
pub fn bloch_from_density(rho: &ComplexMatrix) -> Result<BlochVector> {
    if rho.rows() != 2 || rho.cols() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "expected a 2x2 density matrix, got {}x{}",
            rho.rows(),
            rho.cols()
        )));
    }
    let defect = rho.hermiticity_defect()?;
    if defect > INPUT_TOL {
        return Err(Error::NotHermitian(defect));
    }
    let tr = rho.trace()?;
    if (tr.re - 1.0).abs() > INPUT_TOL || tr.im.abs() > INPUT_TOL {
        return Err(Error::InvalidTrace(tr.re));
    }
    let component = |pauli: ComplexMatrix| -> f64 {
        rho.matmul(&pauli)
            .and_then(|p| p.trace())
            .map(|t| t.re)
            .expect("2x2 shapes")
    };
    BlochVector::new(
        component(ComplexMatrix::pauli_x()),
        component(ComplexMatrix::pauli_y()),
        component(ComplexMatrix::pauli_z()),
    )
}

/// State vector `cos(t/2)|0> + e^{i p} sin(t/2)|1>` for a point on the Bloch
/// sphere with polar angle `t` and azimuth `p`.
pub fn pure_ket(m: &BlochVector) -> Result<ComplexMatrix> {
    let norm = m.norm();
    if (norm - 1.0).abs() > INPUT_TOL {
        return Err(Error::BlochNorm(norm));
    }
    let polar = (m.z / norm).clamp(-1.0, 1.0).acos();
    let azimuth = m.y.atan2(m.x);
    ComplexMatrix::column(&[
        Complex64::new((0.5 * polar).cos(), 0.0),
        Complex64::from_polar((0.5 * polar).sin(), azimuth),
    ])
}

/// Smallest eigenvalue of the 2x2 density matrix for `m`; nonnegative on
/// the closed unit ball.
pub fn min_eigenvalue(m: &BlochVector) -> f64 {
    hermitian_eigenvalues_2x2(&density_from_bloch(m))
        .expect("density_from_bloch yields a Hermitian 2x2")
        .0
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn poles_and_center() {
        let north = density_from_bloch(&BlochVector::pure(0.0, 0.0, 1.0).unwrap());
        assert_eq!(north, ComplexMatrix::basis_ket(2, 0).unwrap().projector().unwrap());

        let center = density_from_bloch(&BlochVector::new(0.0, 0.0, 0.0).unwrap());
        let half = ComplexMatrix::identity(2).unwrap().scale(Complex64::new(0.5, 0.0));
        assert_eq!(center, half);
        assert_eq!(bloch_from_density(&half).unwrap().components(), [0.0, 0.0, 0.0]);

        let south = ComplexMatrix::basis_ket(2, 1).unwrap().projector().unwrap();
        assert_eq!(bloch_from_density(&south).unwrap().components(), [0.0, 0.0, -1.0]);
    }

    #[test]
    fn x_z_plane_vector_reproduces_real_state_projector() {
        // (sin φ, 0, cos φ) at φ = π/3 is the state cos(π/6)|0> + sin(π/6)|1>.
        let phi = std::f64::consts::FRAC_PI_3;
        let rho = density_from_bloch(&BlochVector::in_xz_plane(phi));
        let psi = ComplexMatrix::real_column(&[(phi / 2.0).cos(), (phi / 2.0).sin()]).unwrap();
        let fid = rho.expectation(&psi).unwrap();
        assert_abs_diff_eq!(fid.re, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(fid.im, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn pure_ket_reproduces_bloch_vector() {
        for (x, y, z) in [
            (0.0, 0.0, 1.0),
            (0.0, 0.0, -1.0),
            (0.6, 0.0, 0.8),
            (0.0, -1.0, 0.0),
            (0.48, 0.6, -0.64),
        ] {
            let m = BlochVector::pure(x, y, z).unwrap();
            let back = bloch_from_density(&pure_ket(&m).unwrap().projector().unwrap()).unwrap();
            assert!(back.max_abs_diff(&m) < 1e-15, "{m:?} -> {back:?}");
        }
        assert!(pure_ket(&BlochVector::new(0.1, 0.0, 0.0).unwrap()).is_err());
    }

    #[test]
    fn rejects_outside_ball() {
        assert!(matches!(BlochVector::new(1.0, 1e-4, 0.0), Err(Error::BlochNorm(_))));
        assert!(BlochVector::new(0.0, 0.0, 1.0 + 1e-10).is_ok());
        assert!(matches!(BlochVector::pure(0.5, 0.0, 0.0), Err(Error::BlochNorm(_))));
        assert!(matches!(BlochVector::new(f64::NAN, 0.0, 0.0), Err(Error::BlochNorm(_))));
    }

    #[test]
    fn rejects_non_hermitian_and_wrong_trace() {
        let skew = ComplexMatrix::from_real(2, 2, &[0.5, 0.1, 0.0, 0.5]).unwrap();
        assert!(matches!(bloch_from_density(&skew), Err(Error::NotHermitian(_))));
        let heavy = ComplexMatrix::from_real(2, 2, &[1.0, 0.0, 0.0, 0.5]).unwrap();
        assert!(matches!(bloch_from_density(&heavy), Err(Error::InvalidTrace(_))));
        assert!(bloch_from_density(&ComplexMatrix::identity(4).unwrap()).is_err());
    }
}
