//! Symmetric 1→2 qubit cloner with a two-dimensional ancilla.
//!
//! The cloner is stored as the 8×2 isometry `V` obtained by restricting the
//! cloning unitary to inputs of the form `|psi>|0>|X>`:
//!
//! ```text
//! V|0> = a|00>|A>  + b(|01> + |10>)|B>  + c|11>|C>
//! V|1> = a|11>|A~> + b(|10> + |01>)|B~> + c|00>|C~>
//! ```
//!
//! Output indices read `copy1 * 4 + copy2 * 2 + ancilla`. The coefficients
//! are shared between the two columns because the ensemble is invariant under
//! the relabeling `|0> <-> |1>`.

use crate::bloch::{bloch_from_density, pure_ket, BlochVector};
use crate::ensemble::EnsembleAngle;
use crate::error::{Error, Result};
use crate::linalg::{partial_trace, tensor, Complex64, ComplexMatrix, CONSISTENCY_TOL, INPUT_TOL};

/// Nonnegative amplitudes `(a, b, c)` with `a^2 + 2b^2 + c^2 = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClonerCoefficients {
    a: f64,
    b: f64,
    c: f64,
}

impl ClonerCoefficients {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        for (name, value) in [("a", a), ("b", b), ("c", c)] {
            if !value.is_finite() {
                return Err(Error::UnitarityViolation(f64::NAN));
            }
            if value < 0.0 {
                return Err(Error::NegativeCoefficient { name, value });
            }
        }
        let residual = a * a + 2.0 * b * b + c * c - 1.0;
        if residual.abs() > INPUT_TOL {
            return Err(Error::UnitarityViolation(residual));
        }
        Ok(Self { a, b, c })
    }

    /// `(1, 0, 0)`: copies the computational basis perfectly.
    pub fn basis_copier() -> Self {
        Self { a: 1.0, b: 0.0, c: 0.0 }
    }

    #[inline]
    pub fn a(&self) -> f64 {
        self.a
    }

    #[inline]
    pub fn b(&self) -> f64 {
        self.b
    }

    #[inline]
    pub fn c(&self) -> f64 {
        self.c
    }

    /// `a^2 + 2b^2 + c^2 - 1`
    pub fn unitarity_residual(&self) -> f64 {
        self.a * self.a + 2.0 * self.b * self.b + self.c * self.c - 1.0
    }
}

/// The six ancilla kets `|A>, |B>, |C>, |A~>, |B~>, |C~>`.
#[derive(Debug, Clone, PartialEq)]
pub struct AncillaAssignment {
    kets: [ComplexMatrix; 6],
}

impl AncillaAssignment {
    /// Kets in the order `A, B, C, A~, B~, C~`; each must be a unit 2-vector.
    pub fn new(kets: [ComplexMatrix; 6]) -> Result<Self> {
        for k in &kets {
            if k.rows() != 2 || k.cols() != 1 {
                return Err(Error::DimensionMismatch(format!(
                    "ancilla ket must be 2x1, got {}x{}",
                    k.rows(),
                    k.cols()
                )));
            }
            let n = k.norm();
            if (n - 1.0).abs() > CONSISTENCY_TOL {
                return Err(Error::NotNormalized(n));
            }
        }
        Ok(Self { kets })
    }

    pub fn a(&self) -> &ComplexMatrix {
        &self.kets[0]
    }
    pub fn b(&self) -> &ComplexMatrix {
        &self.kets[1]
    }
    pub fn c(&self) -> &ComplexMatrix {
        &self.kets[2]
    }
    pub fn a_tilde(&self) -> &ComplexMatrix {
        &self.kets[3]
    }
    pub fn b_tilde(&self) -> &ComplexMatrix {
        &self.kets[4]
    }
    pub fn c_tilde(&self) -> &ComplexMatrix {
        &self.kets[5]
    }

    /// The two overlap sums entering the equal-fidelity expression.
    pub fn overlaps(&self) -> OverlapSet {
        let re = |x: &ComplexMatrix, y: &ComplexMatrix| x.inner(y).expect("2-vectors").re;
        OverlapSet {
            re_ab: re(self.a(), self.b_tilde()) + re(self.b(), self.a_tilde()),
            re_bc: re(self.b(), self.c_tilde()) + re(self.c(), self.b_tilde()),
        }
    }
}

impl Default for AncillaAssignment {
    /// `A = |0>, B = |1>, C = |0>, A~ = |1>, B~ = |0>, C~ = |1>`, which makes
    /// all four relevant overlaps equal to one.
    fn default() -> Self {
        let k0 = ComplexMatrix::basis_ket(2, 0).expect("dim 2");
        let k1 = ComplexMatrix::basis_ket(2, 1).expect("dim 2");
        Self {
            kets: [k0.clone(), k1.clone(), k0.clone(), k1.clone(), k0, k1],
        }
    }
}

/// `re_ab = Re<A|B~> + Re<B|A~>` and `re_bc = Re<B|C~> + Re<C|B~>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OverlapSet {
    re_ab: f64,
    re_bc: f64,
}

impl OverlapSet {
    /// Both sums at their Cauchy–Schwarz maximum of 2.
    pub const MAXIMAL: Self = Self { re_ab: 2.0, re_bc: 2.0 };

    pub fn new(re_ab: f64, re_bc: f64) -> Result<Self> {
        for v in [re_ab, re_bc] {
            if !v.is_finite() || v.abs() > 2.0 + INPUT_TOL {
                return Err(Error::OverlapBound(v));
            }
        }
        Ok(Self { re_ab, re_bc })
    }

    #[inline]
    pub fn re_ab(&self) -> f64 {
        self.re_ab
    }

    #[inline]
    pub fn re_bc(&self) -> f64 {
        self.re_bc
    }
}

/// 8×2 isometry from the input qubit to `copy1 ⊗ copy2 ⊗ ancilla`.
#[derive(Debug, Clone, PartialEq)]
pub struct CloningIsometry {
    matrix: ComplexMatrix,
}

impl CloningIsometry {
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// Largest entry of `|V^dagger V - 1|`.
    pub fn isometry_defect(&self) -> f64 {
        self.matrix
            .adjoint()
            .matmul(&self.matrix)
            .and_then(|g| g.max_abs_diff(&ComplexMatrix::identity(2).expect("dim 2")))
            .expect("8x2 isometry")
    }

    /// Output ket `V|psi>`.
    pub fn output_ket(&self, psi: &ComplexMatrix) -> Result<ComplexMatrix> {
        check_unit_qubit(psi)?;
        self.matrix.matmul(psi)
    }
}

fn check_unit_qubit(psi: &ComplexMatrix) -> Result<()> {
    if psi.rows() != 2 || psi.cols() != 1 {
        return Err(Error::DimensionMismatch(format!(
            "expected a qubit state vector, got {}x{}",
            psi.rows(),
            psi.cols()
        )));
    }
    let n = psi.norm();
    if (n - 1.0).abs() > INPUT_TOL {
        return Err(Error::NotNormalized(n));
    }
    Ok(())
}

/// Assembles `V` from the coefficients and ancilla kets.
pub fn build_isometry(coeffs: &ClonerCoefficients, anc: &AncillaAssignment) -> Result<CloningIsometry> {
    let k0 = ComplexMatrix::basis_ket(2, 0)?;
    let k1 = ComplexMatrix::basis_ket(2, 1)?;
    let three = |p: &ComplexMatrix, q: &ComplexMatrix, r: &ComplexMatrix| -> Result<ComplexMatrix> {
        tensor(&tensor(p, q)?, r)
    };
    let re = |x: f64| Complex64::new(x, 0.0);
    let (a, b, c) = (re(coeffs.a), re(coeffs.b), re(coeffs.c));

    let col0 = three(&k0, &k0, anc.a())?
        .scale(a)
        .add(&three(&k0, &k1, anc.b())?.add(&three(&k1, &k0, anc.b())?)?.scale(b))?
        .add(&three(&k1, &k1, anc.c())?.scale(c))?;
    let col1 = three(&k1, &k1, anc.a_tilde())?
        .scale(a)
        .add(
            &three(&k1, &k0, anc.b_tilde())?
                .add(&three(&k0, &k1, anc.b_tilde())?)?
                .scale(b),
        )?
        .add(&three(&k0, &k0, anc.c_tilde())?.scale(c))?;

    let mut entries = Vec::with_capacity(16);
    for r in 0..8 {
        entries.push(col0.get(r, 0));
        entries.push(col1.get(r, 0));
    }
    let iso = CloningIsometry {
        matrix: ComplexMatrix::from_row_major(8, 2, entries)?,
    };
    let defect = iso.isometry_defect();
    if defect > INPUT_TOL {
        return Err(Error::UnitarityViolation(defect));
    }
    Ok(iso)
}

/// Three-qubit output state `V|psi><psi|V^dagger`.
pub fn apply_cloner(v: &CloningIsometry, psi: &ComplexMatrix) -> Result<ComplexMatrix> {
    v.output_ket(psi)?.projector()
}

/// Reduced state of copy 1 or copy 2 (ancilla and the other copy traced out).
pub fn copy_state(rho_out: &ComplexMatrix, which_copy: usize) -> Result<ComplexMatrix> {
    if !(1..=2).contains(&which_copy) {
        return Err(Error::InvalidCopyIndex(which_copy));
    }
    if rho_out.rows() != 8 || rho_out.cols() != 8 {
        return Err(Error::DimensionMismatch(format!(
            "expected an 8x8 three-qubit density matrix, got {}x{}",
            rho_out.rows(),
            rho_out.cols()
        )));
    }
    partial_trace(rho_out, &[2, 2, 2], which_copy - 1)
}

/// `<psi|rho|psi>`.
pub fn fidelity(psi: &ComplexMatrix, rho: &ComplexMatrix) -> Result<f64> {
    check_unit_qubit(psi)?;
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
    if (tr.re - 1.0).abs() > INPUT_TOL {
        return Err(Error::InvalidTrace(tr.re));
    }
    let f = rho.expectation(psi)?;
    if f.im.abs() > INPUT_TOL {
        return Err(Error::ImaginaryResidue(f.im));
    }
    Ok(f.re)
}

/// Fidelity of copy 1 with the input, by full simulation.
pub fn simulated_fidelity(v: &CloningIsometry, psi: &ComplexMatrix) -> Result<f64> {
    fidelity(psi, &copy_state(&apply_cloner(v, psi)?, 1)?)
}

/// Equal-fidelity expression for arbitrary ancilla overlaps:
///
/// `F = a^2(α^4+β^4) + 2c^2 α^2 β^2 + b^2 + α^2 β^2 (2ab re_ab + 2bc re_bc)`
pub fn fidelity_general(coeffs: &ClonerCoefficients, angle: EnsembleAngle, overlaps: &OverlapSet) -> f64 {
    let (al2, be2) = (angle.alpha().powi(2), angle.beta().powi(2));
    let ab2 = al2 * be2;
    let (a, b, c) = (coeffs.a, coeffs.b, coeffs.c);
    a * a * (al2 * al2 + be2 * be2)
        + 2.0 * c * c * ab2
        + b * b
        + ab2 * (2.0 * a * b * overlaps.re_ab + 2.0 * b * c * overlaps.re_bc)
}

/// `F = 1/2 + (a^2 - c^2) cos^2(phi) / 2 + b(a + c) sin^2(phi)`, valid for
/// maximal overlaps.
pub fn fidelity_closed_form(coeffs: &ClonerCoefficients, angle: EnsembleAngle) -> f64 {
    let (s2, c2) = angle.sin2_cos2();
    closed_form_raw(coeffs.a, coeffs.b, coeffs.c, s2, c2)
}

#[inline]
pub(crate) fn closed_form_raw(a: f64, b: f64, c: f64, sin2: f64, cos2: f64) -> f64 {
    0.5 + 0.5 * (a * a - c * c) * cos2 + b * (a + c) * sin2
}

/// Contraction of the x and z Bloch components under the cloning channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShrinkingFactors {
    pub eta_x: f64,
    pub eta_z: f64,
}

/// `eta_x = 2b(a + c)`, `eta_z = a^2 - c^2`.
pub fn shrinking_factors(coeffs: &ClonerCoefficients) -> ShrinkingFactors {
    let (a, b, c) = (coeffs.a, coeffs.b, coeffs.c);
    ShrinkingFactors {
        eta_x: 2.0 * b * (a + c),
        eta_z: a * a - c * c,
    }
}

/// Bloch vector of copy 1 when the pure state `m` is cloned.
pub fn channel_bloch(v: &CloningIsometry, m: &BlochVector) -> Result<BlochVector> {
    let psi = pure_ket(m)?;
    bloch_from_density(&copy_state(&apply_cloner(v, &psi)?, 1)?)
}

/// Shrinking of each Bloch axis measured by cloning the `+x`, `+y` and `+z`
/// eigenstates. The y entry has no closed-form counterpart here.
pub fn measured_shrinking(v: &CloningIsometry) -> Result<[f64; 3]> {
    let x = channel_bloch(v, &BlochVector::pure(1.0, 0.0, 0.0)?)?.x();
    let y = channel_bloch(v, &BlochVector::pure(0.0, 1.0, 0.0)?)?.y();
    let z = channel_bloch(v, &BlochVector::pure(0.0, 0.0, 1.0)?)?.z();
    Ok([x, y, z])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensemble::make_ensemble;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_3, FRAC_PI_4};

    // Closed-form optimum at π/4, written out independently of the optimizer.
    fn bb84_coeffs() -> ClonerCoefficients {
        let r = FRAC_1_SQRT_2;
        ClonerCoefficients::new(0.5 * (1.0 + r), 0.5 * r, 0.5 * (1.0 - r)).unwrap()
    }

    fn ket(bits: usize) -> ComplexMatrix {
        ComplexMatrix::basis_ket(8, bits).unwrap()
    }

    #[test]
    fn coefficient_validation() {
        assert!(ClonerCoefficients::new(0.5, 0.5, 0.5).is_ok());
        assert!(matches!(
            ClonerCoefficients::new(1.0, 0.1, 0.0),
            Err(Error::UnitarityViolation(_))
        ));
        assert_eq!(
            ClonerCoefficients::new(-1.0, 0.0, 0.0),
            Err(Error::NegativeCoefficient { name: "a", value: -1.0 })
        );
        assert!(ClonerCoefficients::new(f64::NAN, 0.0, 0.0).is_err());
    }

    #[test]
    fn basis_copier_isometry() {
        let v = build_isometry(&ClonerCoefficients::basis_copier(), &AncillaAssignment::default()).unwrap();
        let k0 = ComplexMatrix::basis_ket(2, 0).unwrap();
        let k1 = ComplexMatrix::basis_ket(2, 1).unwrap();
        // |00>|A> with A = |0>, and |11>|A~> with A~ = |1>.
        assert_eq!(v.output_ket(&k0).unwrap(), ket(0b000));
        assert_eq!(v.output_ket(&k1).unwrap(), ket(0b111));
        let rho = apply_cloner(&v, &k0).unwrap();
        assert_eq!(rho, ket(0).projector().unwrap());
    }

    #[test]
    fn bb84_isometry_is_orthonormal() {
        let v = build_isometry(&bb84_coeffs(), &AncillaAssignment::default()).unwrap();
        assert!(v.isometry_defect() < 1e-12);
    }

    #[test]
    fn rejects_non_orthogonal_ancillas() {
        // A~ = A and C~ = C makes the two columns overlap through the c·a terms.
        let k0 = ComplexMatrix::basis_ket(2, 0).unwrap();
        let k1 = ComplexMatrix::basis_ket(2, 1).unwrap();
        let anc = AncillaAssignment::new([k0.clone(), k1.clone(), k0.clone(), k0.clone(), k1, k0]).unwrap();
        assert!(matches!(
            build_isometry(&bb84_coeffs(), &anc),
            Err(Error::UnitarityViolation(_))
        ));
    }

    #[test]
    fn swapping_copies_leaves_output_invariant() {
        // SWAP on the first two qubits: index (q1 q2 q3) -> (q2 q1 q3).
        let swap_copies = |v: &ComplexMatrix| {
            let mut e = vec![Complex64::new(0.0, 0.0); 8];
            for (i, slot) in e.iter_mut().enumerate() {
                let j = ((i & 0b010) << 1) | ((i & 0b100) >> 1) | (i & 0b001);
                *slot = v.get(j, 0);
            }
            ComplexMatrix::column(&e).unwrap()
        };
        for coeffs in [
            bb84_coeffs(),
            ClonerCoefficients::new(0.6, 0.4, (1.0f64 - 0.36 - 0.32).sqrt()).unwrap(),
        ] {
            let v = build_isometry(&coeffs, &AncillaAssignment::default()).unwrap();
            for b in 0..2 {
                let out = v.output_ket(&ComplexMatrix::basis_ket(2, b).unwrap()).unwrap();
                assert_eq!(swap_copies(&out), out);
            }
        }
    }

    #[test]
    fn output_is_pure_and_normalized() {
        let v = build_isometry(&bb84_coeffs(), &AncillaAssignment::default()).unwrap();
        let psi = ComplexMatrix::column(&[Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)]).unwrap();
        let rho = apply_cloner(&v, &psi).unwrap();
        assert_abs_diff_eq!(rho.trace().unwrap().re, 1.0, epsilon = 1e-12);
        // Purity Tr(rho^2) = 1 for a rank-one projector.
        assert_abs_diff_eq!(rho.matmul(&rho).unwrap().trace().unwrap().re, 1.0, epsilon = 1e-12);
        let bad = ComplexMatrix::real_column(&[1.0, 1.0]).unwrap();
        assert!(matches!(apply_cloner(&v, &bad), Err(Error::NotNormalized(_))));
    }

    #[test]
    fn copies_agree_at_pi_over_3() {
        let phi = FRAC_PI_3;
        let (s2, c2) = (phi.sin().powi(2), phi.cos().powi(2));
        let k = 1.0 / (s2 * s2 + c2 * c2).sqrt();
        let coeffs = ClonerCoefficients::new(0.5 * (1.0 + c2 * k), 0.5 * s2 * k, 0.5 * (1.0 - c2 * k)).unwrap();
        let v = build_isometry(&coeffs, &AncillaAssignment::default()).unwrap();
        let e = make_ensemble(phi).unwrap();
        let rho = apply_cloner(&v, &e.states()[0]).unwrap();
        let c1 = copy_state(&rho, 1).unwrap();
        let c2m = copy_state(&rho, 2).unwrap();
        assert!(c1.max_abs_diff(&c2m).unwrap() < 1e-12);
    }

    #[test]
    fn copy_state_of_product_input() {
        let rho = ComplexMatrix::from_real(2, 2, &[0.7, 0.2, 0.2, 0.3]).unwrap();
        let sigma = ComplexMatrix::from_real(2, 2, &[0.1, 0.0, 0.0, 0.9]).unwrap();
        let tau = ComplexMatrix::identity(2).unwrap().scale(Complex64::new(0.5, 0.0));
        let prod = tensor(&tensor(&rho, &sigma).unwrap(), &tau).unwrap();
        assert!(copy_state(&prod, 1).unwrap().max_abs_diff(&rho).unwrap() < 1e-15);
        assert!(copy_state(&prod, 2).unwrap().max_abs_diff(&sigma).unwrap() < 1e-15);
        assert_eq!(copy_state(&prod, 3), Err(Error::InvalidCopyIndex(3)));
        assert_eq!(copy_state(&prod, 0), Err(Error::InvalidCopyIndex(0)));
    }

    #[test]
    fn bb84_copy_bloch_vector() {
        let v = build_isometry(&bb84_coeffs(), &AncillaAssignment::default()).unwrap();
        let e = make_ensemble(FRAC_PI_4).unwrap();
        let copy = copy_state(&apply_cloner(&v, &e.states()[0]).unwrap(), 1).unwrap();
        let m = bloch_from_density(&copy).unwrap();
        assert!(m.max_abs_diff(&BlochVector::new(0.5, 0.0, 0.5).unwrap()) < 1e-12);
    }

    #[test]
    fn fidelity_basics() {
        let psi = ComplexMatrix::real_column(&[0.6, 0.8]).unwrap();
        assert_abs_diff_eq!(fidelity(&psi, &psi.projector().unwrap()).unwrap(), 1.0, epsilon = 1e-15);
        let k0 = ComplexMatrix::basis_ket(2, 0).unwrap();
        let mixed = ComplexMatrix::identity(2).unwrap().scale(Complex64::new(0.5, 0.0));
        assert_eq!(fidelity(&k0, &mixed).unwrap(), 0.5);
    }

    #[test]
    fn fidelity_rejects_invalid_operators() {
        let k0 = ComplexMatrix::basis_ket(2, 0).unwrap();
        let skew = ComplexMatrix::from_row_major(
            2,
            2,
            vec![
                Complex64::new(1.0, 1e-6),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
            ],
        )
        .unwrap();
        assert!(matches!(fidelity(&k0, &skew), Err(Error::NotHermitian(_))));
        let heavy = ComplexMatrix::identity(2).unwrap();
        assert!(matches!(fidelity(&k0, &heavy), Err(Error::InvalidTrace(_))));
    }

    #[test]
    fn bb84_fidelity_by_simulation() {
        let v = build_isometry(&bb84_coeffs(), &AncillaAssignment::default()).unwrap();
        let e = make_ensemble(FRAC_PI_4).unwrap();
        let expected = 0.5 * (1.0 + FRAC_1_SQRT_2);
        for psi in e.states() {
            assert_abs_diff_eq!(simulated_fidelity(&v, psi).unwrap(), expected, epsilon = 1e-12);
        }
        assert_abs_diff_eq!(expected, 0.853_553_390_6, epsilon = 1e-10);
    }

    #[test]
    fn closed_form_boundary_values() {
        let copier = ClonerCoefficients::basis_copier();
        let zero = EnsembleAngle::new(0.0).unwrap();
        let right = EnsembleAngle::new(FRAC_PI_2).unwrap();
        assert_eq!(fidelity_closed_form(&copier, zero), 1.0);
        assert_abs_diff_eq!(fidelity_closed_form(&copier, right), 0.5, epsilon = 1e-15);
        let bb84 = EnsembleAngle::new(FRAC_PI_4).unwrap();
        assert_abs_diff_eq!(
            fidelity_closed_form(&bb84_coeffs(), bb84),
            0.853_553_390_593_273_8,
            epsilon = 1e-12
        );
    }

    #[test]
    fn general_fidelity_term_isolation() {
        // b = 0, overlaps 0: F = a^2(α^4+β^4) + 2c^2 α^2 β^2.
        let coeffs = ClonerCoefficients::new(0.8, 0.0, 0.6).unwrap();
        let angle = EnsembleAngle::new(0.9).unwrap();
        let (al, be) = (angle.alpha(), angle.beta());
        let want = 0.64 * (al.powi(4) + be.powi(4)) + 2.0 * 0.36 * al * al * be * be;
        let got = fidelity_general(&coeffs, angle, &OverlapSet::new(0.0, 0.0).unwrap());
        assert_abs_diff_eq!(got, want, epsilon = 1e-15);

        let bb84 = EnsembleAngle::new(FRAC_PI_4).unwrap();
        assert_abs_diff_eq!(
            fidelity_general(&bb84_coeffs(), bb84, &OverlapSet::MAXIMAL),
            0.853_553_390_593_273_8,
            epsilon = 1e-12
        );
    }

    #[test]
    fn default_ancilla_overlaps_are_maximal() {
        assert_eq!(AncillaAssignment::default().overlaps(), OverlapSet::MAXIMAL);
        assert!(matches!(OverlapSet::new(2.5, 0.0), Err(Error::OverlapBound(_))));
        assert!(OverlapSet::new(-2.0, 2.0).is_ok());
    }

    #[test]
    fn ancilla_validation() {
        let k0 = ComplexMatrix::basis_ket(2, 0).unwrap();
        let long = ComplexMatrix::real_column(&[1.0, 1.0]).unwrap();
        let kets = [k0.clone(), k0.clone(), k0.clone(), k0.clone(), k0, long];
        assert!(matches!(AncillaAssignment::new(kets), Err(Error::NotNormalized(_))));
    }

    #[test]
    fn shrinking_of_basis_copier_and_bb84() {
        let s = shrinking_factors(&ClonerCoefficients::basis_copier());
        assert_eq!((s.eta_x, s.eta_z), (0.0, 1.0));
        let s = shrinking_factors(&bb84_coeffs());
        assert_abs_diff_eq!(s.eta_x, FRAC_1_SQRT_2, epsilon = 1e-12);
        assert_abs_diff_eq!(s.eta_z, FRAC_1_SQRT_2, epsilon = 1e-12);
    }

    #[test]
    fn measured_shrinking_matches_formula_on_x_and_z() {
        let coeffs = bb84_coeffs();
        let v = build_isometry(&coeffs, &AncillaAssignment::default()).unwrap();
        let [mx, _my, mz] = measured_shrinking(&v).unwrap();
        let s = shrinking_factors(&coeffs);
        assert_abs_diff_eq!(mx, s.eta_x, epsilon = 1e-12);
        assert_abs_diff_eq!(mz, s.eta_z, epsilon = 1e-12);
    }
}
