//! Dense complex matrices of dimension 1, 2, 4 or 8.
//!
//! Column vectors are matrices with a single column. Composite systems use
//! big-endian subsystem ordering: in `tensor(a, b)` the row index of the pair
//! `(i_a, i_b)` is `i_a * rows(b) + i_b`, so the first factor is the most
//! significant digit. Every three-qubit index in this crate therefore reads
//! `copy1 * 4 + copy2 * 2 + ancilla`.

use std::fmt;

pub use num_complex::Complex64;

use crate::error::{Error, Result};

/// Sizes a matrix dimension may take.
pub const ADMITTED_DIMS: [usize; 4] = [1, 2, 4, 8];

/// Tolerance used when validating caller-supplied states and operators.
pub const INPUT_TOL: f64 = 1e-9;

/// Tolerance used for internal self-consistency checks.
pub const CONSISTENCY_TOL: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

fn check_dim(n: usize) -> Result<()> {
    if ADMITTED_DIMS.contains(&n) {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension(n))
    }
}

/// Row-major dense complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Builds a matrix from row-major entries, rejecting inadmissible shapes
    /// and non-finite values.
    pub fn from_row_major(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        check_dim(rows)?;
        check_dim(cols)?;
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(k) = data.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite {
                row: k / cols,
                col: k % cols,
            });
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix with real row-major entries.
    pub fn from_real(rows: usize, cols: usize, data: &[f64]) -> Result<Self> {
        Self::from_row_major(rows, cols, data.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// Builds a column vector.
    pub fn column(entries: &[Complex64]) -> Result<Self> {
        Self::from_row_major(entries.len(), 1, entries.to_vec())
    }

    /// Builds a real column vector.
    pub fn real_column(entries: &[f64]) -> Result<Self> {
        Self::from_real(entries.len(), 1, entries)
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        check_dim(rows)?;
        check_dim(cols)?;
        Ok(Self::zeros_unchecked(rows, cols))
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zeros(n, n)?;
        for i in 0..n {
            m.data[i * n + i] = ONE;
        }
        Ok(m)
    }

    /// Computational basis ket `|index>` in dimension `dim`.
    pub fn basis_ket(dim: usize, index: usize) -> Result<Self> {
        let mut m = Self::zeros(dim, 1)?;
        if index >= dim {
            return Err(Error::DimensionMismatch(format!(
                "basis index {index} out of range for dimension {dim}"
            )));
        }
        m.data[index] = ONE;
        Ok(m)
    }

    pub fn pauli_x() -> Self {
        Self {
            rows: 2,
            cols: 2,
            data: vec![ZERO, ONE, ONE, ZERO],
        }
    }

    pub fn pauli_y() -> Self {
        let i = Complex64::new(0.0, 1.0);
        Self {
            rows: 2,
            cols: 2,
            data: vec![ZERO, -i, i, ZERO],
        }
    }

    pub fn pauli_z() -> Self {
        Self {
            rows: 2,
            cols: 2,
            data: vec![ONE, ZERO, ZERO, -ONE],
        }
    }

    pub(crate) fn zeros_unchecked(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    /// Entry at `(row, col)`. Panics on out-of-range indices.
    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        assert!(row < self.rows && col < self.cols, "index out of range");
        self.data[row * self.cols + col]
    }

    #[inline]
    pub(crate) fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.data[row * self.cols + col] = value;
    }

    /// Extracts column `col` as a column vector.
    pub fn column_at(&self, col: usize) -> Self {
        assert!(col < self.cols, "column out of range");
        Self {
            rows: self.rows,
            cols: 1,
            data: (0..self.rows).map(|r| self.get(r, col)).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros_unchecked(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).conj());
            }
        }
        out
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros_unchecked(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let lik = self.get(i, k);
                if lik == ZERO {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += lik * rhs.get(k, j);
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "shapes {}x{} and {}x{} differ",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(&x, &y)| f(x, y)).collect(),
        })
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |x, y| x + y)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |x, y| x - y)
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| z * factor).collect(),
        }
    }

    pub fn trace(&self) -> Result<Complex64> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "trace of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        Ok((0..self.rows).map(|i| self.get(i, i)).sum())
    }

    /// Largest entrywise modulus of `self - rhs`.
    pub fn max_abs_diff(&self, rhs: &Self) -> Result<f64> {
        let d = self.sub(rhs)?;
        Ok(d.data.iter().map(|z| z.norm()).fold(0.0, f64::max))
    }

    /// Largest entrywise modulus of `self - self^dagger`.
    pub fn hermiticity_defect(&self) -> Result<f64> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("Hermiticity of a non-square matrix".into()));
        }
        self.max_abs_diff(&self.adjoint())
    }

    /// Frobenius norm (the Euclidean norm for column vectors).
    pub fn norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Inner product `<self|rhs>` of two column vectors.
    pub fn inner(&self, rhs: &Self) -> Result<Complex64> {
        if self.cols != 1 || rhs.cols != 1 || self.rows != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "inner product of {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(self.data.iter().zip(&rhs.data).map(|(x, y)| x.conj() * y).sum())
    }

    /// Projector `|v><v|` of a column vector.
    pub fn projector(&self) -> Result<Self> {
        if self.cols != 1 {
            return Err(Error::DimensionMismatch("projector of a non-column matrix".into()));
        }
        self.matmul(&self.adjoint())
    }

    /// Expectation value `<v|self|v>` for a column vector `v`.
    pub fn expectation(&self, v: &Self) -> Result<Complex64> {
        v.inner(&self.matmul(v)?)
    }

    /// Kronecker product, see [`tensor`].
    pub fn kron(&self, rhs: &Self) -> Result<Self> {
        tensor(self, rhs)
    }
}

impl fmt::Display for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                let z = self.get(r, c);
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:+.6}{:+.6}i", z.re, z.im)?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Kronecker product `a ⊗ b`. Entry `((i_a, i_b), (j_a, j_b))` sits at row
/// `i_a * rows(b) + i_b` and column `j_a * cols(b) + j_b`.
pub fn tensor(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    if !ADMITTED_DIMS.contains(&rows) || !ADMITTED_DIMS.contains(&cols) {
        return Err(Error::DimensionOverflow { rows, cols });
    }
    let mut out = ComplexMatrix::zeros_unchecked(rows, cols);
    for ia in 0..a.rows {
        for ja in 0..a.cols {
            let x = a.get(ia, ja);
            for ib in 0..b.rows {
                for jb in 0..b.cols {
                    out.set(ia * b.rows + ib, ja * b.cols + jb, x * b.get(ib, jb));
                }
            }
        }
    }
    Ok(out)
}

/// Reduced operator on subsystem `keep` of a square matrix over a composite
/// space with subsystem dimensions `dims` (big-endian order).
pub fn partial_trace(rho: &ComplexMatrix, dims: &[usize], keep: usize) -> Result<ComplexMatrix> {
    if !rho.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "partial trace of non-square {}x{} matrix",
            rho.rows, rho.cols
        )));
    }
    if dims.is_empty() || dims.contains(&0) || dims.iter().product::<usize>() != rho.rows {
        return Err(Error::DimensionMismatch(format!(
            "subsystem dimensions {dims:?} do not factor {}",
            rho.rows
        )));
    }
    if keep >= dims.len() {
        return Err(Error::DimensionMismatch(format!(
            "subsystem {keep} out of range for {} subsystems",
            dims.len()
        )));
    }
    let kept = dims[keep];
    let left: usize = dims[..keep].iter().product();
    let right: usize = dims[keep + 1..].iter().product();
    check_dim(kept)?;

    let mut out = ComplexMatrix::zeros_unchecked(kept, kept);
    for s in 0..kept {
        for t in 0..kept {
            let mut acc = ZERO;
            for l in 0..left {
                for r in 0..right {
                    acc += rho.get((l * kept + s) * right + r, (l * kept + t) * right + r);
                }
            }
            out.set(s, t, acc);
        }
    }
    Ok(out)
}

/// Eigenvalues `(low, high)` of a 2x2 Hermitian matrix in closed form.
pub fn hermitian_eigenvalues_2x2(m: &ComplexMatrix) -> Result<(f64, f64)> {
    if m.rows != 2 || m.cols != 2 {
        return Err(Error::DimensionMismatch(format!(
            "expected 2x2, got {}x{}",
            m.rows, m.cols
        )));
    }
    let defect = m.hermiticity_defect()?;
    if defect > INPUT_TOL {
        return Err(Error::NotHermitian(defect));
    }
    let p = m.get(0, 0).re;
    let q = m.get(1, 1).re;
    let off = m.get(0, 1).norm();
    let mean = 0.5 * (p + q);
    let radius = (0.25 * (p - q) * (p - q) + off * off).sqrt();
    Ok((mean - radius, mean + radius))
}
