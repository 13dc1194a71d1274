use thiserror::Error;

/// Errors raised by the linear-algebra, ensemble, cloner and optimizer layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension {0} is not one of the admitted sizes 1, 2, 4, 8")]
    UnsupportedDimension(usize),

    #[error("tensor product dimension {rows}x{cols} exceeds the admitted sizes")]
    DimensionOverflow { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("non-finite matrix entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),

    #[error("trace is {0}, expected 1")]
    InvalidTrace(f64),

    #[error("Bloch vector norm {0} lies outside the unit ball")]
    BlochNorm(f64),

    #[error("state vector is not normalized (norm {0})")]
    NotNormalized(f64),

    #[error("angle {0} rad outside [0, pi/2]")]
    AngleOutOfRange(f64),

    #[error("coefficient {name} = {value} is negative")]
    NegativeCoefficient { name: &'static str, value: f64 },

    #[error("coefficients violate a^2 + 2b^2 + c^2 = 1 (residual {0:e})")]
    UnitarityViolation(f64),

    #[error("ancilla overlap sum {0} exceeds the Cauchy-Schwarz bound of 2")]
    OverlapBound(f64),

    #[error("expectation value has imaginary residue {0:e}")]
    ImaginaryResidue(f64),

    #[error("copy index {0} is not 1 or 2")]
    InvalidCopyIndex(usize),

    #[error("grid density {0} is below the minimum of 64")]
    GridTooCoarse(usize),

    #[error("search did not converge after {iterations} refinements (last improvement {achieved:e})")]
    NonConvergence { iterations: usize, achieved: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
