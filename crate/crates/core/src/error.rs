use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Two operands have different dimensions.
    DimensionMismatch { left: usize, right: usize },
    /// Row-major data does not hold `dim²` entries.
    BadLength { dim: usize, len: usize },
    /// A NaN or infinite entry was offered to a matrix.
    NonFinite,
    /// Max entrywise `|a − a†|` exceeded the tolerance.
    NotHermitian { deviation: f64 },
    /// Eigenvalue iteration did not settle.
    NoConvergence,
    /// Lattice dimension below 2.
    InvalidDimension(usize),
    /// Operation needs a larger lattice (e.g. N = 2 where `|p⟩ = |−p⟩`).
    DimensionTooSmall { n: usize, min: usize },
    /// Discrete Wigner function needs an odd prime N.
    NotOddPrime(usize),
    /// Operation is defined for two-particle operators only.
    NotTwoParticle,
    /// Operation is defined for one-particle operators only.
    NotOneParticle,
    /// A label outside `0..N`.
    LabelOutOfRange { label: usize, n: usize },
    /// Wigner values carry an imaginary part above tolerance.
    NotHermitianSource { residue: f64 },
    /// A variance came out complex, so the operator is not Hermitian.
    NonRealVariance { residue: f64 },
    /// Two independent evaluation routes disagree.
    Inconsistent(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Error::BadLength { dim, len } => {
                write!(f, "expected {} entries for dimension {dim}, got {len}", dim * dim)
            }
            Error::NonFinite => f.write_str("matrix entries must be finite"),
            Error::NotHermitian { deviation } => {
                write!(f, "matrix is not Hermitian (max |a - a†| = {deviation:e})")
            }
            Error::NoConvergence => f.write_str("eigenvalue iteration did not converge"),
            Error::InvalidDimension(n) => write!(f, "lattice dimension must be at least 2, got {n}"),
            Error::DimensionTooSmall { n, min } => {
                write!(f, "lattice dimension {n} is too small, need at least {min}")
            }
            Error::NotOddPrime(n) => write!(f, "N = {n} is not an odd prime"),
            Error::NotTwoParticle => f.write_str("operation requires a two-particle operator"),
            Error::NotOneParticle => f.write_str("operation requires a one-particle operator"),
            Error::LabelOutOfRange { label, n } => write!(f, "label {label} outside 0..{n}"),
            Error::NotHermitianSource { residue } => {
                write!(f, "Wigner values have imaginary residue {residue:e}")
            }
            Error::NonRealVariance { residue } => {
                write!(f, "variance has imaginary residue {residue:e}; operator is not Hermitian")
            }
            Error::Inconsistent(what) => write!(f, "inconsistent results: {what}"),
        }
    }
}

impl core::error::Error for Error {}
