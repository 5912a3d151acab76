use thiserror::Error;

/// Domain errors raised by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("vector is zero")]
    ZeroVector,
    #[error("matrix is zero")]
    ZeroMatrix,
    #[error("flag lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("not a flag: {0}")]
    NotAFlag(String),
    #[error("flags are not complementary at index {index}")]
    NotComplementary { index: usize },
    #[error("nilpotency degrees differ: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("not an sl(2)-triple: {0}")]
    NotSl2(String),
    #[error("spectrum is not integral (characteristic polynomial {charpoly})")]
    NonIntegerSpectrum { charpoly: String },
    #[error("not diagonalizable (eigenvalue {eigenvalue})")]
    NotDiagonalizable { eigenvalue: String },
    #[error("degree {0} is out of range")]
    BadDegree(i64),
    #[error("matrix is not in the span of the Lie algebra")]
    NotInAlgebra,
    #[error("characteristic polynomial does not split over Q; remaining factor {factor}")]
    IrrationalSpectrum { factor: String },
    #[error("transition is not invertible on the overlap: det = {det}")]
    NotInvertibleOnOverlap { det: String },
    #[error("section count did not stabilize at twist {twist}")]
    BoundUnstable { twist: i64 },
    #[error("inconsistent scan window: {0}")]
    InconsistentWindow(String),
    #[error("factorization check failed: {0}")]
    FactorizationFailed(String),
}

impl Error {
    /// Stable variant name, used in reports.
    pub fn name(&self) -> &'static str {
        match self {
            Error::AmbientMismatch { .. } => "AmbientMismatch",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::NotSquare { .. } => "NotSquare",
            Error::NotNilpotent => "NotNilpotent",
            Error::ZeroVector => "ZeroVector",
            Error::ZeroMatrix => "ZeroMatrix",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::NotAFlag(_) => "NotAFlag",
            Error::NotComplementary { .. } => "NotComplementary",
            Error::DegreeMismatch { .. } => "DegreeMismatch",
            Error::NotSl2(_) => "NotSl2",
            Error::NonIntegerSpectrum { .. } => "NonIntegerSpectrum",
            Error::NotDiagonalizable { .. } => "NotDiagonalizable",
            Error::BadDegree(_) => "BadDegree",
            Error::NotInAlgebra => "NotInAlgebra",
            Error::IrrationalSpectrum { .. } => "IrrationalSpectrum",
            Error::NotInvertibleOnOverlap { .. } => "NotInvertibleOnOverlap",
            Error::BoundUnstable { .. } => "BoundUnstable",
            Error::InconsistentWindow(_) => "InconsistentWindow",
            Error::FactorizationFailed(_) => "FactorizationFailed",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
