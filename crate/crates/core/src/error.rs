use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different Grassmann algebras")]
    AlgebraMismatch,
    #[error("invalid Grassmann algebra: {0}")]
    InvalidAlgebra(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("parity violation: {0}")]
    ParityViolation(String),
    #[error("pattern violation: {0}")]
    PatternViolation(String),
    #[error("not in sl(4|1): supertrace is nonzero")]
    NotSupertraceless,
    #[error("degenerate plane: basis has rank < 2")]
    DegeneratePlane,
    #[error("point is not in the big cell")]
    NotInBigCell,
    #[error("invalid Pluecker point: {0}")]
    InvalidPoint(String),
    #[error("translation N is not hermitian")]
    NonHermitianTranslation,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("generator index {index} out of range for q = {q}")]
    GeneratorOutOfRange { index: usize, q: usize },
    #[error("json: {0}")]
    Json(String),
    #[error("config: {0}")]
    Config(String),
}

impl Error {
    /// True for errors that signal a mathematical domain failure rather than bad input.
    pub fn is_math_domain(&self) -> bool {
        matches!(
            self,
            Error::NotInvertible(_)
                | Error::NotSupertraceless
                | Error::DegeneratePlane
                | Error::NotInBigCell
                | Error::InvalidPoint(_)
                | Error::NonHermitianTranslation
                | Error::PatternViolation(_)
                | Error::ParityViolation(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
