use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative power of a non-unit Laurent polynomial")]
    NonUnitNegativePower,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot specialize t = 0")]
    ZeroSpecialization,
    #[error("denominator vanishes at t = {0}")]
    PoleAtPoint(String),
    #[error("syntax error at position {pos}: {msg}")]
    SyntaxError { pos: usize, msg: String },

    #[error("generator index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("strand count must be at least {min}, got {n}")]
    BadStrandCount { n: usize, min: usize },
    #[error("kind mismatch: {0}")]
    KindMismatch(String),

    #[error("parameter must be nonzero: {0}")]
    ZeroScalar(&'static str),
    #[error("unknown family tag {0} (expected 1..=5)")]
    BadFamilyTag(u8),
    #[error("block structure violation: {0}")]
    BlockStructureViolation(String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("matrix is not an involution: {0}")]
    NotInvolution(String),
    #[error("involution fits none of the five families")]
    UnclassifiableInvolution,
    #[error("irreducibility criterion mismatch: {0}")]
    CriterionMismatch(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
