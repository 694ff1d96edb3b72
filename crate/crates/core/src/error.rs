use alloc::string::String;

/// Errors produced by the core computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ring mismatch")]
    RingMismatch,
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not monomial")]
    NotMonomial,
    #[error("matrix is not invertible by unit pivoting")]
    NotInvertible,
    #[error("substitution value must be a unit: {0}")]
    NonUnitSubstitution(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown token `{0}`")]
    UnknownToken(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("generator {generator} is illegal for {context}")]
    IllegalGenerator { generator: String, context: String },
    #[error("homomorphism {hom} is incompatible with group {group}")]
    IncompatibleHom { hom: String, group: String },
    #[error("not in kernel")]
    NotInKernel,
    #[error("bad transversal: {0}")]
    BadTransversal(String),
    #[error("free group context mismatch")]
    ContextMismatch,
    #[error("automorphism inverse certificate failed")]
    CertificateFailed,
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("unknown presentation `{0}`")]
    UnknownPresentation(String),
    #[error("unknown representation `{0}`")]
    UnknownRepresentation(String),
    #[error("need at least {min} strands, got {got}")]
    TooFewStrands { min: usize, got: usize },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
