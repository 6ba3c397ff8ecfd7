use alloc::string::String;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("{0} is not a prime modulus")]
    NotPrime(u64),

    #[error("denominator {denominator} vanishes modulo {modulus}")]
    DenominatorVanishes { denominator: String, modulus: u64 },

    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("inconsistent brackets for pair ({0}, {1}): [a,b] and [b,a] are not negatives")]
    AntisymmetryConflict(usize, usize),

    #[error("operator is not nilpotent")]
    NotNilpotent,

    #[error("invalid characteristic sequence: {0}")]
    InvalidSequence(String),

    #[error("invalid Jordan data: {0}")]
    InvalidJordanSpec(String),

    #[error("all eigenvalues are zero: ad_x must be non-nilpotent on the nilradical")]
    AllEigenvaluesZero,

    #[error("no Jordan block of size at least 2")]
    NoBigBlock,

    #[error("local-derivation certificate failed in case {case}: residual {residual}")]
    CertificateFailed { case: String, residual: String },

    #[error("projective enumeration needs {points} points, budget is {budget}")]
    BudgetExceeded { points: u128, budget: u128 },

    #[error("oracle declined prime {prime}: {reason}")]
    OracleDeclined { prime: u64, reason: String },

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogEntry(String),

    #[error("malformed catalog parameters `{0}`")]
    BadCatalogParameters(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
