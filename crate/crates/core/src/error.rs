use thiserror::Error;

/// Everything that can go wrong across the pipeline.
///
/// Some variants (`NotIntegral`, `NoSolution`) are legitimate outcomes rather
/// than faults; callers that expect them match on them explicitly.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("malformed cycle: {0}")]
    MalformedCycle(String),

    #[error("group too large: {what} exceeds cap {cap}")]
    GroupTooLarge { what: &'static str, cap: usize },

    #[error("unknown group spec `{0}`")]
    UnknownSpec(String),

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("operands belong to different groups or class tables")]
    GroupMismatch,

    #[error("inexact division at {context}: {numerator} / {denominator}")]
    InexactDivision {
        context: String,
        numerator: i64,
        denominator: i64,
    },

    #[error("integer overflow in {0}")]
    IntegerOverflow(&'static str),

    #[error("ghost vector has no integral preimage: index {index} requires {numerator}/{denominator}")]
    NotIntegral {
        index: usize,
        numerator: i64,
        denominator: i64,
    },

    #[error("cap exceeded: {what} = {value} > {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("Frobenius-Schur indicator of character {index} is not integral (value {value})")]
    NonIntegralIndicator { index: usize, value: f64 },

    #[error("fixed-point dimension is not integral (value {value})")]
    NonIntegralDimension { value: f64 },

    #[error("character multiplicity is not integral (value {value})")]
    NonIntegralMultiplicity { value: f64 },

    #[error("complex character {0} has no conjugate row in the table")]
    UnpairedComplexCharacter(usize),

    #[error("character table construction failed: {0}")]
    CharacterTable(String),

    #[error("singular block for irrep {k}: zero is an eigenvalue")]
    SingularBlock { k: usize },

    #[error("element is not a unit of the Burnside ring")]
    NotAUnit,

    #[error("parity system has no solution (certificate rows {certificate:?})")]
    NoSolution { certificate: Vec<usize> },

    #[error("unit {coeffs:?} with parity vector {delta:?} is not a product of basic degrees (certificate rows {certificate:?})")]
    UnitNotFactorable {
        coeffs: Vec<i64>,
        delta: Vec<u8>,
        certificate: Vec<usize>,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    /// Stable machine-readable tag for the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::MalformedCycle(_) => "MalformedCycle",
            Error::GroupTooLarge { .. } => "GroupTooLarge",
            Error::UnknownSpec(_) => "UnknownSpec",
            Error::NotASubgroup(_) => "NotASubgroup",
            Error::GroupMismatch => "GroupMismatch",
            Error::InexactDivision { .. } => "InexactDivision",
            Error::IntegerOverflow(_) => "IntegerOverflow",
            Error::NotIntegral { .. } => "NotIntegral",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::NonIntegralIndicator { .. } => "NonIntegralIndicator",
            Error::NonIntegralDimension { .. } => "NonIntegralDimension",
            Error::NonIntegralMultiplicity { .. } => "NonIntegralMultiplicity",
            Error::UnpairedComplexCharacter(_) => "UnpairedComplexCharacter",
            Error::CharacterTable(_) => "CharacterTable",
            Error::SingularBlock { .. } => "SingularBlock",
            Error::NotAUnit => "NotAUnit",
            Error::NoSolution { .. } => "NoSolution",
            Error::UnitNotFactorable { .. } => "UnitNotFactorable",
            Error::InvalidInput(_) => "InvalidInput",
            Error::Inconsistent(_) => "Inconsistent",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
