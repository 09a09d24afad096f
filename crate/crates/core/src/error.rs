use fsys_algebra::{AlgebraError, RatPoly};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum FusionError {
    #[error("label {0} is out of range")]
    BadLabel(usize),
    #[error("ring is not multiplicity-free")]
    NotMultiplicityFree,
    #[error("ring data is malformed: {0}")]
    BadRing(String),
    #[error("missing symbol {0}")]
    MissingSymbol(String),
    #[error("key {0} is not admissible")]
    InadmissibleKey(String),
    #[error("symbol value lies in a different field")]
    DegreeMismatch,
    #[error("zero denominator at {0}")]
    ZeroDenominator(String),
    #[error("pivotal coefficient of label {0} is zero")]
    ZeroPivotal(usize),
    #[error("system is not spherical")]
    NotSpherical,
    #[error("system has no braiding")]
    NotBraided,
    #[error("F-block {0} is singular")]
    SingularFBlock(String),
    #[error("permutation is not a fusion ring automorphism")]
    NotAnAutomorphism,
    #[error("automorphism search supports rank at most {max}, got {rank}")]
    RankTooLarge { rank: usize, max: usize },
    #[error("gauge assignment is missing g{0}")]
    IncompleteAssignment(String),
    #[error("gauge value g{0} is zero")]
    ZeroGaugeValue(String),
    #[error("word raises the zero symbol {0} to a negative power")]
    ZeroToNegativePower(String),
    #[error("word refers to an undefined symbol index {0}")]
    UndefinedSymbol(usize),
    #[error("target {0} is zero")]
    ZeroTarget(usize),
    #[error("word exponent does not fit in 64 bits")]
    ExponentOverflow,
    #[error("computed gauge does not reproduce the requested values")]
    GaugeCheckFailed,
    #[error("expected {expected} targets, got {got}")]
    TargetCount { expected: usize, got: usize },
    #[error("gauge solution needs a root of {poly} outside the field")]
    RootNotInField { poly: RatPoly, value: String, q: u32 },
    #[error("neither F-key layout of the dump satisfies the pentagon equations")]
    LayoutAmbiguous,
    #[error("cannot parse value {text:?}: {reason}")]
    ValueParse { text: String, reason: String },
    #[error("file holds a fusion ring but no symbols")]
    RingOnly,
    #[error("{0}")]
    Io(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl FusionError {
    /// Stable machine-readable name for reports.
    pub fn code(&self) -> &'static str {
        match self {
            FusionError::BadLabel(_) => "BadLabel",
            FusionError::NotMultiplicityFree => "NotMultiplicityFree",
            FusionError::BadRing(_) => "BadRing",
            FusionError::MissingSymbol(_) => "MissingSymbol",
            FusionError::InadmissibleKey(_) => "InadmissibleKey",
            FusionError::DegreeMismatch => "DegreeMismatch",
            FusionError::ZeroDenominator(_) => "ZeroDenominator",
            FusionError::ZeroPivotal(_) => "ZeroPivotal",
            FusionError::NotSpherical => "NotSpherical",
            FusionError::NotBraided => "NotBraided",
            FusionError::SingularFBlock(_) => "SingularFBlock",
            FusionError::NotAnAutomorphism => "NotAnAutomorphism",
            FusionError::RankTooLarge { .. } => "RankTooLarge",
            FusionError::IncompleteAssignment(_) => "IncompleteAssignment",
            FusionError::ZeroGaugeValue(_) => "ZeroGaugeValue",
            FusionError::ZeroToNegativePower(_) => "ZeroToNegativePower",
            FusionError::UndefinedSymbol(_) => "UndefinedSymbol",
            FusionError::ZeroTarget(_) => "ZeroTarget",
            FusionError::ExponentOverflow => "ExponentOverflow",
            FusionError::GaugeCheckFailed => "GaugeCheckFailed",
            FusionError::TargetCount { .. } => "TargetCount",
            FusionError::RootNotInField { .. } => "RootNotInField",
            FusionError::LayoutAmbiguous => "LayoutAmbiguous",
            FusionError::ValueParse { .. } => "ValueParseError",
            FusionError::RingOnly => "RingOnly",
            FusionError::Io(_) => "IoError",
            FusionError::Parse { .. } => "ParseError",
            FusionError::Algebra(AlgebraError::FieldMismatch) => "FieldMismatch",
            FusionError::Algebra(AlgebraError::PrecisionTooLow { .. }) => "PrecisionTooLow",
            FusionError::Algebra(AlgebraError::Reducible { .. }) => "Reducible",
            FusionError::Algebra(_) => "AlgebraError",
        }
    }
}

pub type Result<T, E = FusionError> = std::result::Result<T, E>;
