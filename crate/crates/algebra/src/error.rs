use thiserror::Error;

use crate::poly::RatPoly;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum AlgebraError {
    #[error("the zero polynomial cannot define a number field")]
    ZeroPoly,
    #[error("constant polynomial {0} cannot define a number field")]
    ConstantPoly(RatPoly),
    #[error("polynomial {poly} is reducible over Q (factor {factor})")]
    Reducible { poly: RatPoly, factor: RatPoly },
    #[error("could not decide irreducibility of a degree-{degree} polynomial")]
    IrreducibilityUndecided { degree: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different number fields")]
    FieldMismatch,
    #[error("root isolation failed at {bits} bits of precision")]
    PrecisionTooLow { bits: u32 },
    #[error("matrix does not have full column rank")]
    RankDeficient,
    #[error("element does not lie in the subfield")]
    NotInSubfield,
    #[error("{q}-th root of the given element does not exist in the field")]
    NoRoot { q: u32 },
    #[error("root search needs {combinations} embedding combinations, above the limit")]
    SearchLimit { combinations: u128 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
