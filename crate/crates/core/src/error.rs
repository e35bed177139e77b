use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("NotDivisible: {0}")]
    NotDivisible(String),
    #[error("NegativeExponentSubstitution: cannot substitute a non-monomial into q^{0}")]
    NegativeExponentSubstitution(i32),
    #[error("EmptyRestriction: no shape carries the requested colors")]
    EmptyRestriction,
    #[error("NotStandard: filling is not a bijection onto 1..n")]
    NotStandard,
    #[error("NotSymmetric: coefficient of {first} is {first_coeff} but coefficient of {second} is {second_coeff}")]
    NotSymmetric {
        first: String,
        first_coeff: String,
        second: String,
        second_coeff: String,
    },
    #[error("NotRibbon: component {0} is not a ribbon")]
    NotRibbon(usize),
    #[error("CospinMismatch: {0}")]
    CospinMismatch(String),
    #[error("WrongEdgeType: {0}")]
    WrongEdgeType(String),
    #[error("NegativeExponent: {0}")]
    NegativeExponent(String),
    #[error("HasNonTypeIEdges")]
    HasNonTypeIEdges,
    #[error("NotVerticalStrip: component {0}")]
    NotVerticalStrip(usize),
    #[error("InvalidParkingFunction: {0:?}")]
    InvalidParkingFunction(Vec<usize>),
    #[error("ParameterOutOfRange: {0}")]
    ParameterOutOfRange(String),
    #[error("NotTriple: tuple has {0} shapes")]
    NotTriple(usize),
    #[error("InvalidInput: {0}")]
    InvalidInput(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
