use std::fmt;

use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("{0} is not a unit")]
    NotAUnit(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("invalid value {value:?} for ring {ring}")]
    InvalidValue { value: String, ring: String },

    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },

    #[error("invalid multiset: {0}")]
    InvalidMultiset(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(HypothesisViolation),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("malformed JSON: {0}")]
    Json(String),

    /// A checked theorem failed on inputs satisfying its hypotheses.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    /// An identity that must hold by construction did not.
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
}

impl Error {
    pub(crate) fn ring_mismatch(left: impl fmt::Display, right: impl fmt::Display) -> Self {
        Error::RingMismatch {
            left: left.to_string(),
            right: right.to_string(),
        }
    }

    pub fn is_hypothesis_violation(&self) -> bool {
        matches!(self, Error::Hypothesis(_))
    }
}

impl From<HypothesisViolation> for Error {
    fn from(v: HypothesisViolation) -> Self {
        Error::Hypothesis(v)
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

/// A named hypothesis of one of the theorems that the input fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypothesisViolation {
    #[error("differences {pairs:?} are not units")]
    NonUnitDifference { pairs: Vec<(String, String)> },

    #[error("factor {factor} has size {size}, which does not exceed t = {t}")]
    MultisetTooSmall { factor: usize, size: u64, t: u32 },

    #[error("coefficient of the target monomial {t:?} is zero")]
    TargetCoefficientZero { t: Vec<u32> },

    #[error("total degree {degree} differs from the sum of t, {expected}")]
    DegreeMismatch { degree: String, expected: u64 },

    #[error("k = {k} exceeds p = {p}")]
    TooManyElements { k: usize, p: u64 },

    #[error("{0} is not a field")]
    NotAField(String),

    #[error("factor {factor} does not contain 0")]
    OriginMissing { factor: usize },

    #[error("factor {factor} has m(0) = {mult}, expected 1")]
    OriginMultiplicity { factor: usize, mult: u32 },

    #[error("the origin is covered by {count} planes")]
    OriginCovered { count: usize },

    #[error("no putative counterexample: k = {k} is not below the bound {bound}")]
    NoCounterexample { k: usize, bound: u64 },

    #[error("factor {factor} has multiplicities; reduction needs plain sets")]
    MultiplicitiesUnsupported { factor: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
