use thiserror::Error;

use crate::configuration::ColumnSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("column {0} is the zero vector")]
    ZeroColumn(usize),

    #[error("configuration has rank {found}, expected full rank {expected}")]
    RankDeficient { expected: usize, found: usize },

    #[error("b0 is not a basis: {0}")]
    BadB0(String),

    #[error("column set {0} is not independent")]
    NotIndependent(ColumnSet),

    #[error("this construction needs an extension basis b0; add \"b0\" to the document")]
    MissingB0,

    #[error("family is not closed under span inclusion: {missing} must be added (it contains the span of {member})")]
    FamilyNotClosed { member: ColumnSet, missing: ColumnSet },

    #[error("column {0} of I is a coloop (removing it drops the rank); choose I without coloops")]
    ColoopInI(usize),

    #[error("linear form of the zero vector")]
    ZeroVector,

    #[error("ideal quotient did not vanish below degree {0}; the ideal is not zero-dimensional")]
    NoStabilization(usize),

    #[error("arrangement is not simple: hyperplanes {0} violate the codimension condition")]
    NotSimple(ColumnSet),

    #[error("no simple offset vector found after {0} attempts")]
    SamplingExhausted(usize),

    #[error("{0} is not a basis of the arrangement configuration")]
    UnknownBasis(ColumnSet),

    #[error("point set contains duplicate point at position {0}")]
    DuplicatePoints(usize),

    #[error("extra condition of the normal-power decomposition fails at {0}")]
    ConditionFails(ColumnSet),

    #[error("Hilbert function mismatch in {what}: {left:?} vs {right:?}")]
    HilbertMismatch {
        what: String,
        left: Vec<usize>,
        right: Vec<usize>,
    },

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("input error: {0}")]
    Input(String),
}
