use thiserror::Error;

use crate::identity::AxiomReport;

/// Errors raised by constructors and checks in this crate.
///
/// Failed laws on well-formed input are *not* errors; they are returned as
/// report values. Errors signal malformed input, violated preconditions, or
/// (for [`Error::OracleMismatch`]) an internal inconsistency between two
/// independent decision procedures.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("order relation is not antisymmetric: `{0}` <= `{1}` <= `{0}`")]
    Cycle(String, String),
    #[error("poset has no {0} element")]
    NoBounds(&'static str),
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("not an RLSE: {}", .0.summary())]
    NotAnRlse(AxiomReport),
    #[error("custom addition violates {law} at {witness}")]
    CustomPlusInvalid { law: &'static str, witness: String },
    #[error("internal consistency check failed: {0}")]
    OracleMismatch(String),
    #[error("unknown builtin structure `{0}`")]
    UnknownName(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("`{0}` <= `{1}`, so no state separates them")]
    NotUncomparable(String, String),
    #[error("state set is not full: `{0}` is not below `{1}` yet no state separates them")]
    NotFull(String, String),
    #[error("state #{index} is invalid: {reason}")]
    InvalidState { index: usize, reason: String },
    #[error("event set is not lattice-ordered: no {op} for `{left}` and `{right}`")]
    NotLatticeOrdered {
        op: &'static str,
        left: String,
        right: String,
    },
    #[error("corpus is empty")]
    EmptyCorpus,
    #[error("structure is not an orthomodular lattice: {0}")]
    NotOml(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("validation error: {0}")]
    Validation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
