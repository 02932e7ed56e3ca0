use thiserror::Error;

use crate::cycles::CycleWitness;
use crate::fixtures::Constraint;

/// Errors raised by the library. Negative mathematical answers (a tournament
/// that is not semiacyclic, a search that finds nothing) are values, not errors,
/// except where an operation requires the positive case as a precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid coin: {0}")]
    InvalidCoin(String),
    #[error("coins {first} and {second} have the same type")]
    DuplicateType { first: usize, second: usize },
    #[error("coin pair is not in strictly increasing lexicographic order")]
    Precedence,
    #[error("coin has equal faces; normalize the system first")]
    Unnormalized,
    #[error("coins {first} and {second} tie")]
    Tie { first: usize, second: usize },
    #[error("bad vertex subset: {0}")]
    BadSubset(String),
    #[error("bad tournament: {0}")]
    BadTournament(String),
    #[error("tournament is not semiacyclic: ascending cycle {0}")]
    NotSemiacyclic(CycleWitness),
    #[error("{what} of {requested} exceeds cap {cap}")]
    BudgetExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },
    #[error("code {code} out of range for n = {n}")]
    Range { n: usize, code: u64 },
    #[error("constraint {0} violated")]
    ConstraintViolated(Constraint),
    #[error("trial count must be positive")]
    ZeroTrials,
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
