use thiserror::Error;

use crate::report::Witness;

/// Errors raised by constructions, loaders, and validators with preconditions.
///
/// Axiom failures are never errors; they are entries in a [`crate::Report`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain mismatch: cannot compose {left} after {right}")]
    DomainMismatch { left: String, right: String },
    #[error("matrix is not invertible (rank {rank} of {dim})")]
    NotInvertible { rank: usize, dim: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("index {index} out of range for {what} of size {size}")]
    IndexError { what: &'static str, index: usize, size: usize },
    #[error("malformed structure: {0}")]
    MalformedStructure(String),
    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("invalid loop: {0}")]
    InvalidLoop(String),
    #[error("invalid group action: {0}")]
    InvalidAction(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("action by {element} is not a Hopf quasigroup automorphism: {equation} fails")]
    ActionNotHopfAutomorphism {
        element: usize,
        equation: &'static str,
        witness: Option<Witness>,
    },
    #[error("modules are defined over different base structures")]
    BaseMismatch,
    #[error("grade mismatch: {0} vs {1}")]
    GradeMismatch(usize, usize),
    #[error("braiding needs Yetter-Drinfeld modules, got a quasimodule ({0})")]
    NotStrict(String),
    #[error("base is not the group algebra of the supplied group: {0}")]
    NotAGroupAlgebra(String),
    #[error("antipode S_{grade} is not invertible")]
    AntipodeNotInvertible { grade: usize },
    /// A construction produced output that fails its own validators.
    #[error("{construction} produced a structure failing {check}")]
    ConstructionFailed { construction: &'static str, check: String },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
