//! Error type shared by every module in the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by norm evaluation, functionals, searches and closed forms.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter lies outside its mathematical domain.
    #[error("parameter out of domain: {0}")]
    ParameterDomain(String),

    /// The operation is not defined for the given space kind.
    #[error("unsupported operation: {0}")]
    UnsupportedOperation(String),

    /// Both points of a ratio functional were zero.
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// An input violated a documented precondition (e.g. an off-sphere point).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A functional evaluated to a non-finite value.
    #[error("numeric failure: {0}")]
    NumericFailure(String),

    /// No closed form is known for the requested space/constant pair.
    #[error("no closed form available: {0}")]
    UnsupportedCombination(String),

    /// A closed form exists but its validity condition does not hold.
    #[error("validity condition not met: {0}")]
    ConditionNotMet(String),

    /// The requested branch of a piecewise formula is not encoded.
    #[error("unsupported formula branch: {0}")]
    UnsupportedBranch(String),
}
