use thiserror::Error;

/// Errors surfaced by the algebraic operations.
///
/// Axiom violations are not errors: validators return a
/// [`crate::report::ValidationReport`] instead. An `Error` means the
/// inputs are structurally unusable (shape mismatch, non-composable
/// pair, a precondition like surjectivity failing, ...).
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("{0} is not surjective, no right section exists")]
    NotSurjective(&'static str),

    #[error("linear system has no solution in {0}")]
    NoSolution(&'static str),

    #[error("objects are not composable: {0}")]
    NotComposable(String),

    #[error("invalid {kind}: {failures} axiom instance(s) fail validation")]
    InvalidInput { kind: &'static str, failures: usize },

    #[error("butterfly is not an equivalence: its NW-SE sequence is not short exact")]
    NotAnEquivalence,

    #[error("transported bracket is not well defined on the quotient ({0})")]
    WellDefinedness(&'static str),

    #[error("source of the butterfly is not of the form [0 -> W]")]
    SourceNotDiscrete,

    #[error("unknown family or invalid parameters: {0}")]
    UnknownFamily(String),

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
