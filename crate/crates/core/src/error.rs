use thiserror::Error;

/// Errors raised across the toolkit.
///
/// Variants carry enough context (an edge id, a vertex id, a JSON path) for the
/// CLI to print a machine-readable code next to the message.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("validation error at {location}: {message}")]
    Validation { location: String, message: String },

    #[error("cycles are not disjoint: {0}")]
    NotDisjoint(String),

    #[error("degenerate position: {0}")]
    DegeneratePosition(String),

    #[error("retry budget exhausted after {0} attempts")]
    RetryExhausted(usize),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("search space too large: {0}")]
    SearchSpaceTooLarge(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("internal invariant failed: {0}")]
    Invariant(String),
}

impl Error {
    pub fn validation(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Validation {
            location: location.into(),
            message: message.into(),
        }
    }

    /// Stable short code used in CLI error reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DegenerateInput(_) => "degenerate_input",
            Error::Validation { .. } => "validation",
            Error::NotDisjoint(_) => "not_disjoint",
            Error::DegeneratePosition(_) => "degenerate_position",
            Error::RetryExhausted(_) => "retry_exhausted",
            Error::PreconditionViolated(_) => "precondition_violated",
            Error::SearchSpaceTooLarge(_) => "search_space_too_large",
            Error::OutOfRange(_) => "out_of_range",
            Error::Invariant(_) => "internal_invariant",
        }
    }

    /// True for errors that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Invariant(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
