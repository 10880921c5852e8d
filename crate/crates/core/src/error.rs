use std::fmt;

use num_bigint::BigUint;

/// Errors raised by the automata and monoid routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("alphabet must contain at least one letter")]
    EmptyAlphabet,

    #[error("alphabet contains duplicate letter '{0}'")]
    DuplicateLetter(char),

    #[error("letter {0:?} is not a printable character")]
    InvalidLetter(char),

    #[error("letter '{0}' is not part of the alphabet")]
    UnknownLetter(char),

    #[error("alphabets must match")]
    AlphabetMismatch,

    #[error("state {state} is outside the valid range 0..{count}")]
    StateOutOfRange { state: usize, count: usize },

    #[error("missing transition from state {state} on letter '{letter}'")]
    MissingTransition { state: usize, letter: char },

    #[error("duplicate transition from state {state} on letter '{letter}'")]
    DuplicateTransition { state: usize, letter: char },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid monoid: {0}")]
    InvalidMonoid(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0}")]
    SizeLimit(SizeLimit),
}

/// Details of a materialization that would exceed the configured cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeLimit {
    pub cap: usize,
    /// Exact number of elements needed, when known up front.
    pub required: Option<BigUint>,
}

impl fmt::Display for SizeLimit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.required {
            Some(required) => write!(
                f,
                "size limit exceeded: {required} elements required, cap is {} (raise the cap to at least {required})",
                self.cap
            ),
            None => write!(f, "size limit exceeded: more than {} elements", self.cap),
        }
    }
}

impl Error {
    pub fn is_size_limit(&self) -> bool {
        matches!(self, Error::SizeLimit(_))
    }

    pub(crate) fn size_limit(cap: usize, required: Option<BigUint>) -> Self {
        Error::SizeLimit(SizeLimit { cap, required })
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
