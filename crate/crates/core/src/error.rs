use alloc::string::String;

use crate::alphabet::Letter;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Errors raised by the library.
///
/// Variants fall into three families that the CLI maps to distinct exit
/// codes: malformed or inconsistent input, configured resource caps, and
/// internal consistency failures (which indicate a bug, not bad input).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("malformed token `{0}`")]
    MalformedToken(String),

    #[error("empty word")]
    EmptyWord,

    #[error("letter `{letter}` does not belong to the chain ({n_neg},{n_pos})")]
    ForeignLetter {
        letter: Letter,
        n_neg: usize,
        n_pos: usize,
    },

    #[error("complement token `c` is only allowed as a leading prefix")]
    MisplacedComplement,

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    #[error("invalid topology: {0}")]
    InvalidTopology(String),

    #[error("invalid space: {0}")]
    InvalidSpace(String),

    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("{what} exceeds the configured cap of {cap} (requested {requested})")]
    LimitExceeded {
        what: &'static str,
        cap: usize,
        requested: usize,
    },

    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
}

impl Error {
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::LimitExceeded { .. })
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Inconsistency(_))
    }

    pub fn is_input(&self) -> bool {
        !self.is_resource() && !self.is_internal()
    }
}
