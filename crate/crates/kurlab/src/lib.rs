//! File formats, reports and the command dispatcher behind the `kurlab`
//! binary.

pub mod cli;
pub mod render;
pub mod space;

mod commands;

use std::io::Write;

pub use cli::{Cli, Format};
pub use commands::run;

/// Whether a command's check succeeded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Verified,
    Failed,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Verified
        } else {
            Status::Failed
        }
    }

    pub fn code(self) -> u8 {
        match self {
            Status::Verified => 0,
            Status::Failed => 1,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] kurlab_core::Error),

    #[error("cannot read `{path}`: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error("cannot write output: {0}")]
    Output(std::io::Error),

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 1 for internal consistency failures, 3 for resource caps, 2 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_resource() => 3,
            CliError::Core(e) if e.is_internal() => 1,
            _ => 2,
        }
    }
}

pub(crate) fn write_out(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(CliError::Output)
}
