//! Command-line front end: JSON reports, point literals and DOT export.

use std::path::PathBuf;

pub mod commands;
pub mod config;

pub use commands::{
    cmd_analyze, cmd_cycles, cmd_gamma, cmd_poset, cmd_verify, write_atomic, Outcome,
};
pub use config::{AngleSpec, RunConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] primsft::Error),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{0}")]
    Usage(String),
}
