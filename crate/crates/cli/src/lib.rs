//! Command-line front end: argument model, report rendering and the verbs.

pub mod args;
pub mod commands;
pub mod error;
pub mod parse;
pub mod report;

pub use args::Cli;
pub use commands::run;
pub use error::{CliError, CliResult};
pub use report::{exit_code, Report, Status};

/// Exit code for malformed invocations.
pub const EXIT_USAGE: i32 = 64;
