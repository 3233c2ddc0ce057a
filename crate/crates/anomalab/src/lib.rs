//! Std companion: JSON formats and the command-line front end.

pub mod commands;
pub mod error;
pub mod json;

pub use commands::{caps_from_env, run, run_args, Command, Outcome};
pub use error::CliError;
