//! Argument parsing helpers and the session-file language behind `ncontact`.

pub mod commands;
mod error;
pub mod session;

pub use error::CliError;
