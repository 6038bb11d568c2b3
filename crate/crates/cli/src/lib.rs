//! File formats and subcommands of the `hmodpi` binary.

pub mod commands;
pub mod format;

pub use commands::{render, run, Cli, Command, OutputFormat, Outcome};
pub use format::{AlgebraFile, Loaded};
pub mod scenarios;
