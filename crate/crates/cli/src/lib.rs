//! Instance files, reports and command implementations behind the
//! `frustra` binary.

pub mod commands;
pub mod instance;
pub mod report;

pub use commands::{run, Cli, CliError, Command};
pub use instance::{parse, render, InstanceFile};
pub use report::RunReport;
