//! Command-line front end: group files, JSON reports, the result cache and
//! the `grp` subcommands.

pub mod cache;
pub mod cli;
pub mod groupfile;
pub mod report;

pub use cli::{run, EXIT_ERROR, EXIT_OK, EXIT_VIOLATION};

/// Runs with the process arguments.
pub fn run_from_env() -> i32 {
    run(std::env::args_os())
}
