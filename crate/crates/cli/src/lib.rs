//! Command-line front end: argument grammar, subcommand bodies, CSV sweeps
//! and the self-test suites.

pub mod args;
pub mod commands;
pub mod error;
pub mod output;
pub mod selftest;
pub mod sweep;

pub use args::{Cli, Command, OracleMethod, SweepMode};
pub use commands::run;
pub use error::{CliError, CliResult, EXIT_INSIDE, EXIT_NUMERIC, EXIT_OK, EXIT_SELFTEST, EXIT_USAGE};
pub use selftest::{Check, Suite};
pub use sweep::{render_csv, write_sweep, SweepSpec};
