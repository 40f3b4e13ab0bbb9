//! Command-line front end: algebra description files, the construction
//! harness and dimension reports.

pub mod algebra_file;
pub mod harness;
pub mod report;

pub use algebra_file::{parse_algebra_file, parse_algebra_str, write_algebra, AlgebraSpecFile, SpecError, SpecErrorKind};
pub use harness::{check_theorem, run, CliError, Command, Options};
pub use report::{Results, RunReport};
