//! Command-line front end for the `comalg` library: a small text
//! format for rings and ideals, subcommands for the individual
//! algebra operations, and the scripted verification scenarios.

pub mod driver;
pub mod parser;
pub mod report;

pub use driver::run_command;
pub use parser::{parse_source, ParseError, SourceDocument};
