//! Front end for the `weyl` command-line tool: expression parsing and
//! lowering plus the `normalize`, `verify`, `table` and `bench` commands.

pub mod commands;
pub mod expr;

pub use commands::{CliError, Format, Output};
