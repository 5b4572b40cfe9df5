//! Command-line front end for `ucfam-core`: the family file format and the
//! subcommand implementations behind the `ucf` binary.

pub mod commands;
pub mod format;

pub use commands::Exit;
pub use format::{parse_family, write_family, ParseError};
