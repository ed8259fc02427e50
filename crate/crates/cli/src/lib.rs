//! Output formatting for the `regraph` command-line tool.

pub mod output;
pub mod render;
