//! Library half of the `tripack` binary: the graph file format and the
//! subcommand implementations, kept out of `main.rs` so integration
//! tests can call them directly.

pub mod commands;
pub mod format;
