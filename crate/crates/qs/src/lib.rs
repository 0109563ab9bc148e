//! JSON formats and the `qs` command-line driver for `qs-core`.

pub mod cli;
pub mod json;
