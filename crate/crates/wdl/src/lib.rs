//! Text format, built-in instances, law catalog, JSON reports, DOT export
//! and the `wdl` command line, on top of `wdl-core`.

pub mod builtin;
pub mod catalog;
pub mod claims;
pub mod cli;
pub mod corpus;
pub mod dot;
pub mod format;
pub mod report;
