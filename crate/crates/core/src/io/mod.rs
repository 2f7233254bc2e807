//! File formats and the command-line front end.

pub mod cli;
pub mod document;
pub mod dot;
pub mod table;
