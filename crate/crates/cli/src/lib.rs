//! Command-line front end for `relqubit`.

pub mod commands;
pub mod document;
pub mod error;
pub mod format;
