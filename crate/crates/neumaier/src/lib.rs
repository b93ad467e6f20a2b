//! IO formats, reports and the command-line front end for `neumaier-core`.

pub mod commands;
pub mod format;
pub mod input;
pub mod report;

pub use neumaier_core as core;
