//! Command implementations behind the `cy3` binary.

pub mod commands;
pub mod report;

pub use report::RunReport;
