//! Command-line front end and file formats for `besselbound-core`.

pub mod cli;
pub mod format;
pub mod output;
pub mod runner;

pub use cli::run;
