//! CSV formats and the `auction` command line.

pub mod app;
pub mod format;

pub use app::run_cli;
