//! Command-line front end for `qpart-core`.

pub mod args;
pub mod commands;
pub mod record;

pub use args::{Cli, Command, Format};
pub use commands::{run, Outcome};
pub use record::{OutputRecord, ResultItem};
