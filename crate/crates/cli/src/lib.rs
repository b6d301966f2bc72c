//! Command-line front end for `quotfan`: scenario and fan files, SVG slices of
//! fans, and the `quotfan` command dispatcher.
//!
//! Scenario and fan files are TOML documents. Integers are TOML integers;
//! rationals and integers too large for 64 bits are strings `"p/q"` / `"p"`.

pub mod commands;
pub mod fanfile;
pub mod scenario;
pub mod svg;

use thiserror::Error;

pub use commands::{run, Cli};
pub use fanfile::{emit_fan, parse_fan, FanMeta};
pub use scenario::{parse_scenario, Scenario};
pub use svg::svg_slice;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot access {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed document: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] quotfan::Error),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Exit status for a successful run.
pub const EXIT_OK: i32 = 0;
/// Exit status for malformed input, bad flags and computation errors.
pub const EXIT_INPUT: i32 = 1;
/// Exit status when a verification (check-diagram, section counts) fails.
pub const EXIT_VERIFY: i32 = 2;
