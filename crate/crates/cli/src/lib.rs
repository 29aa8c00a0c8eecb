//! File formats, tables and command implementations behind the `qudit-pt`
//! binary.

pub mod commands;
pub mod error;
pub mod scan;
pub mod statefile;
pub mod tables;

pub use error::{CliError, ExitCode};
pub use scan::{werner_scan, ScanConfig, SweepRow};
pub use statefile::StateFile;

/// Default tolerance for every command; `QW_TOL` or `--tol` override it.
pub const DEFAULT_CLI_TOL: f64 = 1e-9;
