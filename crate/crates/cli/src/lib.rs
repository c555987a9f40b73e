//! Configuration parsing, serialization, and the verification suite for
//! the `aquiflow` binary. Split from the binary so integration tests can
//! drive the same code paths in-process.

pub mod config;
pub mod output;
pub mod verify;

pub use config::{parse_config, ConfigError, OutputFormat, RunConfig};
pub use verify::{run_all, CheckResult};
