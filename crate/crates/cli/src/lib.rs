//! Batch runner for the verification scenarios: JSON configs in, JSON
//! reports and exit codes out.

pub mod config;
pub mod registry;
pub mod runner;

pub use config::{ConfigError, RunConfig, ScenarioEntry};
pub use registry::{list_scenarios, ScenarioSpec, REGISTRY};
pub use runner::{run, RunReport, Summary};

/// Exit code for configuration errors.
pub const EXIT_CONFIG: i32 = 2;
