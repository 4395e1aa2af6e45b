//! Experiment runner: generates graph suites, runs the selected all-pairs
//! algorithms on each instance, optionally checks them against the
//! Floyd-Warshall oracle, and renders the results as CSV or markdown tables.

pub mod config;
pub mod experiment;
pub mod report;
pub mod verify;

pub use config::{ConfigError, ExperimentConfig, Family, NPrimeRule, OutputFormat};
pub use experiment::{oracle_cap, run_experiment, ResultRecord, ORACLE_CAP_ENV};
pub use report::{emit_csv, emit_markdown, write_csv, write_markdown};
pub use verify::{cmd_verify, GraphSource, VerifyError, VerifyOutcome};
