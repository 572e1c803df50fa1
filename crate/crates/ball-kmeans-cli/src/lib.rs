//! Benchmark harness around the `ball-kmeans` library: dataset loading and
//! generation, paired algorithm runs with an equivalence verdict, and
//! metrics reporting.

pub mod commands;
pub mod config;
pub mod error;
pub mod io;
pub mod report;

pub use commands::{cmd_run, equivalence_verdict, write_metrics, MetricsRecord};
pub use config::{Algorithm, GenerateSpec, RunConfig};
pub use error::{CliError, Result};
pub use io::{load_binary, load_csv, load_dataset, write_binary};
pub use report::{cmd_report, read_metrics, render_report};
