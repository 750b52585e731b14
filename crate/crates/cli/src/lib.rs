//! Command-line experiments for bridged-graph Grover walks.
//!
//! Everything that touches the filesystem lives here: graph descriptors and
//! edge-list files, scenario configuration, CSV series, SVG plots, and the
//! text reports printed by each subcommand.

pub mod commands;
pub mod config;
pub mod descriptor;
pub mod error;
pub mod report;
pub mod series_csv;
pub mod svg;

pub use config::{Horizon, ScenarioConfig};
pub use descriptor::GraphSpec;
pub use error::CliError;
