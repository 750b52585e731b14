use std::path::PathBuf;

use pulsewalk_core::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(
        "invalid graph descriptor {0:?} (expected complete:N, cycle:N, path:N, star:N, random:N:P[:SEED] or file:PATH)"
    )]
    Descriptor(String),
    #[error("{}{}: {message}", path.display(), line.map(|l| format!(":{l}")).unwrap_or_default())]
    EdgeList {
        path: PathBuf,
        line: Option<usize>,
        message: String,
    },
    #[error("config {path}:{line}: {message}")]
    ConfigSyntax {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("invalid value for {key}: {value:?}")]
    BadValue { key: String, value: String },
    #[error("missing required setting `{0}`")]
    Missing(&'static str),
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Core(#[from] pulsewalk_core::Error),
}

impl CliError {
    /// Configuration and argument problems, including graphs that fail
    /// validation, are usage errors (exit code 2).
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            CliError::Descriptor(_)
                | CliError::EdgeList { .. }
                | CliError::ConfigSyntax { .. }
                | CliError::BadValue { .. }
                | CliError::Missing(_)
                | CliError::Usage(_)
                | CliError::Read { .. }
                | CliError::Core(
                    CoreError::BadBoundaryVertex { .. }
                        | CoreError::SelfLoop { .. }
                        | CoreError::DuplicateEdge { .. }
                        | CoreError::VertexOutOfRange { .. }
                        | CoreError::Disconnected
                        | CoreError::NoEdges
                        | CoreError::TooSmall { .. }
                        | CoreError::InvalidProbability(_)
                )
        )
    }
}
