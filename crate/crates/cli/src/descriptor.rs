//! Graph descriptors (`complete:5`, `cycle:15`, `file:graph.txt`, ...) and the
//! plain-text edge-list format.

use std::collections::BTreeSet;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use pulsewalk_core::{GraphKind, SimpleGraph};

use crate::CliError;

#[derive(Debug, Clone, PartialEq)]
pub enum GraphSpec {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Star(usize),
    /// The seed is optional; a missing one falls back to `--seed`.
    Random {
        n: usize,
        p: f64,
        seed: Option<u64>,
    },
    File(PathBuf),
}

impl FromStr for GraphSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let bad = || CliError::Descriptor(s.to_string());
        let (family, rest) = s.split_once(':').ok_or_else(bad)?;
        let num = |v: &str| v.trim().parse::<usize>().map_err(|_| bad());
        match family.trim() {
            "complete" => Ok(GraphSpec::Complete(num(rest)?)),
            "cycle" => Ok(GraphSpec::Cycle(num(rest)?)),
            "path" => Ok(GraphSpec::Path(num(rest)?)),
            "star" => Ok(GraphSpec::Star(num(rest)?)),
            "random" => {
                let parts: Vec<&str> = rest.split(':').collect();
                if !(2..=3).contains(&parts.len()) {
                    return Err(bad());
                }
                let n = num(parts[0])?;
                let p = parts[1].trim().parse::<f64>().map_err(|_| bad())?;
                let seed = match parts.get(2) {
                    Some(v) => Some(v.trim().parse::<u64>().map_err(|_| bad())?),
                    None => None,
                };
                Ok(GraphSpec::Random { n, p, seed })
            }
            "file" if !rest.is_empty() => Ok(GraphSpec::File(PathBuf::from(rest))),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Complete(n) => write!(f, "complete:{n}"),
            GraphSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GraphSpec::Path(n) => write!(f, "path:{n}"),
            GraphSpec::Star(n) => write!(f, "star:{n}"),
            GraphSpec::Random { n, p, seed: Some(s) } => write!(f, "random:{n}:{p}:{s}"),
            GraphSpec::Random { n, p, seed: None } => write!(f, "random:{n}:{p}"),
            GraphSpec::File(path) => write!(f, "file:{}", path.display()),
        }
    }
}

impl GraphSpec {
    /// Builds the graph. `default_seed` is used by `random:N:P` without a seed.
    pub fn build(&self, default_seed: u64) -> Result<SimpleGraph, CliError> {
        let kind = match *self {
            GraphSpec::Complete(n) => GraphKind::Complete(n),
            GraphSpec::Cycle(n) => GraphKind::Cycle(n),
            GraphSpec::Path(n) => GraphKind::Path(n),
            GraphSpec::Star(n) => GraphKind::Star(n),
            GraphSpec::Random { n, p, seed } => GraphKind::Random {
                n,
                p,
                seed: seed.unwrap_or(default_seed),
            },
            GraphSpec::File(ref path) => return read_edge_list(path),
        };
        Ok(kind.generate()?)
    }
}

/// Reads an edge-list file: one edge per line as two whitespace-separated
/// 0-indexed vertex ids. Lines starting with `#` and blank lines are
/// skipped. The vertex count is one more than the largest id.
pub fn read_edge_list(path: &Path) -> Result<SimpleGraph, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    parse_edge_list(&text).map_err(|(line, message)| CliError::EdgeList {
        path: path.to_path_buf(),
        line,
        message,
    })
}

/// Parses edge-list text. Errors carry the 1-based line number, or `None`
/// for whole-graph problems such as disconnection.
pub fn parse_edge_list(text: &str) -> Result<SimpleGraph, (Option<usize>, String)> {
    let mut edges = Vec::new();
    let mut seen = BTreeSet::new();
    let mut max_vertex = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let at = |message: String| (Some(i + 1), message);
        let ids: Vec<&str> = line.split_whitespace().collect();
        if ids.len() != 2 {
            return Err(at(format!("expected two vertex ids, found {line:?}")));
        }
        let parse = |v: &str| v.parse::<usize>().map_err(|_| at(format!("{v:?} is not a vertex id")));
        let (u, v) = (parse(ids[0])?, parse(ids[1])?);
        if u == v {
            return Err(at(format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(at(format!("duplicate edge {{{u}, {v}}}")));
        }
        max_vertex = Some(max_vertex.unwrap_or(0).max(u).max(v));
        edges.push((u, v));
    }
    let n = max_vertex.map_or(0, |m| m + 1);
    SimpleGraph::new(n, &edges).map_err(|e| (None, e.to_string()))
}
