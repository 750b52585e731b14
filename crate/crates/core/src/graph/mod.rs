//! Simple graphs, the named families, and the bridged composition.

mod bridged;
mod generators;

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

pub use bridged::{Arc, BridgedGraph, Region, WeightedDegrees};
pub use generators::GraphKind;

/// A finite, simple, connected, undirected graph on vertices `0..vertex_count`.
///
/// Edges are stored once each as `(u, v)` with `u < v`, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    /// Validates an edge list.
    ///
    /// Rejects out-of-range endpoints, self-loops, repeated edges (in either
    /// orientation), an empty edge set, and disconnected graphs.
    pub fn new(vertex_count: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &(u, v) in edge_list {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge { u: key.0, v: key.1 });
            }
        }
        if seen.is_empty() {
            return Err(Error::NoEdges);
        }
        let graph = SimpleGraph {
            vertex_count,
            edges: seen.into_iter().collect(),
        };
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(graph)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Number of symmetric arcs, `2 * edge_count`.
    pub fn arc_count(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// All arcs `(origin, terminal)` sorted lexicographically.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs: Vec<_> = self.edges.iter().flat_map(|&(u, v)| [(u, v), (v, u)]).collect();
        arcs.sort_unstable();
        arcs
    }

    fn is_connected(&self) -> bool {
        let mut adjacency = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut visited = vec![false; self.vertex_count];
        let mut stack = vec![0];
        visited[0] = true;
        let mut reached = 1;
        while let Some(x) = stack.pop() {
            for &y in &adjacency[x] {
                if !visited[y] {
                    visited[y] = true;
                    reached += 1;
                    stack.push(y);
                }
            }
        }
        reached == self.vertex_count
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = SimpleGraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.arc_count(), 6);
        assert_eq!(g.degrees(), vec![2, 2, 2]);
    }

    #[test]
    fn k5_from_all_pairs() {
        let pairs: Vec<_> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
        let g = SimpleGraph::new(5, &pairs).unwrap();
        // 2 * C(5, 2)
        assert_eq!(g.arc_count(), 20);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(SimpleGraph::new(4, &[(0, 1), (2, 3)]), Err(Error::Disconnected));
        assert_eq!(
            SimpleGraph::new(3, &[(0, 1), (1, 1)]),
            Err(Error::SelfLoop { vertex: 1 })
        );
        assert_eq!(
            SimpleGraph::new(3, &[(0, 1), (1, 2), (1, 0)]),
            Err(Error::DuplicateEdge { u: 0, v: 1 })
        );
        assert_eq!(SimpleGraph::new(1, &[]), Err(Error::NoEdges));
        assert_eq!(
            SimpleGraph::new(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange {
                vertex: 2,
                vertex_count: 2
            })
        );
    }

    #[test]
    fn arcs_are_sorted_and_paired() {
        let g = SimpleGraph::new(3, &[(2, 0), (0, 1)]).unwrap();
        assert_eq!(g.arcs(), vec![(0, 1), (0, 2), (1, 0), (2, 0)]);
    }
}
