use alloc::vec;
use alloc::vec::Vec;

use super::SimpleGraph;
use crate::{Error, Result};

/// Which part of the bridged graph an arc (or vertex) belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Region {
    H1,
    H2,
    Bridge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub origin: usize,
    pub terminal: usize,
    pub index: usize,
}

/// Per-vertex degree inside its own subgraph, and total outgoing weight at a
/// fixed bridge weight.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedDegrees {
    pub deg: Vec<usize>,
    pub m: Vec<f64>,
}

/// Two simple graphs `H1`, `H2` joined by the bridge `{(ξ1, ξ2), (ξ2, ξ1)}`.
///
/// Vertices of `H2` are shifted by `|V1|`. Arcs are ordered as all `H1` arcs
/// sorted by `(origin, terminal)`, then all `H2` arcs likewise, then the two
/// bridge arcs `ξ1 → ξ2` and `ξ2 → ξ1`.
#[derive(Debug, Clone)]
pub struct BridgedGraph {
    h1: SimpleGraph,
    h2: SimpleGraph,
    xi1: usize,
    xi2: usize,
    arcs: Vec<Arc>,
    regions: Vec<Region>,
    inverse: Vec<usize>,
    deg: Vec<usize>,
    incoming: Vec<Vec<usize>>,
}

impl BridgedGraph {
    /// Joins `h1` and `h2` at the boundary vertices `xi1` (in `h1`) and `xi2`
    /// (in `h2`, local numbering).
    pub fn new(h1: SimpleGraph, xi1: usize, h2: SimpleGraph, xi2: usize) -> Result<Self> {
        if xi1 >= h1.vertex_count() {
            return Err(Error::BadBoundaryVertex {
                vertex: xi1,
                vertex_count: h1.vertex_count(),
            });
        }
        if xi2 >= h2.vertex_count() {
            return Err(Error::BadBoundaryVertex {
                vertex: xi2,
                vertex_count: h2.vertex_count(),
            });
        }
        let offset = h1.vertex_count();
        let n = offset + h2.vertex_count();

        let mut pairs = Vec::with_capacity(h1.arc_count() + h2.arc_count() + 2);
        let mut regions = Vec::with_capacity(pairs.capacity());
        for (u, v) in h1.arcs() {
            pairs.push((u, v));
            regions.push(Region::H1);
        }
        for (u, v) in h2.arcs() {
            pairs.push((u + offset, v + offset));
            regions.push(Region::H2);
        }
        pairs.push((xi1, xi2 + offset));
        pairs.push((xi2 + offset, xi1));
        regions.extend([Region::Bridge, Region::Bridge]);

        let arcs: Vec<Arc> = pairs
            .iter()
            .enumerate()
            .map(|(index, &(origin, terminal))| Arc {
                origin,
                terminal,
                index,
            })
            .collect();

        // Each block is sorted by (origin, terminal), so the reverse arc can be
        // found by binary search inside the block.
        let h1_len = h1.arc_count();
        let h2_len = h2.arc_count();
        let mut inverse = vec![0; arcs.len()];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            let (start, end) = match regions[i] {
                Region::H1 => (0, h1_len),
                Region::H2 => (h1_len, h1_len + h2_len),
                Region::Bridge => (h1_len + h2_len, pairs.len()),
            };
            let j = match regions[i] {
                Region::Bridge => start + (end - 1 - i),
                _ => start + pairs[start..end].binary_search(&(v, u)).expect("symmetric arc list"),
            };
            inverse[i] = j;
        }

        let mut deg = h1.degrees();
        deg.extend(h2.degrees());

        let mut incoming = vec![Vec::new(); n];
        for a in &arcs {
            incoming[a.terminal].push(a.index);
        }

        Ok(BridgedGraph {
            h1,
            h2,
            xi1,
            xi2,
            arcs,
            regions,
            inverse,
            deg,
            incoming,
        })
    }

    pub fn h1(&self) -> &SimpleGraph {
        &self.h1
    }

    pub fn h2(&self) -> &SimpleGraph {
        &self.h2
    }

    /// `ξ1` and `ξ2` in global vertex numbering.
    pub fn boundary(&self) -> [usize; 2] {
        [self.xi1, self.xi2 + self.h1.vertex_count()]
    }

    pub fn is_boundary(&self, x: usize) -> bool {
        self.boundary().contains(&x)
    }

    pub fn vertex_count(&self) -> usize {
        self.deg.len()
    }

    /// `|V1|`; vertices `0..|V1|` belong to `H1`.
    pub fn h1_vertex_count(&self) -> usize {
        self.h1.vertex_count()
    }

    pub fn vertex_region(&self, x: usize) -> Region {
        if x < self.h1.vertex_count() {
            Region::H1
        } else {
            Region::H2
        }
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// `|A1|`.
    pub fn a1(&self) -> usize {
        self.h1.arc_count()
    }

    /// `|A2|`.
    pub fn a2(&self) -> usize {
        self.h2.arc_count()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, index: usize) -> Arc {
        self.arcs[index]
    }

    pub fn region(&self, index: usize) -> Region {
        self.regions[index]
    }

    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    /// Index of the reversed arc `ā`.
    pub fn inverse(&self, index: usize) -> usize {
        self.inverse[index]
    }

    /// Indices of arcs `b` with `t(b) = x`.
    pub fn incoming(&self, x: usize) -> &[usize] {
        &self.incoming[x]
    }

    /// Degree of `x` inside its own subgraph (bridge not counted).
    pub fn degree(&self, x: usize) -> usize {
        self.deg[x]
    }

    pub fn weight(&self, index: usize, epsilon: f64) -> f64 {
        match self.regions[index] {
            Region::Bridge => epsilon,
            _ => 1.0,
        }
    }

    /// `m(x) = Σ_{o(a)=x} w(a)`.
    pub fn out_weight(&self, x: usize, epsilon: f64) -> f64 {
        let d = self.deg[x] as f64;
        if self.is_boundary(x) {
            d + epsilon
        } else {
            d
        }
    }

    pub fn weighted_degrees(&self, epsilon: f64) -> WeightedDegrees {
        WeightedDegrees {
            deg: self.deg.clone(),
            m: (0..self.vertex_count()).map(|x| self.out_weight(x, epsilon)).collect(),
        }
    }

    /// `p_ε(a) = w(a) / m(o(a))`.
    pub fn transition_prob(&self, index: usize, epsilon: f64) -> f64 {
        let a = self.arcs[index];
        self.weight(index, epsilon) / self.out_weight(a.origin, epsilon)
    }
}
