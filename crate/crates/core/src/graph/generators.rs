use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::SimpleGraph;
use crate::{Error, Result};

/// Attempts made by [`GraphKind::Random`] before giving up on connectivity.
pub const RANDOM_RETRIES: usize = 100;

/// Named graph families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GraphKind {
    /// `K_n`.
    Complete(usize),
    /// `C_n`, `n >= 3`.
    Cycle(usize),
    /// `P_n`: `n` vertices, `n - 1` edges.
    Path(usize),
    /// One hub (vertex 0) joined to `n - 1` leaves.
    Star(usize),
    /// Erdős–Rényi `G(n, p)`, resampled until connected.
    Random { n: usize, p: f64, seed: u64 },
}

impl GraphKind {
    pub fn generate(&self) -> Result<SimpleGraph> {
        match *self {
            GraphKind::Complete(n) => {
                check_size("complete", 2, n)?;
                let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
                SimpleGraph::new(n, &edges)
            }
            GraphKind::Cycle(n) => {
                check_size("cycle", 3, n)?;
                let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                SimpleGraph::new(n, &edges)
            }
            GraphKind::Path(n) => {
                check_size("path", 2, n)?;
                let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                SimpleGraph::new(n, &edges)
            }
            GraphKind::Star(n) => {
                check_size("star", 2, n)?;
                let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
                SimpleGraph::new(n, &edges)
            }
            GraphKind::Random { n, p, seed } => random(n, p, seed),
        }
    }
}

fn check_size(family: &'static str, min: usize, got: usize) -> Result<()> {
    if got < min {
        Err(Error::TooSmall { family, min, got })
    } else {
        Ok(())
    }
}

fn random(n: usize, p: f64, seed: u64) -> Result<SimpleGraph> {
    check_size("random", 2, n)?;
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_RETRIES {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.random::<f64>() < p {
                    edges.push((i, j));
                }
            }
        }
        match SimpleGraph::new(n, &edges) {
            Ok(g) => return Ok(g),
            Err(Error::Disconnected) | Err(Error::NoEdges) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::RandomDisconnectedAfterRetries {
        retries: RANDOM_RETRIES,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        let k6 = GraphKind::Complete(6).generate().unwrap();
        assert_eq!((k6.edge_count(), k6.arc_count()), (15, 30));
        let c15 = GraphKind::Cycle(15).generate().unwrap();
        assert_eq!((c15.edge_count(), c15.arc_count()), (15, 30));
        let p2 = GraphKind::Path(2).generate().unwrap();
        assert_eq!((p2.edge_count(), p2.arc_count()), (1, 2));
        let s5 = GraphKind::Star(5).generate().unwrap();
        assert_eq!(s5.degrees(), alloc::vec![4, 1, 1, 1, 1]);
    }

    #[test]
    fn too_small() {
        assert_eq!(
            GraphKind::Cycle(2).generate(),
            Err(Error::TooSmall {
                family: "cycle",
                min: 3,
                got: 2
            })
        );
        assert!(GraphKind::Complete(1).generate().is_err());
    }

    #[test]
    fn random_is_reproducible() {
        let kind = GraphKind::Random { n: 12, p: 0.3, seed: 7 };
        let a = kind.generate().unwrap();
        let b = kind.generate().unwrap();
        assert_eq!(a, b);
        let c = GraphKind::Random { n: 12, p: 0.3, seed: 8 }.generate().unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn random_gives_up() {
        assert_eq!(
            GraphKind::Random { n: 10, p: 0.0, seed: 1 }.generate(),
            Err(Error::RandomDisconnectedAfterRetries {
                retries: RANDOM_RETRIES
            })
        );
        assert_eq!(
            GraphKind::Random { n: 10, p: 1.5, seed: 1 }.generate(),
            Err(Error::InvalidProbability(1.5))
        );
    }
}
