//! Matrix-free Grover walk `U(ε) = S(2 d_ε* d_ε - I)` on the arcs of a
//! bridged graph.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::asymptotics::Envelope;
use crate::graph::{BridgedGraph, Region};
use crate::{Error, Result};

/// Complex amplitude per arc, the bridge weight it evolves under, and the
/// number of steps taken so far.
#[derive(Debug, Clone, PartialEq)]
pub struct WalkState {
    pub amplitudes: Vec<Complex64>,
    pub epsilon: f64,
    pub time: usize,
}

impl WalkState {
    /// Wraps arbitrary amplitudes at time 0. No normalization is applied.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>, epsilon: f64) -> Self {
        WalkState {
            amplitudes,
            epsilon,
            time: 0,
        }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Probability mass on arcs tagged with `region`.
    pub fn region_probability(&self, g: &BridgedGraph, region: Region) -> f64 {
        self.amplitudes
            .iter()
            .zip(g.regions())
            .filter(|(_, &r)| r == region)
            .map(|(z, _)| z.norm_sqr())
            .sum()
    }

    pub fn probabilities(&self, g: &BridgedGraph) -> ProbabilityTriple {
        let mut triple = ProbabilityTriple {
            mu_h1: 0.0,
            mu_h2: 0.0,
            mu_h0: 0.0,
        };
        for (z, r) in self.amplitudes.iter().zip(g.regions()) {
            let p = z.norm_sqr();
            match r {
                Region::H1 => triple.mu_h1 += p,
                Region::H2 => triple.mu_h2 += p,
                Region::Bridge => triple.mu_h0 += p,
            }
        }
        triple
    }
}

/// Finding probabilities on `H1`, `H2`, and the bridge `H0` at one time step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbabilityTriple {
    pub mu_h1: f64,
    pub mu_h2: f64,
    pub mu_h0: f64,
}

impl ProbabilityTriple {
    pub fn total(&self) -> f64 {
        self.mu_h1 + self.mu_h2 + self.mu_h0
    }
}

/// Simulated probabilities for `t = 0..=horizon`, optionally paired with the
/// closed-form envelope `(μ1, μ2)` at the same steps.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilitySeries {
    pub epsilon: f64,
    pub triples: Vec<ProbabilityTriple>,
    pub theory: Vec<(f64, f64)>,
}

impl ProbabilitySeries {
    pub fn horizon(&self) -> usize {
        self.triples.len().saturating_sub(1)
    }

    pub fn mu_h1(&self) -> impl Iterator<Item = f64> + '_ {
        self.triples.iter().map(|p| p.mu_h1)
    }

    pub fn mu_h2(&self) -> impl Iterator<Item = f64> + '_ {
        self.triples.iter().map(|p| p.mu_h2)
    }

    /// Fills `theory` from `envelope` for every simulated step.
    pub fn attach_theory(&mut self, envelope: &Envelope) {
        self.theory = (0..self.triples.len()).map(|t| envelope.mu(t)).collect();
    }

    /// `max_t max(|μ1 - μ1ᵗʰ|, |μ2 - μ2ᵗʰ|)` over `t <= up_to`.
    pub fn max_theory_deviation(&self, up_to: usize) -> f64 {
        self.triples
            .iter()
            .zip(&self.theory)
            .take(up_to.saturating_add(1))
            .map(|(p, &(m1, m2))| libm::fabs(p.mu_h1 - m1).max(libm::fabs(p.mu_h2 - m2)))
            .fold(0.0, f64::max)
    }
}

/// Precomputed `√p_ε(a)` for one `(graph, ε)` pair.
#[derive(Debug, Clone)]
pub struct Walker<'g> {
    graph: &'g BridgedGraph,
    epsilon: f64,
    sqrt_p: Vec<f64>,
}

impl<'g> Walker<'g> {
    /// `epsilon` must lie in `[0, 1]`.
    pub fn new(graph: &'g BridgedGraph, epsilon: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&epsilon) {
            return Err(Error::InvalidEpsilon(epsilon));
        }
        let sqrt_p = (0..graph.arc_count())
            .map(|a| libm::sqrt(graph.transition_prob(a, epsilon)))
            .collect();
        Ok(Walker { graph, epsilon, sqrt_p })
    }

    pub fn graph(&self) -> &'g BridgedGraph {
        self.graph
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// `√p_ε(a)` indexed by arc.
    pub fn sqrt_p(&self) -> &[f64] {
        &self.sqrt_p
    }

    /// Uniform superposition on the arcs of `H1`.
    pub fn initial_state(&self) -> WalkState {
        let a1 = self.graph.a1();
        let amp = Complex64::new(1.0 / libm::sqrt(a1 as f64), 0.0);
        let amplitudes = self
            .graph
            .regions()
            .iter()
            .map(|&r| if r == Region::H1 { amp } else { Complex64::new(0.0, 0.0) })
            .collect();
        WalkState {
            amplitudes,
            epsilon: self.epsilon,
            time: 0,
        }
    }

    /// One application of `U(ε)`.
    pub fn step(&self, state: &WalkState) -> Result<WalkState> {
        self.check(state)?;
        let mut s = vec![Complex64::new(0.0, 0.0); self.graph.vertex_count()];
        let mut out = vec![Complex64::new(0.0, 0.0); state.amplitudes.len()];
        self.apply(&state.amplitudes, &mut s, &mut out);
        Ok(WalkState {
            amplitudes: out,
            epsilon: self.epsilon,
            time: state.time + 1,
        })
    }

    /// Runs `horizon` steps from the initial state and records the finding
    /// probabilities at every step, including `t = 0`.
    pub fn evolve(&self, horizon: usize) -> ProbabilitySeries {
        let mut triples = Vec::with_capacity(horizon + 1);
        let mut psi = self.initial_state().amplitudes;
        let mut next = vec![Complex64::new(0.0, 0.0); psi.len()];
        let mut s = vec![Complex64::new(0.0, 0.0); self.graph.vertex_count()];
        let probe = |amps: &[Complex64]| {
            WalkState {
                amplitudes: amps.to_vec(),
                epsilon: self.epsilon,
                time: 0,
            }
            .probabilities(self.graph)
        };
        triples.push(probe(&psi));
        for _ in 0..horizon {
            self.apply(&psi, &mut s, &mut next);
            core::mem::swap(&mut psi, &mut next);
            triples.push(probe(&psi));
        }
        ProbabilitySeries {
            epsilon: self.epsilon,
            triples,
            theory: Vec::new(),
        }
    }

    fn check(&self, state: &WalkState) -> Result<()> {
        if state.amplitudes.len() != self.graph.arc_count() {
            return Err(Error::LengthMismatch {
                expected: self.graph.arc_count(),
                got: state.amplitudes.len(),
            });
        }
        if state.epsilon != self.epsilon {
            return Err(Error::EpsilonMismatch {
                state: state.epsilon,
                walker: self.epsilon,
            });
        }
        Ok(())
    }

    // s_x = Σ_{t(b)=x} √p(b̄) ψ(b) ; ψ'(a) = 2 √p(a) s_{o(a)} - ψ(ā)
    fn apply(&self, psi: &[Complex64], s: &mut [Complex64], out: &mut [Complex64]) {
        let g = self.graph;
        for (x, sx) in s.iter_mut().enumerate() {
            *sx = g.incoming(x).iter().map(|&b| psi[b] * self.sqrt_p[g.inverse(b)]).sum();
        }
        for (a, slot) in out.iter_mut().enumerate() {
            let origin = g.arc(a).origin;
            *slot = s[origin] * (2.0 * self.sqrt_p[a]) - psi[g.inverse(a)];
        }
    }
}

/// Convenience wrapper: build a [`Walker`] and run [`Walker::evolve`].
pub fn evolve(g: &BridgedGraph, epsilon: f64, horizon: usize) -> Result<ProbabilitySeries> {
    Ok(Walker::new(g, epsilon)?.evolve(horizon))
}
