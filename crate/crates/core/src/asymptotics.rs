//! Closed-form pulsation theory: probability envelopes and transfer period.
//!
//! With `c = cos(tθ)`:
//!
//! ```text
//! μ1(t) = ((|A1| + |A2| c) / (|A1| + |A2|))²
//! μ2(t) = (√(|A1||A2|) / (|A1| + |A2|) · (1 - c))²
//! τ(ε)  = ⌊ π/√2 · √R_eff · ε^{-1/2} ⌋,   1/R_eff = 1/|A1| + 1/|A2|
//! ```

use core::f64::consts::{PI, SQRT_2};

use crate::graph::BridgedGraph;
use crate::spectral::theta;
use crate::walk::ProbabilitySeries;
use crate::{Error, Result};

/// Arc counts and bridge weight.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TheoryParams {
    pub a1: usize,
    pub a2: usize,
    pub epsilon: f64,
}

impl TheoryParams {
    pub fn new(a1: usize, a2: usize, epsilon: f64) -> Result<Self> {
        if a1 < 2 || a2 < 2 || !a1.is_multiple_of(2) || !a2.is_multiple_of(2) {
            return Err(Error::InvalidArcCounts { a1, a2 });
        }
        if epsilon.is_nan() || epsilon <= 0.0 {
            return Err(Error::InvalidEpsilon(epsilon));
        }
        Ok(TheoryParams { a1, a2, epsilon })
    }

    pub fn from_graph(g: &BridgedGraph, epsilon: f64) -> Result<Self> {
        TheoryParams::new(g.a1(), g.a2(), epsilon)
    }

    /// `arccos(1 - (1/|A1| + 1/|A2|) ε)`.
    pub fn asymptotic_theta(&self) -> f64 {
        let c = 1.0 - self.epsilon / r_eff(self.a1, self.a2);
        libm::acos(c.clamp(-1.0, 1.0))
    }
}

/// Where `θ(ε)` comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ThetaSource {
    Asymptotic,
    /// The actual declination from the eigendecomposition.
    #[default]
    Numeric,
}

/// `θ(ε)` for the envelope. The numeric route requires an isolated `λ2`.
pub fn resolve_theta(g: &BridgedGraph, epsilon: f64, source: ThetaSource) -> Result<f64> {
    match source {
        ThetaSource::Asymptotic => Ok(TheoryParams::from_graph(g, epsilon)?.asymptotic_theta()),
        ThetaSource::Numeric => {
            let report = theta(g, epsilon)?;
            report.require_simple()?;
            Ok(report.theta_numeric)
        }
    }
}

/// `(μ1, μ2)` at step `t`, without the `O(ε)` remainder.
pub fn mu_theory(t: usize, params: &TheoryParams, theta: f64) -> (f64, f64) {
    let (a1, a2) = (params.a1 as f64, params.a2 as f64);
    let c = libm::cos(t as f64 * theta);
    let total = a1 + a2;
    let mu1 = (a1 + a2 * c) / total;
    let mu2 = libm::sqrt(a1 * a2) / total * (1.0 - c);
    (mu1 * mu1, mu2 * mu2)
}

/// `(cos⁴(tθ/2), sin⁴(tθ/2))`, valid only when `|A1| = |A2|`.
pub fn mu_theory_equal_arcs(t: usize, params: &TheoryParams, theta: f64) -> Result<(f64, f64)> {
    if params.a1 != params.a2 {
        return Err(Error::UnequalArcCounts {
            a1: params.a1,
            a2: params.a2,
        });
    }
    let half = t as f64 * theta / 2.0;
    let (s, c) = (libm::sin(half), libm::cos(half));
    Ok((c * c * c * c, s * s * s * s))
}

/// Effective resistance of `|A1|` and `|A2|` in parallel.
pub fn r_eff(a1: usize, a2: usize) -> f64 {
    1.0 / (1.0 / a1 as f64 + 1.0 / a2 as f64)
}

/// First time `μ2` peaks, from the small-`ε` period formula.
pub fn tau_formula(params: &TheoryParams) -> usize {
    let tau = PI / SQRT_2 * libm::sqrt(r_eff(params.a1, params.a2)) / libm::sqrt(params.epsilon);
    libm::floor(tau) as usize
}

/// `π / θ`: the half period implied by a declination.
pub fn half_period(theta: f64) -> f64 {
    PI / theta
}

/// Default horizon capturing the first full pulsation: `2τ + 10`.
pub fn auto_horizon(tau: usize) -> usize {
    2 * tau + 10
}

/// Allowed `|τ_simulated - τ_formula|`: `max(2, 0.02 τ)`.
pub fn tau_tolerance(tau: usize) -> f64 {
    (0.02 * tau as f64).max(2.0)
}

pub fn tau_within_tolerance(formula: usize, simulated: usize) -> bool {
    libm::fabs(simulated as f64 - formula as f64) <= tau_tolerance(formula)
}

/// First `t` attaining the maximum of `μ2` over `[0, 2τ + 10]` (clipped to
/// the series). The series must reach at least `2τ`.
pub fn tau_simulated(series: &ProbabilitySeries, tau_formula: usize) -> Result<usize> {
    let required = 2 * tau_formula;
    if series.horizon() < required {
        return Err(Error::HorizonTooShort {
            horizon: series.horizon(),
            required,
        });
    }
    let window = auto_horizon(tau_formula).min(series.horizon());
    Ok(first_argmax(series.mu_h2().take(window + 1)))
}

/// Index of the first maximum; 0 for an empty iterator.
pub fn first_argmax(values: impl IntoIterator<Item = f64>) -> usize {
    let mut best = (0, f64::NEG_INFINITY);
    for (i, v) in values.into_iter().enumerate() {
        if v > best.1 {
            best = (i, v);
        }
    }
    best.0
}

/// The two envelopes for a fixed `θ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Envelope {
    pub params: TheoryParams,
    pub theta: f64,
}

impl Envelope {
    pub fn new(params: TheoryParams, theta: f64) -> Self {
        Envelope { params, theta }
    }

    pub fn from_graph(g: &BridgedGraph, epsilon: f64, source: ThetaSource) -> Result<Self> {
        Ok(Envelope {
            params: TheoryParams::from_graph(g, epsilon)?,
            theta: resolve_theta(g, epsilon, source)?,
        })
    }

    pub fn mu(&self, t: usize) -> (f64, f64) {
        mu_theory(t, &self.params, self.theta)
    }

    pub fn mu_equal_arcs(&self, t: usize) -> Result<(f64, f64)> {
        mu_theory_equal_arcs(t, &self.params, self.theta)
    }

    /// Largest `μ2`, reached at `tθ = π`.
    pub fn max_mu2(&self) -> f64 {
        let (a1, a2) = (self.params.a1 as f64, self.params.a2 as f64);
        let v = 2.0 * libm::sqrt(a1 * a2) / (a1 + a2);
        v * v
    }

    /// Smallest `μ1`: 0 when `|A2| ≥ |A1|`, else `((|A1| - |A2|)/(|A1| + |A2|))²`.
    pub fn min_mu1(&self) -> f64 {
        let (a1, a2) = (self.params.a1 as f64, self.params.a2 as f64);
        if a2 >= a1 {
            0.0
        } else {
            let v = (a1 - a2) / (a1 + a2);
            v * v
        }
    }
}
