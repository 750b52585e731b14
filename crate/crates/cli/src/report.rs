//! Summary statistics and pass/fail rules printed by the subcommands.

use std::fmt;

use pulsewalk_core::asymptotics::{auto_horizon, first_argmax, tau_tolerance, tau_within_tolerance};

use crate::series_csv::SeriesRow;

/// Allowed `|Σμ - 1|` at every step.
pub const CLOSURE_TOL: f64 = 1e-9;
/// Allowed `max |μ_sim - μ_theory|` over `t <= 2τ`, in units of `ε`.
pub const DEVIATION_PER_EPSILON: f64 = 2.0;
/// Allowed overlap deviation from the closed forms, in units of `ε`.
pub const OVERLAP_PER_EPSILON: f64 = 5.0;
/// Allowed residual of an exact lifted eigenvector.
pub const LIFT_RESIDUAL_TOL: f64 = 1e-9;
/// Allowed gap between the reduced `λ⁽¹⁾` and `-(1/|A1| + 1/|A2|)`.
pub const LAMBDA1_TOL: f64 = 1e-12;

/// Statistics that depend only on the CSV columns and `τ_formula`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSummary {
    pub horizon: usize,
    pub max_mu2: f64,
    pub min_mu1: f64,
    /// First maximum of `μ2` over `[0, 2τ + 10]`; `None` if the series is
    /// shorter than `2τ`.
    pub first_peak: Option<usize>,
    pub max_closure_error: f64,
    /// Over `t <= 2τ` (clipped to the horizon).
    pub max_theory_deviation: f64,
}

impl SeriesSummary {
    pub fn from_rows(rows: &[SeriesRow], tau_formula: usize) -> SeriesSummary {
        let horizon = rows.len().saturating_sub(1);
        let first_peak = (horizon >= 2 * tau_formula)
            .then(|| first_argmax(rows.iter().take(auto_horizon(tau_formula) + 1).map(|r| r.mu_h2)));
        SeriesSummary {
            horizon,
            max_mu2: rows.iter().map(|r| r.mu_h2).fold(f64::NEG_INFINITY, f64::max),
            min_mu1: rows.iter().map(|r| r.mu_h1).fold(f64::INFINITY, f64::min),
            first_peak,
            max_closure_error: rows
                .iter()
                .map(|r| (r.mu_h1 + r.mu_h2 + r.mu_h0 - 1.0).abs())
                .fold(0.0, f64::max),
            max_theory_deviation: rows
                .iter()
                .take(2 * tau_formula + 1)
                .map(|r| (r.mu_h1 - r.mu_h1_theory).abs().max((r.mu_h2 - r.mu_h2_theory).abs()))
                .fold(0.0, f64::max),
        }
    }
}

/// One acceptance rule outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct Rule {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Rule {
    pub fn new(name: &'static str, passed: bool, detail: String) -> Rule {
        Rule { name, passed, detail }
    }
}

pub fn all_pass(rules: &[Rule]) -> bool {
    rules.iter().all(|r| r.passed)
}

/// Report of one `simulate` run against the closed-form theory.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub scenario: Vec<(&'static str, String)>,
    pub a1: usize,
    pub a2: usize,
    pub epsilon: f64,
    pub cos_numeric: f64,
    pub cos_asymptotic: f64,
    pub tau_formula: usize,
    pub summary: SeriesSummary,
    pub rules: Vec<Rule>,
}

impl ComparisonReport {
    pub fn evaluate_rules(summary: &SeriesSummary, epsilon: f64, tau_formula: usize) -> Vec<Rule> {
        let mut rules = vec![
            Rule::new(
                "probability_closure",
                summary.max_closure_error < CLOSURE_TOL,
                format!("max |Σμ - 1| = {:.3e} (< {CLOSURE_TOL:e})", summary.max_closure_error),
            ),
            Rule::new(
                "theory_deviation",
                summary.max_theory_deviation <= DEVIATION_PER_EPSILON * epsilon,
                format!(
                    "max |μ - μ_theory| = {:.3e} (<= {DEVIATION_PER_EPSILON}ε = {:.3e})",
                    summary.max_theory_deviation,
                    DEVIATION_PER_EPSILON * epsilon
                ),
            ),
        ];
        if let Some(peak) = summary.first_peak {
            rules.push(Rule::new(
                "first_peak",
                tau_within_tolerance(tau_formula, peak),
                format!(
                    "τ_simulated = {peak}, τ_formula = {tau_formula}, tolerance {}",
                    tau_tolerance(tau_formula)
                ),
            ));
        }
        rules
    }

    pub fn passed(&self) -> bool {
        all_pass(&self.rules)
    }
}

impl fmt::Display for ComparisonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.scenario {
            writeln!(f, "{k}: {v}")?;
        }
        writeln!(f, "arcs: |A1| = {}, |A2| = {}", self.a1, self.a2)?;
        writeln!(f, "cos_theta_numeric: {:.12}", self.cos_numeric)?;
        writeln!(f, "cos_theta_asymptotic: {:.12}", self.cos_asymptotic)?;
        writeln!(f, "tau_formula: {}", self.tau_formula)?;
        match self.summary.first_peak {
            Some(p) => writeln!(f, "tau_simulated: {p}")?,
            None => writeln!(f, "tau_simulated: n/a (horizon < 2 tau)")?,
        }
        writeln!(f, "max_mu_h2: {:.9}", self.summary.max_mu2)?;
        writeln!(f, "min_mu_h1: {:.9}", self.summary.min_mu1)?;
        writeln!(f, "max_theory_deviation: {:.6e}", self.summary.max_theory_deviation)?;
        write_rules(f, &self.rules)
    }
}

pub fn write_rules(f: &mut impl fmt::Write, rules: &[Rule]) -> fmt::Result {
    for r in rules {
        writeln!(
            f,
            "[{}] {}: {}",
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            r.detail
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(t: usize, mu_h1: f64, mu_h2: f64) -> SeriesRow {
        SeriesRow {
            t,
            mu_h1,
            mu_h2,
            mu_h0: 1.0 - mu_h1 - mu_h2,
            mu_h1_theory: mu_h1,
            mu_h2_theory: mu_h2 + 0.001,
        }
    }

    #[test]
    fn summary_statistics() {
        let rows: Vec<_> = (0..=10)
            .map(|t| row(t, 1.0 - t as f64 / 20.0, (t % 6) as f64 / 10.0))
            .collect();
        let s = SeriesSummary::from_rows(&rows, 4);
        assert_eq!(s.horizon, 10);
        assert_eq!(s.first_peak, Some(5));
        assert_eq!(s.max_mu2, 0.5);
        assert_eq!(s.min_mu1, 0.5);
        assert!((s.max_theory_deviation - 0.001).abs() < 1e-15);
        let short = SeriesSummary::from_rows(&rows, 6);
        assert_eq!(short.first_peak, None);
    }

    #[test]
    fn rules_follow_thresholds() {
        let rows: Vec<_> = (0..=10).map(|t| row(t, 1.0, 0.0)).collect();
        let s = SeriesSummary::from_rows(&rows, 4);
        let rules = ComparisonReport::evaluate_rules(&s, 0.01, 4);
        assert_eq!(rules.len(), 3);
        assert!(rules[0].passed && rules[1].passed);
        // first peak at t = 0, τ = 4: off by 4 > 2
        assert!(!rules[2].passed);
        let strict = ComparisonReport::evaluate_rules(&s, 0.0001, 4);
        assert!(!strict[1].passed);
    }
}
