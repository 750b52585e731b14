//! The four subcommands. Each returns whether every acceptance rule passed;
//! report text goes to `out`, or to `err` when the CSV itself is on `out`.

use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::thread;

use pulsewalk_core::asymptotics::{
    auto_horizon, tau_formula, tau_simulated, tau_tolerance, tau_within_tolerance, Envelope, TheoryParams,
};
use pulsewalk_core::spectral::{
    fixed_vector, lambda1_closed_form, overlaps, perturbation_report, reduced_eigenvalue, theta,
};
use pulsewalk_core::{BridgedGraph, ProbabilitySeries, WalkState, Walker};

use crate::config::Horizon;
use crate::report::{
    all_pass, write_rules, ComparisonReport, Rule, SeriesSummary, LAMBDA1_TOL, LIFT_RESIDUAL_TOL, OVERLAP_PER_EPSILON,
};
use crate::series_csv::{self, format_real};
use crate::{svg, CliError, ScenarioConfig};

/// Allowed `‖U ψ1 - ψ1‖` for the exact fixed vector.
pub const FIXED_RESIDUAL_TOL: f64 = 1e-12;
/// Accepted ratio of consecutive theory deviations in a sweep.
pub const DEVIATION_RATIO_RANGE: (f64, f64) = (1.5, 3.0);
/// Accepted ratio of consecutive `|Δcos θ| / ε²` values in a sweep.
pub const COS_RATIO_RANGE: (f64, f64) = (0.25, 4.0);

pub fn build_graph(cfg: &ScenarioConfig) -> Result<BridgedGraph, CliError> {
    let h1 = cfg.h1.build(cfg.seed)?;
    let h2 = cfg.h2.build(cfg.seed)?;
    Ok(BridgedGraph::new(h1, cfg.xi1, h2, cfg.xi2)?)
}

fn resolve_horizon(horizon: Horizon, tau: usize) -> usize {
    match horizon {
        Horizon::Auto => auto_horizon(tau),
        Horizon::Steps(n) => n,
    }
}

fn scenario_echo(cfg: &ScenarioConfig, epsilon: f64, horizon: usize) -> Vec<(&'static str, String)> {
    vec![
        ("h1", cfg.h1.to_string()),
        ("h2", cfg.h2.to_string()),
        ("xi1", cfg.xi1.to_string()),
        ("xi2", cfg.xi2.to_string()),
        ("eps", epsilon.to_string()),
        ("steps", horizon.to_string()),
        ("theta_source", format!("{:?}", cfg.theta_source).to_lowercase()),
        ("seed", cfg.seed.to_string()),
    ]
}

/// Runs the walk with the theory envelope attached.
fn simulate_series(
    g: &BridgedGraph,
    cfg: &ScenarioConfig,
    epsilon: f64,
    horizon: usize,
) -> Result<ProbabilitySeries, CliError> {
    let mut series = Walker::new(g, epsilon)?.evolve(horizon);
    series.attach_theory(&Envelope::from_graph(g, epsilon, cfg.theta_source)?);
    Ok(series)
}

fn create(path: &std::path::Path) -> Result<BufWriter<File>, CliError> {
    Ok(BufWriter::new(File::create(path)?))
}

/// `simulate`: CSV series, optional SVG plot, and a theory comparison.
pub fn simulate(cfg: &ScenarioConfig, out: &mut dyn Write, err: &mut dyn Write) -> Result<bool, CliError> {
    let epsilon = cfg.epsilon()?;
    let g = build_graph(cfg)?;
    let params = TheoryParams::from_graph(&g, epsilon)?;
    let tau = tau_formula(&params);
    let horizon = resolve_horizon(cfg.horizon, tau);
    let series = simulate_series(&g, cfg, epsilon, horizon)?;
    let rows = series_csv::rows(&series);

    let csv_on_stdout = cfg.outputs.csv && cfg.out_csv.is_none();
    if cfg.outputs.csv {
        match &cfg.out_csv {
            Some(path) => {
                let mut w = create(path)?;
                series_csv::write_rows(&mut w, &rows)?;
                w.flush()?;
            }
            None => series_csv::write_rows(&mut *out, &rows)?,
        }
    }
    if cfg.outputs.svg {
        let path = cfg.out_svg.as_ref().ok_or(CliError::Missing("out_svg"))?;
        let title = format!("{} + {}, eps = {epsilon}", cfg.h1, cfg.h2);
        fs::write(path, svg::render(&rows, &title))?;
    }

    let summary = SeriesSummary::from_rows(&rows, tau);
    let t = theta(&g, epsilon)?;
    let report = ComparisonReport {
        scenario: scenario_echo(cfg, epsilon, horizon),
        a1: g.a1(),
        a2: g.a2(),
        epsilon,
        cos_numeric: t.cos_numeric,
        cos_asymptotic: t.cos_asymptotic,
        tau_formula: tau,
        rules: ComparisonReport::evaluate_rules(&summary, epsilon, tau),
        summary,
    };
    if cfg.outputs.report {
        let sink: &mut dyn Write = if csv_on_stdout { err } else { out };
        write!(sink, "{report}")?;
    }
    Ok(report.passed())
}

/// `spectrum`: eigenvalue splitting, overlaps, and lift residuals.
pub fn spectrum(cfg: &ScenarioConfig, out: &mut dyn Write) -> Result<bool, CliError> {
    let epsilon = cfg.epsilon()?;
    let g = build_graph(cfg)?;
    let split = reduced_eigenvalue(&g);
    let closed = lambda1_closed_form(&g);
    let pert = perturbation_report(&g, epsilon)?;
    let t = theta(&g, epsilon)?;
    let ov = overlaps(&g, epsilon)?;

    let walker = Walker::new(&g, epsilon)?;
    let psi1 = WalkState::from_amplitudes(fixed_vector(&g, epsilon), epsilon);
    let stepped = walker.step(&psi1)?;
    let fixed_residual = stepped
        .amplitudes
        .iter()
        .zip(&psi1.amplitudes)
        .map(|(a, b)| (a - b).norm_sqr())
        .sum::<f64>()
        .sqrt();

    let mut text = String::new();
    use std::fmt::Write as _;
    for (k, v) in scenario_echo(cfg, epsilon, 0)
        .into_iter()
        .filter(|(k, _)| *k != "steps")
    {
        let _ = writeln!(text, "{k}: {v}");
    }
    let _ = writeln!(text, "arcs: |A1| = {}, |A2| = {}", g.a1(), g.a2());
    let _ = writeln!(text, "cos_theta_numeric: {:.15}", t.cos_numeric);
    let _ = writeln!(text, "cos_theta_asymptotic: {:.15}", t.cos_asymptotic);
    let _ = writeln!(text, "cos_theta_deviation_over_eps2: {:.6}", pert.residual_ratio);
    let _ = writeln!(text, "theta_numeric: {:.12}", t.theta_numeric);
    let _ = writeln!(text, "theta_asymptotic: {:.12}", t.theta_asymptotic);
    let _ = writeln!(text, "second_eigenvalue_multiplicity: {}", t.cluster.len());
    let _ = writeln!(text, "lambda1_reduced: {:.15}", split.lambda1);
    let _ = writeln!(text, "lambda1_closed_form: {:.15}", closed);
    let _ = writeln!(
        text,
        "overlap_fixed: {:.9} (closed form {:.9})",
        ov.fixed, ov.fixed_closed_form
    );
    let _ = writeln!(
        text,
        "overlap_plus: {:.9} (closed form {:.9})",
        ov.plus, ov.oscillatory_closed_form
    );
    let _ = writeln!(
        text,
        "overlap_minus: {:.9} (closed form {:.9})",
        ov.minus, ov.oscillatory_closed_form
    );
    let _ = writeln!(text, "overlap_squared_sum: {:.12}", ov.squared_sum);
    let _ = writeln!(text, "fixed_vector_residual: {fixed_residual:.3e}");
    let _ = writeln!(text, "lift_residual_plus: {:.3e}", ov.residual_plus);
    let _ = writeln!(text, "lift_residual_minus: {:.3e}", ov.residual_minus);

    let rules = vec![
        Rule::new(
            "lambda1",
            (split.lambda1 - closed).abs() <= LAMBDA1_TOL,
            format!(
                "|λ⁽¹⁾ - closed form| = {:.3e} (<= {LAMBDA1_TOL:e})",
                (split.lambda1 - closed).abs()
            ),
        ),
        Rule::new(
            "fixed_vector",
            fixed_residual <= FIXED_RESIDUAL_TOL,
            format!("‖Uψ - ψ‖ = {fixed_residual:.3e} (<= {FIXED_RESIDUAL_TOL:e})"),
        ),
        Rule::new(
            "exact_lift",
            ov.residual_plus.max(ov.residual_minus) <= LIFT_RESIDUAL_TOL,
            format!(
                "max ‖Uψ - e^(±iθ)ψ‖ = {:.3e} (<= {LIFT_RESIDUAL_TOL:e})",
                ov.residual_plus.max(ov.residual_minus)
            ),
        ),
        Rule::new(
            "overlaps",
            ov.max_deviation() <= OVERLAP_PER_EPSILON * epsilon,
            format!(
                "max overlap deviation = {:.3e} (<= {OVERLAP_PER_EPSILON}ε = {:.3e})",
                ov.max_deviation(),
                OVERLAP_PER_EPSILON * epsilon
            ),
        ),
    ];
    let _ = write_rules(&mut text, &rules);
    out.write_all(text.as_bytes())?;
    Ok(all_pass(&rules))
}

/// `tau`: period formula against the first simulated peak.
pub fn tau(cfg: &ScenarioConfig, out: &mut dyn Write) -> Result<bool, CliError> {
    let epsilon = cfg.epsilon()?;
    let g = build_graph(cfg)?;
    let formula = tau_formula(&TheoryParams::from_graph(&g, epsilon)?);
    let horizon = resolve_horizon(cfg.horizon, formula);
    let series = Walker::new(&g, epsilon)?.evolve(horizon);
    let simulated = tau_simulated(&series, formula)?;
    let passed = tau_within_tolerance(formula, simulated);
    writeln!(
        out,
        "tau_formula: {formula}\ntau_simulated: {simulated}\ndifference: {}\n[{}] tau: tolerance {}",
        simulated as i64 - formula as i64,
        if passed { "PASS" } else { "FAIL" },
        tau_tolerance(formula)
    )?;
    Ok(passed)
}

/// Column names of the `sweep` CSV.
pub const SWEEP_HEADER: [&str; 9] = [
    "eps",
    "max_deviation",
    "deviation_ratio",
    "cos_deviation",
    "cos_deviation_over_eps2",
    "cos_ratio",
    "tau_formula",
    "tau_simulated",
    "tau_mismatch",
];

/// Per-`ε` diagnostics of a sweep. Ratios compare with the previous row and
/// are NaN on the first row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub epsilon: f64,
    pub max_deviation: f64,
    pub deviation_ratio: f64,
    pub cos_deviation: f64,
    pub cos_deviation_over_eps2: f64,
    /// Ratio of consecutive `cos_deviation` values (4 per halving of `ε`
    /// when the remainder is `O(ε²)`).
    pub cos_ratio: f64,
    pub tau_formula: usize,
    pub tau_simulated: usize,
    pub tau_mismatch: i64,
}

fn sweep_point(g: &BridgedGraph, cfg: &ScenarioConfig, epsilon: f64) -> Result<SweepRow, CliError> {
    let formula = tau_formula(&TheoryParams::from_graph(g, epsilon)?);
    let horizon = resolve_horizon(cfg.horizon, formula);
    let series = simulate_series(g, cfg, epsilon, horizon)?;
    let simulated = tau_simulated(&series, formula)?;
    let t = theta(g, epsilon)?;
    let cos_deviation = (t.cos_numeric - t.cos_asymptotic).abs();
    Ok(SweepRow {
        epsilon,
        max_deviation: series.max_theory_deviation(2 * formula),
        deviation_ratio: f64::NAN,
        cos_deviation,
        cos_deviation_over_eps2: cos_deviation / (epsilon * epsilon),
        cos_ratio: f64::NAN,
        tau_formula: formula,
        tau_simulated: simulated,
        tau_mismatch: simulated as i64 - formula as i64,
    })
}

/// Evaluates every `ε` of the sweep, one thread per value.
pub fn sweep_rows(cfg: &ScenarioConfig) -> Result<Vec<SweepRow>, CliError> {
    let eps = &cfg.eps_list;
    if eps.len() < 2 {
        return Err(CliError::Usage(format!(
            "sweep needs at least 2 eps values, got {}",
            eps.len()
        )));
    }
    if eps.windows(2).any(|w| w[1] >= w[0]) {
        return Err(CliError::Usage(
            "sweep eps values must be strictly descending".to_string(),
        ));
    }
    let g = &build_graph(cfg)?;
    let results: Vec<Result<SweepRow, CliError>> = thread::scope(|s| {
        let handles: Vec<_> = eps.iter().map(|&e| s.spawn(move || sweep_point(g, cfg, e))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sweep worker panicked"))
            .collect()
    });
    let mut rows = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    for i in 1..rows.len() {
        rows[i].deviation_ratio = rows[i - 1].max_deviation / rows[i].max_deviation;
        rows[i].cos_ratio = rows[i - 1].cos_deviation / rows[i].cos_deviation;
    }
    Ok(rows)
}

pub fn sweep_rules(rows: &[SweepRow]) -> Vec<Rule> {
    let within = |v: &[f64], (lo, hi): (f64, f64)| v.iter().all(|r| (lo..=hi).contains(r));
    let dev: Vec<f64> = rows.iter().skip(1).map(|r| r.deviation_ratio).collect();
    let cos: Vec<f64> = rows
        .windows(2)
        .map(|w| w[0].cos_deviation_over_eps2 / w[1].cos_deviation_over_eps2)
        .collect();
    vec![
        Rule::new(
            "deviation_scaling",
            within(&dev, DEVIATION_RATIO_RANGE),
            format!("consecutive ratios {dev:.4?} in {DEVIATION_RATIO_RANGE:?}"),
        ),
        Rule::new(
            "cos_theta_scaling",
            within(&cos, COS_RATIO_RANGE),
            format!("consecutive ratios of |Δcos θ|/ε² {cos:.4?} in {COS_RATIO_RANGE:?}"),
        ),
    ]
}

pub fn write_sweep_csv<W: Write>(out: W, rows: &[SweepRow]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SWEEP_HEADER)?;
    for r in rows {
        w.write_record([
            format_real(r.epsilon),
            format_real(r.max_deviation),
            format_real(r.deviation_ratio),
            format_real(r.cos_deviation),
            format_real(r.cos_deviation_over_eps2),
            format_real(r.cos_ratio),
            r.tau_formula.to_string(),
            r.tau_simulated.to_string(),
            r.tau_mismatch.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// `sweep`: scaling diagnostics over a descending list of `ε`.
pub fn sweep(cfg: &ScenarioConfig, out: &mut dyn Write, err: &mut dyn Write) -> Result<bool, CliError> {
    let rows = sweep_rows(cfg)?;
    let rules = sweep_rules(&rows);
    let report_sink: &mut dyn Write = match &cfg.out_csv {
        Some(path) => {
            let mut w = create(path)?;
            write_sweep_csv(&mut w, &rows)?;
            w.flush()?;
            out
        }
        None => {
            write_sweep_csv(&mut *out, &rows)?;
            err
        }
    };
    let mut text = String::new();
    let _ = write_rules(&mut text, &rules);
    report_sink.write_all(text.as_bytes())?;
    Ok(all_pass(&rules))
}
