use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use pulsewalk::config::Settings;
use pulsewalk::{commands, CliError, ScenarioConfig};

/// Grover walks on two graphs joined by an ε-weighted bridge.
///
/// Exit status: 0 when every acceptance rule passes, 1 when a rule fails or
/// the run errors, 2 on a usage or configuration error.
#[derive(Parser)]
#[command(name = "pulsewalk", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evolve the walk and compare μ_t(H1), μ_t(H2) with the theory envelope.
    Simulate(ScenarioArgs),
    /// Eigenvalue splitting, overlaps, and lifted-eigenvector residuals.
    Spectrum(ScenarioArgs),
    /// First peak time of μ_t(H2) against the period formula.
    Tau(ScenarioArgs),
    /// Remainder-scaling diagnostics over a descending list of ε.
    Sweep(ScenarioArgs),
}

#[derive(Args)]
struct ScenarioArgs {
    /// Flat key=value scenario file; flags override its entries.
    #[arg(long)]
    config: Option<PathBuf>,
    /// First graph: complete:N, cycle:N, path:N, star:N, random:N:P[:SEED] or file:PATH.
    #[arg(long)]
    h1: Option<String>,
    /// Second graph, same syntax as --h1.
    #[arg(long)]
    h2: Option<String>,
    /// Boundary vertex of the first graph (default 0).
    #[arg(long)]
    xi1: Option<String>,
    /// Boundary vertex of the second graph (default 0).
    #[arg(long)]
    xi2: Option<String>,
    /// Bridge weight ε in (0, 1].
    #[arg(long)]
    eps: Option<String>,
    /// Number of steps, or "auto" for 2τ + 10 (default).
    #[arg(long)]
    steps: Option<String>,
    /// Write the CSV here instead of standard output.
    #[arg(long)]
    out_csv: Option<PathBuf>,
    /// Write the SVG plot here.
    #[arg(long)]
    out_svg: Option<PathBuf>,
    /// numeric (default) or asymptotic.
    #[arg(long)]
    theta_source: Option<String>,
    /// Seed for random:N:P descriptors without their own seed (default 0).
    #[arg(long)]
    seed: Option<String>,
    /// Comma-separated subset of csv, svg, report (default report).
    #[arg(long)]
    outputs: Option<String>,
    /// Comma-separated, strictly descending ε values for sweep.
    #[arg(long)]
    eps_list: Option<String>,
}

impl ScenarioArgs {
    fn resolve(&self) -> Result<ScenarioConfig, CliError> {
        let mut flags = Settings::default();
        let text = [
            ("h1", &self.h1),
            ("h2", &self.h2),
            ("xi1", &self.xi1),
            ("xi2", &self.xi2),
            ("eps", &self.eps),
            ("steps", &self.steps),
            ("theta_source", &self.theta_source),
            ("seed", &self.seed),
            ("outputs", &self.outputs),
            ("eps_list", &self.eps_list),
        ];
        for (key, value) in text {
            if let Some(v) = value {
                flags.set(key, v)?;
            }
        }
        flags.out_csv = self.out_csv.clone();
        flags.out_svg = self.out_svg.clone();
        ScenarioConfig::resolve(self.config.as_deref(), flags)
    }
}

fn run(command: &Command) -> Result<bool, CliError> {
    let stdout = io::stdout();
    let stderr = io::stderr();
    let (mut out, mut err) = (stdout.lock(), stderr.lock());
    let passed = match command {
        Command::Simulate(a) => commands::simulate(&a.resolve()?, &mut out, &mut err)?,
        Command::Spectrum(a) => commands::spectrum(&a.resolve()?, &mut out)?,
        Command::Tau(a) => commands::tau(&a.resolve()?, &mut out)?,
        Command::Sweep(a) => commands::sweep(&a.resolve()?, &mut out, &mut err)?,
    };
    out.flush()?;
    Ok(passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_usage() { 2 } else { 1 })
        }
    }
}
