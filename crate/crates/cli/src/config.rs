//! Scenario configuration: a flat `key=value` file plus command-line flags.
//! Flags win over the file.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use pulsewalk_core::asymptotics::ThetaSource;

use crate::{CliError, GraphSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Horizon {
    /// `2 τ_formula + 10`.
    Auto,
    Steps(usize),
}

impl FromStr for Horizon {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s.trim() {
            "auto" => Ok(Horizon::Auto),
            v => match v.parse::<usize>() {
                Ok(n) if n >= 1 => Ok(Horizon::Steps(n)),
                _ => Err(bad("steps", s)),
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Outputs {
    pub csv: bool,
    pub svg: bool,
    pub report: bool,
}

impl FromStr for Outputs {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let mut out = Outputs::default();
        for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            match item {
                "csv" => out.csv = true,
                "svg" => out.svg = true,
                "report" => out.report = true,
                _ => return Err(bad("outputs", s)),
            }
        }
        Ok(out)
    }
}

pub fn parse_theta_source(s: &str) -> Result<ThetaSource, CliError> {
    match s.trim() {
        "numeric" => Ok(ThetaSource::Numeric),
        "asymptotic" => Ok(ThetaSource::Asymptotic),
        _ => Err(bad("theta_source", s)),
    }
}

fn bad(key: &str, value: &str) -> CliError {
    CliError::BadValue {
        key: key.to_string(),
        value: value.to_string(),
    }
}

/// Settings that may come from either the config file or flags. Every field
/// is optional here; [`ScenarioConfig::resolve`] applies defaults.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Settings {
    pub h1: Option<GraphSpec>,
    pub h2: Option<GraphSpec>,
    pub xi1: Option<usize>,
    pub xi2: Option<usize>,
    pub epsilon: Option<f64>,
    pub horizon: Option<Horizon>,
    pub theta_source: Option<ThetaSource>,
    pub seed: Option<u64>,
    pub out_csv: Option<PathBuf>,
    pub out_svg: Option<PathBuf>,
    pub outputs: Option<Outputs>,
    pub eps_list: Option<Vec<f64>>,
}

impl Settings {
    /// Parses `key=value` lines. `#` starts a comment line.
    pub fn parse(text: &str, path: &Path) -> Result<Settings, CliError> {
        let mut seen = BTreeMap::new();
        let mut s = Settings::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let syntax = |message: String| CliError::ConfigSyntax {
                path: path.to_path_buf(),
                line: i + 1,
                message,
            };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| syntax(format!("expected key=value, found {line:?}")))?;
            let (key, value) = (key.trim(), value.trim());
            if seen.insert(key.to_string(), i + 1).is_some() {
                return Err(syntax(format!("duplicate key `{key}`")));
            }
            if !s.set(key, value)? {
                return Err(syntax(format!("unknown key `{key}`")));
            }
        }
        Ok(s)
    }

    /// Sets one key from its textual value; `Ok(false)` for an unknown key.
    pub fn set(&mut self, key: &str, value: &str) -> Result<bool, CliError> {
        match key {
            "h1" => self.h1 = Some(value.parse()?),
            "h2" => self.h2 = Some(value.parse()?),
            "xi1" => self.xi1 = Some(value.parse().map_err(|_| bad(key, value))?),
            "xi2" => self.xi2 = Some(value.parse().map_err(|_| bad(key, value))?),
            "eps" => self.epsilon = Some(value.parse().map_err(|_| bad(key, value))?),
            "steps" => self.horizon = Some(value.parse()?),
            "theta_source" => self.theta_source = Some(parse_theta_source(value)?),
            "seed" => self.seed = Some(value.parse().map_err(|_| bad(key, value))?),
            "out_csv" => self.out_csv = Some(PathBuf::from(value)),
            "out_svg" => self.out_svg = Some(PathBuf::from(value)),
            "outputs" => self.outputs = Some(value.parse()?),
            "eps_list" => self.eps_list = Some(parse_eps_list(value)?),
            _ => return Ok(false),
        }
        Ok(true)
    }

    pub fn read(path: &Path) -> Result<Settings, CliError> {
        let text = fs::read_to_string(path).map_err(|source| CliError::Read {
            path: path.to_path_buf(),
            source,
        })?;
        Settings::parse(&text, path)
    }

    /// Field-wise `self` over `base`.
    pub fn over(self, base: Settings) -> Settings {
        Settings {
            h1: self.h1.or(base.h1),
            h2: self.h2.or(base.h2),
            xi1: self.xi1.or(base.xi1),
            xi2: self.xi2.or(base.xi2),
            epsilon: self.epsilon.or(base.epsilon),
            horizon: self.horizon.or(base.horizon),
            theta_source: self.theta_source.or(base.theta_source),
            seed: self.seed.or(base.seed),
            out_csv: self.out_csv.or(base.out_csv),
            out_svg: self.out_svg.or(base.out_svg),
            outputs: self.outputs.or(base.outputs),
            eps_list: self.eps_list.or(base.eps_list),
        }
    }
}

pub fn parse_eps_list(s: &str) -> Result<Vec<f64>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<f64>().map_err(|_| bad("eps_list", s)))
        .collect()
}

/// One fully resolved experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub h1: GraphSpec,
    pub h2: GraphSpec,
    pub xi1: usize,
    pub xi2: usize,
    /// `None` only for sweeps driven by `eps_list`.
    pub epsilon: Option<f64>,
    pub horizon: Horizon,
    pub theta_source: ThetaSource,
    pub seed: u64,
    pub out_csv: Option<PathBuf>,
    pub out_svg: Option<PathBuf>,
    pub outputs: Outputs,
    pub eps_list: Vec<f64>,
}

impl ScenarioConfig {
    /// Merges `flags` over the optional config file and fills defaults:
    /// boundary vertices 0, horizon `auto`, numeric θ, seed 0.
    pub fn resolve(file: Option<&Path>, flags: Settings) -> Result<ScenarioConfig, CliError> {
        let base = match file {
            Some(path) => Settings::read(path)?,
            None => Settings::default(),
        };
        let s = flags.over(base);
        if let Some(eps) = s.epsilon {
            check_epsilon(eps)?;
        }
        let eps_list = s.eps_list.unwrap_or_default();
        for &e in &eps_list {
            check_epsilon(e)?;
        }
        let mut outputs = s.outputs.unwrap_or(Outputs {
            report: true,
            ..Outputs::default()
        });
        outputs.csv |= s.out_csv.is_some();
        outputs.svg |= s.out_svg.is_some();
        Ok(ScenarioConfig {
            h1: s.h1.ok_or(CliError::Missing("h1"))?,
            h2: s.h2.ok_or(CliError::Missing("h2"))?,
            xi1: s.xi1.unwrap_or(0),
            xi2: s.xi2.unwrap_or(0),
            epsilon: s.epsilon,
            horizon: s.horizon.unwrap_or(Horizon::Auto),
            theta_source: s.theta_source.unwrap_or_default(),
            seed: s.seed.unwrap_or(0),
            out_csv: s.out_csv,
            out_svg: s.out_svg,
            outputs,
            eps_list,
        })
    }

    pub fn epsilon(&self) -> Result<f64, CliError> {
        self.epsilon.ok_or(CliError::Missing("eps"))
    }
}

fn check_epsilon(eps: f64) -> Result<(), CliError> {
    if eps > 0.0 && eps <= 1.0 {
        Ok(())
    } else {
        Err(bad("eps", &eps.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<Settings, CliError> {
        Settings::parse(text, Path::new("test.cfg"))
    }

    #[test]
    fn file_settings() {
        let s = parse("# symmetric pulsation\nh1 = complete:5\nh2=complete:5\neps=0.01\nsteps=auto\n").unwrap();
        assert_eq!(s.h1, Some(GraphSpec::Complete(5)));
        assert_eq!(s.epsilon, Some(0.01));
        assert_eq!(s.horizon, Some(Horizon::Auto));
    }

    #[test]
    fn file_errors() {
        assert!(matches!(
            parse("h1 complete:5"),
            Err(CliError::ConfigSyntax { line: 1, .. })
        ));
        assert!(matches!(parse("color=red"), Err(CliError::ConfigSyntax { .. })));
        assert!(matches!(
            parse("eps=0.1\neps=0.2"),
            Err(CliError::ConfigSyntax { line: 2, .. })
        ));
        assert!(matches!(parse("steps=0"), Err(CliError::BadValue { .. })));
        assert!(matches!(parse("theta_source=guess"), Err(CliError::BadValue { .. })));
    }

    #[test]
    fn flags_override_file() {
        let file = parse("h1=complete:5\nh2=complete:3\neps=0.02\nxi1=2").unwrap();
        let flags = Settings {
            epsilon: Some(0.01),
            ..Settings::default()
        };
        let s = flags.over(file);
        assert_eq!(s.epsilon, Some(0.01));
        assert_eq!(s.xi1, Some(2));
        assert_eq!(s.h2, Some(GraphSpec::Complete(3)));
    }

    #[test]
    fn defaults_and_validation() {
        let flags = Settings {
            h1: Some(GraphSpec::Complete(5)),
            h2: Some(GraphSpec::Cycle(4)),
            epsilon: Some(0.01),
            out_csv: Some("a.csv".into()),
            ..Settings::default()
        };
        let c = ScenarioConfig::resolve(None, flags.clone()).unwrap();
        assert_eq!((c.xi1, c.xi2, c.seed), (0, 0, 0));
        assert_eq!(c.horizon, Horizon::Auto);
        assert_eq!(c.theta_source, ThetaSource::Numeric);
        assert!(c.outputs.csv && c.outputs.report && !c.outputs.svg);

        let bad_eps = Settings {
            epsilon: Some(0.0),
            ..flags.clone()
        };
        assert!(ScenarioConfig::resolve(None, bad_eps).is_err());
        let missing = Settings { h1: None, ..flags };
        assert!(matches!(
            ScenarioConfig::resolve(None, missing),
            Err(CliError::Missing("h1"))
        ));
    }

    #[test]
    fn outputs_list() {
        let o: Outputs = "csv, svg".parse().unwrap();
        assert!(o.csv && o.svg && !o.report);
        assert!("pdf".parse::<Outputs>().is_err());
        assert_eq!(parse_eps_list("0.02, 0.01,0.005").unwrap(), vec![0.02, 0.01, 0.005]);
    }
}
