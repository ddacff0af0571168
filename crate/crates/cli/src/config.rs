//! Settings resolution: built-in defaults, then the config file, then flags.

use std::path::{Path, PathBuf};

use deltaho::oracle::OracleConfig;
use deltaho::spectrum::{Coupling, SolverConfig};
use serde::{Deserialize, Serialize};

use crate::args::{CommonArgs, Format};
use crate::error::{CliError, CliResult};

pub const CONFIG_ENV: &str = "DELTAHO_CONFIG";

/// Keys accepted in the config file, one `key = value` per line.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub g: Option<f64>,
    pub states: Option<usize>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub grid_n: Option<usize>,
    pub grid_l: Option<f64>,
    pub tol: Option<f64>,
    pub full_precision: Option<bool>,
    pub stamp: Option<bool>,
    pub method: Option<String>,
    pub root_method: Option<String>,
}

impl FileConfig {
    pub fn parse(text: &str, origin: &Path) -> CliResult<Self> {
        toml::from_str(text)
            .map_err(|e| CliError::Usage(format!("{}: {}", origin.display(), e.message())))
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::parse(&text, path)
    }
}

/// Fully resolved settings. Command-specific defaults for `states` and the
/// grid are applied by the commands themselves.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Settings {
    pub g: Option<f64>,
    pub states: Option<usize>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub grid_n: Option<usize>,
    pub grid_l: Option<f64>,
    pub tol: Option<f64>,
    pub full_precision: bool,
    pub stamp: bool,
    pub method: String,
    pub root_method: String,
}

impl Settings {
    /// Merge flags over the config named by `--config` or `$DELTAHO_CONFIG`.
    pub fn resolve(args: &CommonArgs) -> CliResult<Self> {
        let path = args.config.clone().or_else(|| {
            std::env::var_os(CONFIG_ENV)
                .filter(|v| !v.is_empty())
                .map(PathBuf::from)
        });
        let file = match path {
            Some(p) => FileConfig::load(&p)?,
            None => FileConfig::default(),
        };
        Ok(Self::merge(args, file))
    }

    pub fn merge(args: &CommonArgs, file: FileConfig) -> Self {
        Self {
            g: args.g.or(file.g),
            states: args.states.or(file.states),
            format: args.format.or(file.format).unwrap_or(Format::Csv),
            out: args.out.clone().or(file.out),
            grid_n: args.grid_n.or(file.grid_n),
            grid_l: args.grid_l.or(file.grid_l),
            tol: args.tol.or(file.tol),
            full_precision: args.full_precision || file.full_precision.unwrap_or(false),
            stamp: args.stamp || file.stamp.unwrap_or(false),
            method: args
                .method
                .clone()
                .or(file.method)
                .unwrap_or_else(|| "analytic".to_string()),
            root_method: args
                .root_method
                .clone()
                .or(file.root_method)
                .unwrap_or_else(|| SolverConfig::default().root_method),
        }
    }

    pub fn coupling(&self) -> CliResult<Coupling> {
        let g = self
            .g
            .ok_or_else(|| CliError::Usage("missing --g".to_string()))?;
        Ok(Coupling::new(g)?)
    }

    pub fn states_or(&self, default: usize) -> CliResult<usize> {
        match self.states.unwrap_or(default) {
            0 => Err(CliError::Usage("--states must be at least 1".to_string())),
            n => Ok(n),
        }
    }

    pub fn solver(&self, n_states: usize) -> CliResult<SolverConfig> {
        let mut cfg = SolverConfig::with_states(n_states);
        if let Some(tol) = self.tol {
            cfg.root_tol = tol;
        }
        cfg.root_method = self.root_method.clone();
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn oracle(&self, n_eigen: usize) -> CliResult<OracleConfig> {
        let defaults = OracleConfig::default();
        let cfg = OracleConfig {
            half_width: self.grid_l.unwrap_or(defaults.half_width),
            n_intervals: self.grid_n.unwrap_or(defaults.n_intervals),
            n_eigen,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// `key=value` pairs for the comment line of data files.
    pub fn echo(&self, command: &str) -> String {
        let mut parts = vec![format!("command={command}")];
        if let Some(g) = self.g {
            parts.push(format!("g={g}"));
        }
        if let Some(n) = self.states {
            parts.push(format!("states={n}"));
        }
        if let Some(n) = self.grid_n {
            parts.push(format!("grid_n={n}"));
        }
        if let Some(l) = self.grid_l {
            parts.push(format!("grid_l={l}"));
        }
        if let Some(t) = self.tol {
            parts.push(format!("tol={t}"));
        }
        parts.push(format!("method={}", self.method));
        parts.push(format!("root_method={}", self.root_method));
        parts.push(format!("full_precision={}", self.full_precision));
        parts.join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_file() {
        let file = FileConfig::parse(
            "g = 2.5\nstates = 3\nformat = \"json\"\nroot_method = \"bisection\"\n",
            Path::new("test.toml"),
        )
        .unwrap();
        let args = CommonArgs {
            g: Some(-1.0),
            ..CommonArgs::default()
        };
        let s = Settings::merge(&args, file);
        assert_eq!(s.g, Some(-1.0));
        assert_eq!(s.states, Some(3));
        assert_eq!(s.format, Format::Json);
        assert_eq!(s.root_method, "bisection");
        assert_eq!(s.method, "analytic");
    }

    #[test]
    fn unknown_keys_are_usage_errors() {
        let err = FileConfig::parse("colour = 1\n", Path::new("x.toml")).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn validation() {
        let s = Settings::merge(&CommonArgs::default(), FileConfig::default());
        assert!(s.coupling().is_err());
        assert!(s.states_or(0).is_err());
        assert_eq!(s.states_or(4).unwrap(), 4);
        let mut bad = s.clone();
        bad.grid_n = Some(4001);
        assert_eq!(bad.oracle(6).unwrap_err().exit_code(), 2);
        let mut bad = s;
        bad.tol = Some(-1.0);
        assert_eq!(bad.solver(5).unwrap_err().exit_code(), 2);
    }
}
