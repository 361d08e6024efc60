//! Configuration resolution: command-line flags override an optional
//! key=value config file (path from `--config` or the `COXINT_CONFIG`
//! environment variable), which overrides the library defaults.

use std::path::{Path, PathBuf};

use clap::ValueEnum;
use coxint::quadrature::QuadratureOptions;

use crate::CliError;

/// Environment variable consulted for the config-file path when `--config`
/// is not given.
pub const CONFIG_ENV_VAR: &str = "COXINT_CONFIG";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatChoice {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RepChoice {
    Trig,
    Quartic,
    Closed,
    All,
}

/// Values read from the config file; every field is optional and loses to
/// an explicit command-line flag.
#[derive(Debug, Default)]
pub struct FileConfig {
    pub abs_tol: Option<f64>,
    pub rel_tol: Option<f64>,
    pub lambda: Option<f64>,
    pub grid_start: Option<f64>,
    pub grid_stop: Option<f64>,
    pub grid_count: Option<usize>,
    pub representation: Option<RepChoice>,
    pub format: Option<FormatChoice>,
    pub out: Option<PathBuf>,
}

fn parse_f64(key: &str, value: &str) -> Result<f64, CliError> {
    value
        .parse::<f64>()
        .map_err(|_| CliError::config(format!("{key}: expected a number, got {value:?}")))
}

fn parse_count(value: &str) -> Result<usize, CliError> {
    value
        .parse::<usize>()
        .map_err(|_| CliError::config(format!("lambda_grid.count: expected an integer, got {value:?}")))
}

impl FileConfig {
    /// Parses a key=value file. Blank lines and `#` comments are skipped;
    /// unknown keys are configuration errors.
    pub fn parse(text: &str, origin: &Path) -> Result<Self, CliError> {
        let mut cfg = FileConfig::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::config(format!(
                    "{}:{}: expected key=value, got {line:?}",
                    origin.display(),
                    idx + 1
                ))
            })?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "abs_tol" => cfg.abs_tol = Some(parse_f64(key, value)?),
                "rel_tol" => cfg.rel_tol = Some(parse_f64(key, value)?),
                "lambda" => cfg.lambda = Some(parse_f64(key, value)?),
                "lambda_grid.start" => cfg.grid_start = Some(parse_f64(key, value)?),
                "lambda_grid.stop" => cfg.grid_stop = Some(parse_f64(key, value)?),
                "lambda_grid.count" => cfg.grid_count = Some(parse_count(value)?),
                "representation" => {
                    cfg.representation = Some(
                        RepChoice::from_str(value, true)
                            .map_err(|_| CliError::config(format!(
                                "representation: expected trig|quartic|closed|all, got {value:?}"
                            )))?,
                    )
                }
                "format" => {
                    cfg.format = Some(FormatChoice::from_str(value, true).map_err(|_| {
                        CliError::config(format!("format: expected text|csv|json, got {value:?}"))
                    })?)
                }
                "out" => cfg.out = Some(PathBuf::from(value)),
                _ => {
                    return Err(CliError::config(format!(
                        "{}:{}: unknown key {key:?}",
                        origin.display(),
                        idx + 1
                    )))
                }
            }
        }
        Ok(cfg)
    }

    /// Loads the file named by `--config`, else by `COXINT_CONFIG`, else
    /// returns an empty config. A path that is set but unreadable is an
    /// error — silently ignoring an intended config would be worse.
    pub fn load(flag: Option<&Path>) -> Result<Self, CliError> {
        let path = match flag {
            Some(p) => Some(p.to_path_buf()),
            None => std::env::var_os(CONFIG_ENV_VAR).map(PathBuf::from),
        };
        let Some(path) = path else {
            return Ok(FileConfig::default());
        };
        let text = std::fs::read_to_string(&path).map_err(|e| {
            CliError::config(format!("cannot read config file {}: {e}", path.display()))
        })?;
        FileConfig::parse(&text, &path)
    }
}

/// The fully resolved configuration a subcommand runs under.
#[derive(Debug)]
pub struct Resolved {
    pub options: QuadratureOptions,
    pub format: FormatChoice,
    pub out: Option<PathBuf>,
    pub lambda: Option<f64>,
    pub representation: Option<RepChoice>,
    pub grid: Option<(f64, f64, usize)>,
}

/// Command-line values that may override the file; `None` defers.
#[derive(Debug, Default)]
pub struct Overrides {
    pub abs_tol: Option<f64>,
    pub rel_tol: Option<f64>,
    pub format: Option<FormatChoice>,
    pub out: Option<PathBuf>,
    pub lambda: Option<f64>,
    pub representation: Option<RepChoice>,
    pub grid_start: Option<f64>,
    pub grid_stop: Option<f64>,
    pub grid_count: Option<usize>,
}

pub fn resolve(file: FileConfig, flags: Overrides) -> Result<Resolved, CliError> {
    let mut options = QuadratureOptions::default();
    if let Some(v) = flags.abs_tol.or(file.abs_tol) {
        options.abs_tol = v;
    }
    if let Some(v) = flags.rel_tol.or(file.rel_tol) {
        options.rel_tol = v;
    }
    options
        .validate()
        .map_err(|e| CliError::config(format!("invalid tolerances: {e}")))?;

    let grid = match (
        flags.grid_start.or(file.grid_start),
        flags.grid_stop.or(file.grid_stop),
        flags.grid_count.or(file.grid_count),
    ) {
        (None, None, None) => None,
        (Some(start), Some(stop), Some(count)) => {
            if !(start.is_finite() && stop.is_finite() && start < stop) {
                return Err(CliError::config(format!(
                    "lambda grid requires start < stop, got {start} .. {stop}"
                )));
            }
            if count < 2 {
                return Err(CliError::config(format!(
                    "lambda grid requires count >= 2, got {count}"
                )));
            }
            Some((start, stop, count))
        }
        _ => {
            return Err(CliError::config(
                "lambda grid requires start, stop, and count together".to_string(),
            ))
        }
    };

    Ok(Resolved {
        options,
        format: flags.format.or(file.format).unwrap_or(FormatChoice::Text),
        out: flags.out.or(file.out),
        lambda: flags.lambda.or(file.lambda),
        representation: flags.representation.or(file.representation),
        grid,
    })
}
