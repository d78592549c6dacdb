//! Configuration layering: built-in defaults, then the optional key=value
//! file, then command-line flags.

use std::path::{Path, PathBuf};

use dho_core::OscillatorParams;

use crate::{Cli, OutputFormat};

/// Errors carrying their CLI exit code.
#[derive(Debug)]
pub enum CliError {
    /// Invalid physics or numerics input (exit 3).
    Domain(String),
    /// Unreadable/malformed config file or unwritable output (exit 4).
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 3,
            CliError::Io(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Domain(m) | CliError::Io(m) => m,
        }
    }
}

/// Fully resolved run parameters shared by every command.
pub struct Resolved {
    pub params: OscillatorParams,
    pub trunc: usize,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
}

#[derive(Default)]
struct FileConfig {
    omega: Option<f64>,
    alpha: Option<f64>,
    trunc: Option<usize>,
    format: Option<OutputFormat>,
    out: Option<PathBuf>,
}

fn parse_config_file(path: &Path) -> Result<FileConfig, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read config {}: {e}", path.display())))?;
    let mut cfg = FileConfig::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            CliError::Io(format!(
                "malformed config {} line {}: expected key=value",
                path.display(),
                lineno + 1
            ))
        })?;
        let (key, value) = (key.trim(), value.trim());
        let bad = |what: &str| {
            CliError::Io(format!(
                "malformed config {} line {}: bad {what} value '{value}'",
                path.display(),
                lineno + 1
            ))
        };
        match key {
            "omega" => cfg.omega = Some(value.parse().map_err(|_| bad("omega"))?),
            "alpha" => cfg.alpha = Some(value.parse().map_err(|_| bad("alpha"))?),
            "trunc" => cfg.trunc = Some(value.parse().map_err(|_| bad("trunc"))?),
            "format" => {
                cfg.format = Some(match value {
                    "csv" => OutputFormat::Csv,
                    "json" => OutputFormat::Json,
                    _ => return Err(bad("format")),
                })
            }
            "out" => cfg.out = Some(PathBuf::from(value)),
            _ => {
                return Err(CliError::Io(format!(
                    "malformed config {} line {}: unknown key '{key}'",
                    path.display(),
                    lineno + 1
                )))
            }
        }
    }
    Ok(cfg)
}

pub fn resolve(cli: &Cli) -> Result<Resolved, CliError> {
    let file = match &cli.config {
        Some(path) => parse_config_file(path)?,
        None => FileConfig::default(),
    };
    let omega = cli.omega.or(file.omega).unwrap_or(1.0);
    let alpha = cli.alpha.or(file.alpha).unwrap_or(0.6);
    let trunc = cli.trunc.or(file.trunc).unwrap_or(128);
    let format = cli.format.or(file.format).unwrap_or(OutputFormat::Csv);
    let out = cli.out.clone().or(file.out).map(resolve_out_dir);

    let params =
        OscillatorParams::new(omega, alpha).map_err(|e| CliError::Domain(format!("{e}")))?;
    if trunc < 16 {
        return Err(CliError::Domain(format!(
            "truncation must be at least 16, got {trunc}"
        )));
    }
    Ok(Resolved {
        params,
        trunc,
        format,
        out,
    })
}

/// The only environment variable honoured: an output-directory override
/// for relative paths.
fn resolve_out_dir(path: PathBuf) -> PathBuf {
    if path.is_relative() {
        if let Ok(dir) = std::env::var("DHO_OUT_DIR") {
            if !dir.is_empty() {
                return PathBuf::from(dir).join(path);
            }
        }
    }
    path
}

/// Times given as "a:b:count", a comma list, or one value.
pub fn parse_times(spec: &str) -> Result<Vec<f64>, CliError> {
    let bad = || CliError::Domain(format!("cannot parse time list '{spec}'"));
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.len() {
        3 => {
            let a: f64 = parts[0].parse().map_err(|_| bad())?;
            let b: f64 = parts[1].parse().map_err(|_| bad())?;
            let count: usize = parts[2].parse().map_err(|_| bad())?;
            if count < 2 || !a.is_finite() || !b.is_finite() || b <= a {
                return Err(bad());
            }
            let step = (b - a) / (count - 1) as f64;
            Ok((0..count).map(|i| a + step * i as f64).collect())
        }
        1 => spec
            .split(',')
            .map(|s| s.trim().parse::<f64>().map_err(|_| bad()))
            .collect(),
        _ => Err(bad()),
    }
}

/// Complex labels given as "re" or "re,im".
pub fn parse_complex(spec: &str) -> Result<dho_core::Complex64, CliError> {
    let bad = || CliError::Domain(format!("cannot parse complex value '{spec}'"));
    match spec.split_once(',') {
        Some((re, im)) => Ok(dho_core::Complex64::new(
            re.trim().parse().map_err(|_| bad())?,
            im.trim().parse().map_err(|_| bad())?,
        )),
        None => Ok(dho_core::Complex64::new(
            spec.trim().parse().map_err(|_| bad())?,
            0.0,
        )),
    }
}

pub fn parse_orders(spec: &str) -> Result<Vec<usize>, CliError> {
    spec.split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Domain(format!("cannot parse order list '{spec}'")))
        })
        .collect()
}
