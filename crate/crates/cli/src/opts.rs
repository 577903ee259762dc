//! Argument structs, config-file merging and shared parsing helpers.
//!
//! Every command accepts the same core options as flags or through
//! `--config FILE`, a plain `KEY=VALUE` file (one entry per line, `#`
//! comments). Flags override file entries.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use anyhow::{anyhow, Context};
use clap::Args;
use mixedtype::jets::Rect;

pub enum Outcome {
    Success,
    VerificationFailure,
}

pub enum CliError {
    /// Bad flags, config or surface spec — exit 2.
    Usage(anyhow::Error),
    /// Failure while doing the work — exit 1.
    Runtime(anyhow::Error),
}

pub fn usage(e: impl Into<anyhow::Error>) -> CliError {
    CliError::Usage(e.into())
}

pub fn runtime(e: impl Into<anyhow::Error>) -> CliError {
    CliError::Runtime(e.into())
}

#[derive(Args, Clone, Debug, Default)]
pub struct CommonArgs {
    /// Surface: fP | fH | fK | fZ | fAds[:alpha=A] | construction[:c=C] | graph:FILE
    #[arg(long)]
    pub surface: Option<String>,

    /// Parameter window u0:u1:v0:v1 (defaults to the surface's domain)
    #[arg(long, allow_hyphen_values = true)]
    pub window: Option<String>,

    /// Grid resolution NxM (a single N means NxN)
    #[arg(long)]
    pub res: Option<String>,

    /// Output path (analyze/export: file; trace: path prefix)
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Output format: csv, obj or json (each command has a natural default)
    #[arg(long)]
    pub format: Option<String>,

    /// Tolerance override NAME=VALUE (repeatable; prefix-matches check names)
    #[arg(long = "tol", value_name = "NAME=VALUE")]
    pub tol: Vec<String>,

    /// Plain KEY=VALUE config file; flags override file entries
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug)]
pub struct TraceArgs {
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Suite name (spaceform, jets, cmc, zmc, forms, typechange, theorem1,
    /// construction) or `all`
    pub suite: Option<String>,

    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug)]
pub struct ExportArgs {
    /// For 4-dimensional ambients: index of the coordinate to drop (0..=3)
    #[arg(long)]
    pub project: Option<usize>,

    #[command(flatten)]
    pub common: CommonArgs,
}

/// The common options after merging flags over the config file.
#[derive(Clone, Debug, Default)]
pub struct Resolved {
    pub surface: Option<String>,
    pub window: Option<Rect>,
    pub res: Option<(usize, usize)>,
    pub out: Option<PathBuf>,
    pub format: Option<String>,
    pub project: Option<usize>,
    pub suite: Option<String>,
    pub tol: BTreeMap<String, f64>,
}

impl CommonArgs {
    pub fn resolve(&self) -> Result<Resolved, CliError> {
        let mut file_entries: BTreeMap<String, String> = BTreeMap::new();
        if let Some(path) = &self.config {
            let text = fs::read_to_string(path)
                .with_context(|| format!("cannot read config file {}", path.display()))
                .map_err(usage)?;
            for (lineno, raw) in text.lines().enumerate() {
                let line = raw.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let (k, v) = line.split_once('=').ok_or_else(|| {
                    usage(anyhow!(
                        "{}:{}: expected KEY=VALUE, got `{line}`",
                        path.display(),
                        lineno + 1
                    ))
                })?;
                file_entries.insert(k.trim().to_string(), v.trim().to_string());
            }
        }

        let pick = |flag: &Option<String>, key: &str| -> Option<String> {
            flag.clone().or_else(|| file_entries.get(key).cloned())
        };

        let mut tol = BTreeMap::new();
        for (k, v) in &file_entries {
            if let Some(name) = k.strip_prefix("tol.") {
                let value: f64 = v
                    .parse()
                    .map_err(|_| usage(anyhow!("config tol.{name}: `{v}` is not a number")))?;
                tol.insert(name.to_string(), value);
            }
        }
        for spec in &self.tol {
            let (name, value) = spec
                .split_once('=')
                .ok_or_else(|| usage(anyhow!("--tol expects NAME=VALUE, got `{spec}`")))?;
            let value: f64 = value
                .parse()
                .map_err(|_| usage(anyhow!("--tol {name}: `{value}` is not a number")))?;
            tol.insert(name.to_string(), value);
        }

        let window = pick(&self.window, "window").map(|w| parse_window(&w)).transpose()?;
        let res = pick(&self.res, "res").map(|r| parse_res(&r)).transpose()?;
        let out = self
            .out
            .clone()
            .or_else(|| file_entries.get("out").map(PathBuf::from));
        let project = file_entries
            .get("project")
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| usage(anyhow!("config project: `{p}` is not an index")))
            })
            .transpose()?;

        Ok(Resolved {
            surface: pick(&self.surface, "surface"),
            window,
            res,
            out,
            format: pick(&self.format, "format"),
            project,
            suite: file_entries.get("suite").cloned(),
            tol,
        })
    }
}

pub fn parse_window(spec: &str) -> Result<Rect, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 4 {
        return Err(usage(anyhow!("--window expects u0:u1:v0:v1, got `{spec}`")));
    }
    let nums: Vec<f64> = parts
        .iter()
        .map(|p| p.parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| usage(anyhow!("--window has a non-numeric bound in `{spec}`")))?;
    let rect = Rect::new(nums[0], nums[1], nums[2], nums[3]);
    if !(rect.width() > 0.0 && rect.height() > 0.0) {
        return Err(usage(anyhow!("--window must be non-degenerate, got `{spec}`")));
    }
    Ok(rect)
}

pub fn parse_res(spec: &str) -> Result<(usize, usize), CliError> {
    let (a, b) = match spec.split_once(['x', 'X']) {
        Some((a, b)) => (a, b),
        None => (spec, spec),
    };
    let n: usize = a.parse().map_err(|_| usage(anyhow!("--res: `{spec}` is not NxM")))?;
    let m: usize = b.parse().map_err(|_| usage(anyhow!("--res: `{spec}` is not NxM")))?;
    if n < 2 || m < 2 {
        return Err(usage(anyhow!("--res needs at least 2 nodes per axis")));
    }
    Ok((n, m))
}

/// Validate the requested format against what the command produces.
pub fn check_format(requested: &Option<String>, natural: &str) -> Result<(), CliError> {
    match requested {
        None => Ok(()),
        Some(f) if f == natural => Ok(()),
        Some(f) => Err(usage(anyhow!(
            "this command writes {natural}, but --format {f} was requested"
        ))),
    }
}
