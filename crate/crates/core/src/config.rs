// Copyright 2026 The lhvapor Authors
// SPDX-License-Identifier: Apache-2.0

//! Run configuration from command-line flags and an optional flat
//! `key = value` file.
//!
//! Precedence, lowest first: preset, file, `--param`/`--sweep` flags.

use std::path::PathBuf;

use clap::Parser;

use crate::error::{ConfigError, Error};
use crate::params::{SystemParams, PARAM_KEYS};
use crate::presets;
use crate::sweep::{SweepAxis, SweepSpec, DEFAULT_ABS_THRESHOLD, DEFAULT_POINTS};

/// Sweep keys accepted alongside the [`PARAM_KEYS`].
pub const SWEEP_KEYS: [&str; 5] = ["axis", "start", "stop", "points", "abs_threshold"];

/// Physical keys that must be supplied when no preset is given.
const REQUIRED_WITHOUT_PRESET: [&str; 10] = [
    "omega_p", "omega_s", "omega_c", "delta_p", "delta_s", "delta_c", "gamma1", "gamma2", "gamma3",
    "gamma4",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    pub fn extension(self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    /// Preset the run started from, if any.
    pub preset: Option<String>,
    pub sweep: SweepSpec,
    pub out: PathBuf,
    pub format: OutputFormat,
    pub emit_populations: bool,
}

/// Steady-state optical response of the four-level left-handed vapor.
#[derive(Debug, Parser)]
#[command(name = "lhvapor", version)]
struct Cli {
    /// Figure preset, e.g. fig2-oc1.0, fig3-oc3.5, fig4-op2.8 (or a panel alias such as fig2-b1).
    #[arg(long)]
    preset: Option<String>,

    /// Override one parameter, `key=value`. Repeatable.
    #[arg(long = "param", value_name = "KEY=VALUE", allow_hyphen_values = true)]
    params: Vec<String>,

    /// Sweep window and resolution, `start,stop,points` in units of gamma.
    #[arg(long, value_name = "START,STOP,POINTS", allow_hyphen_values = true)]
    sweep: Option<String>,

    /// Flat `key = value` configuration file.
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Output table path.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Format of the summary written next to the table.
    #[arg(long, value_enum, default_value = "csv")]
    format: OutputFormat,

    /// Append steady-state populations rho11..rho44 to every row.
    #[arg(long)]
    emit_populations: bool,
}

/// Builds a [`RunConfig`] from command-line arguments (program name first).
///
/// `file` holds the contents of a configuration file. When it is `None` and
/// `--config` is present, that path is read instead.
pub fn parse_config<I, T>(args: I, file: Option<&str>) -> Result<RunConfig, Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| match e.kind() {
        clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
            ConfigError::Help(e.to_string())
        }
        _ => ConfigError::Usage(e.to_string()),
    })?;

    let file_text = match (file, &cli.config) {
        (Some(text), _) => Some(text.to_owned()),
        (None, Some(path)) => {
            Some(std::fs::read_to_string(path).map_err(|e| Error::IoFailure {
                path: path.clone(),
                message: e.to_string(),
            })?)
        }
        (None, None) => None,
    };

    let mut assignments: Vec<(String, String)> = Vec::new();
    if let Some(text) = &file_text {
        assignments.extend(parse_file(text)?);
    }
    for p in &cli.params {
        let (k, v) = p.split_once('=').ok_or_else(|| ConfigError::BadValue {
            key: "--param".into(),
            value: p.clone(),
            reason: "expected key=value".into(),
        })?;
        assignments.push((k.trim().to_owned(), v.trim().to_owned()));
    }
    if let Some(s) = &cli.sweep {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let [start, stop, points] = parts[..] else {
            return Err(ConfigError::BadValue {
                key: "--sweep".into(),
                value: s.clone(),
                reason: "expected start,stop,points".into(),
            }
            .into());
        };
        for (k, v) in [("start", start), ("stop", stop), ("points", points)] {
            assignments.push((k.into(), v.into()));
        }
    }

    let preset = match &cli.preset {
        Some(name) => {
            Some(presets::find(name).ok_or_else(|| ConfigError::UnknownPreset(name.clone()))?)
        }
        None => None,
    };

    let mut spec = match &preset {
        Some(p) => p.sweep(),
        None => SweepSpec {
            base: SystemParams::default(),
            axis: SweepAxis::DeltaP,
            start: -6.0,
            stop: 6.0,
            points: DEFAULT_POINTS,
            abs_threshold: DEFAULT_ABS_THRESHOLD,
        },
    };

    let mut seen: Vec<&str> = Vec::new();
    for (key, value) in &assignments {
        apply(&mut spec, key, value)?;
        seen.push(key);
    }

    if preset.is_none() {
        let missing: Vec<String> = REQUIRED_WITHOUT_PRESET
            .iter()
            .filter(|k| **k != spec.axis.key() && !seen.contains(k))
            .map(|k| k.to_string())
            .collect();
        if !missing.is_empty() {
            return Err(ConfigError::MissingPresetAndParams { missing }.into());
        }
    }

    spec.validate().map_err(|e| {
        let key = match &e {
            Error::InvalidParams { name, .. } => name.to_string(),
            _ => "sweep".to_string(),
        };
        ConfigError::BadValue {
            key,
            value: String::new(),
            reason: e.to_string(),
        }
    })?;

    let name = preset.map(|p| p.name.to_owned());
    let out = cli
        .out
        .unwrap_or_else(|| PathBuf::from(format!("{}.csv", name.as_deref().unwrap_or("sweep"))));
    Ok(RunConfig {
        preset: name,
        sweep: spec,
        out,
        format: cli.format,
        emit_populations: cli.emit_populations,
    })
}

/// Parses `key = value` lines; `#` starts a comment.
pub fn parse_file(text: &str) -> Result<Vec<(String, String)>, ConfigError> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| ConfigError::BadValue {
            key: line.to_owned(),
            value: String::new(),
            reason: "expected `key = value`".into(),
        })?;
        out.push((k.trim().to_owned(), v.trim().to_owned()));
    }
    Ok(out)
}

fn apply(spec: &mut SweepSpec, key: &str, value: &str) -> Result<(), ConfigError> {
    let bad = |reason: String| ConfigError::BadValue {
        key: key.to_owned(),
        value: value.to_owned(),
        reason,
    };
    let number = || value.parse::<f64>().map_err(|e| bad(e.to_string()));
    match key {
        "axis" => spec.axis = value.parse().map_err(bad)?,
        "start" => spec.start = number()?,
        "stop" => spec.stop = number()?,
        "abs_threshold" => spec.abs_threshold = number()?,
        "points" => {
            spec.points = value
                .parse()
                .map_err(|e: std::num::ParseIntError| bad(e.to_string()))?
        }
        k if PARAM_KEYS.contains(&k) => {
            spec.base.set(k, number()?);
        }
        _ => return Err(ConfigError::UnknownKey(key.to_owned())),
    }
    Ok(())
}
