// Copyright 2026 The lhvapor Authors
// SPDX-License-Identifier: Apache-2.0

//! Error types shared across the crate.

use std::path::PathBuf;

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParams { name: &'static str, reason: String },

    #[error("invalid sweep specification: {0}")]
    InvalidSweep(String),

    /// The trace-constrained steady-state system is numerically singular.
    #[error("steady-state system is singular (condition estimate {condition:.3e})")]
    SingularSystem { condition: f64 },

    #[error("time step {dt} exceeds the stability bound {max_dt}")]
    StepTooLarge { dt: f64, max_dt: f64 },

    #[error("probe Rabi frequency is zero; polarizabilities are undefined")]
    ZeroProbe,

    /// `1 - N*alpha/3` vanished. `n_alpha` is the offending product.
    #[error("Clausius-Mossotti pole at N*alpha = {n_alpha}")]
    ClausiusMossottiPole { n_alpha: num_complex::Complex64 },

    #[error("every point of the sweep failed")]
    AllPointsFailed,

    #[error("no zero-absorption intervals to search")]
    NoIntervals,

    #[error("I/O failure on {path}: {message}")]
    IoFailure { path: PathBuf, message: String },

    #[error(transparent)]
    Config(#[from] ConfigError),
}

impl Error {
    /// Short machine-readable tag, used as the per-row status in emitted tables.
    pub fn status_tag(&self) -> &'static str {
        match self {
            Error::InvalidParams { .. } => "invalid_params",
            Error::InvalidSweep(_) => "invalid_sweep",
            Error::SingularSystem { .. } => "singular_system",
            Error::StepTooLarge { .. } => "step_too_large",
            Error::ZeroProbe => "zero_probe",
            Error::ClausiusMossottiPole { .. } => "cm_pole",
            Error::AllPointsFailed => "all_points_failed",
            Error::NoIntervals => "no_intervals",
            Error::IoFailure { .. } => "io_failure",
            Error::Config(_) => "config",
        }
    }
}

/// Failures while assembling a [`crate::config::RunConfig`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("unknown key `{0}`")]
    UnknownKey(String),

    #[error("bad value `{value}` for `{key}`: {reason}")]
    BadValue {
        key: String,
        value: String,
        reason: String,
    },

    #[error("no preset given and the parameter set is incomplete (missing: {})", .missing.join(", "))]
    MissingPresetAndParams { missing: Vec<String> },

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("{0}")]
    Usage(String),

    /// `--help` or `--version` was requested; holds the rendered text.
    #[error("{0}")]
    Help(String),
}
