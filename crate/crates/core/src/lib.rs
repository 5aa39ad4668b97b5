// Copyright 2026 The lhvapor Authors
// SPDX-License-Identifier: Apache-2.0

//! Steady-state optical response of a four-level atomic vapor driven by a
//! coupling, a probe and a signal field.
//!
//! The pipeline for one parameter point:
//!
//! 1. [`build_liouvillian`] writes the density-matrix equations of motion as a
//!    16×16 operator (rates in units of γ).
//! 2. [`steady_state`] solves for the unit-trace stationary state;
//!    [`time_evolve`] is an independent RK4 check.
//! 3. [`OpticalResponse`] maps ρ₃₂ and ρ₂₁ to polarizabilities, applies the
//!    Clausius–Mossotti local-field corrections and picks the refractive
//!    index branch.
//!
//! [`run_sweep`] repeats this over a detuning grid and extracts
//! zero-absorption and left-handed windows; [`emit`] writes the results.

pub mod config;
pub mod density;
pub mod emit;
pub mod error;
pub mod evolve;
pub mod liouvillian;
pub mod optics;
pub mod params;
pub mod presets;
pub mod steady;
pub mod sweep;

pub use config::{parse_config, OutputFormat, RunConfig};
pub use density::DensityMatrix;
pub use emit::{emit, Summary};
pub use error::{ConfigError, Error, Result};
pub use evolve::time_evolve;
pub use liouvillian::{build_liouvillian, Liouvillian};
pub use optics::{response_at, OpticalResponse};
pub use params::SystemParams;
pub use presets::Preset;
pub use steady::steady_state;
pub use sweep::{run_sweep, Interval, SweepAxis, SweepResult, SweepSpec};

pub use num_complex::Complex64;
