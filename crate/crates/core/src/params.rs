// Copyright 2026 The lhvapor Authors
// SPDX-License-Identifier: Apache-2.0

//! Physical inputs of the four-level model.
//!
//! Rabi frequencies, detunings and decay constants are stored as multiples of
//! the rate scale `gamma` (s⁻¹). Only the optics layer converts to SI.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default electric dipole moment of the |2⟩–|3⟩ transition, C·m (about 3 D).
pub const DEFAULT_D23: f64 = 1.0e-29;
/// Default magnetic dipole moment of the |1⟩–|2⟩ transition, J/T (one Bohr magneton).
pub const DEFAULT_MU12: f64 = 9.274e-24;
/// Atomic number density of the dense vapor, m⁻³.
pub const DEFAULT_NUMBER_DENSITY: f64 = 5.0e24;
/// Rate scale, s⁻¹.
pub const DEFAULT_GAMMA: f64 = 1.0e8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SystemParams {
    pub gamma: f64,
    pub omega_p: f64,
    pub omega_s: f64,
    pub omega_c: f64,
    pub delta_p: f64,
    pub delta_s: f64,
    pub delta_c: f64,
    pub gamma1: f64,
    pub gamma2: f64,
    pub gamma3: f64,
    pub gamma4: f64,
    pub number_density: f64,
    pub d23: f64,
    pub mu12: f64,
}

impl Default for SystemParams {
    /// The resonant base configuration: Δc = Δs = 0, γ₁ = 0.05, γ₂ = γ₃ = 0.01,
    /// γ₄ = 0.1, Ωp = Ωs = 0.1, Ωc = 1.0 (all in units of γ).
    fn default() -> Self {
        Self {
            gamma: DEFAULT_GAMMA,
            omega_p: 0.1,
            omega_s: 0.1,
            omega_c: 1.0,
            delta_p: 0.0,
            delta_s: 0.0,
            delta_c: 0.0,
            gamma1: 0.05,
            gamma2: 0.01,
            gamma3: 0.01,
            gamma4: 0.1,
            number_density: DEFAULT_NUMBER_DENSITY,
            d23: DEFAULT_D23,
            mu12: DEFAULT_MU12,
        }
    }
}

/// Names of every field, in declaration order. These are also the accepted
/// configuration keys.
pub const PARAM_KEYS: [&str; 14] = [
    "gamma",
    "omega_p",
    "omega_s",
    "omega_c",
    "delta_p",
    "delta_s",
    "delta_c",
    "gamma1",
    "gamma2",
    "gamma3",
    "gamma4",
    "number_density",
    "d23",
    "mu12",
];

impl SystemParams {
    /// Checks the sign and finiteness constraints on every field.
    pub fn validate(&self) -> Result<()> {
        for key in PARAM_KEYS {
            let v = self.get(key).expect("known key");
            if !v.is_finite() {
                return Err(invalid(key, format!("{v} is not finite")));
            }
        }
        let strictly_positive = [
            ("gamma", self.gamma),
            ("number_density", self.number_density),
            ("d23", self.d23),
            ("mu12", self.mu12),
        ];
        for (name, v) in strictly_positive {
            if v <= 0.0 {
                return Err(invalid(name, format!("must be > 0, got {v}")));
            }
        }
        let non_negative = [
            ("omega_p", self.omega_p),
            ("omega_s", self.omega_s),
            ("omega_c", self.omega_c),
            ("gamma1", self.gamma1),
            ("gamma2", self.gamma2),
            ("gamma3", self.gamma3),
            ("gamma4", self.gamma4),
        ];
        for (name, v) in non_negative {
            if v < 0.0 {
                return Err(invalid(name, format!("must be >= 0, got {v}")));
            }
        }
        Ok(())
    }

    /// Probe Rabi frequency in s⁻¹.
    pub fn omega_p_si(&self) -> f64 {
        self.omega_p * self.gamma
    }

    /// Largest rate in the problem (in units of γ, floored at 1), which sets
    /// the admissible integration step.
    pub fn max_rate(&self) -> f64 {
        let decay_sum = self.gamma1 + self.gamma2 + self.gamma3 + self.gamma4;
        [1.0, self.omega_c, self.omega_p, self.omega_s, decay_sum]
            .into_iter()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn get(&self, key: &str) -> Option<f64> {
        Some(match key {
            "gamma" => self.gamma,
            "omega_p" => self.omega_p,
            "omega_s" => self.omega_s,
            "omega_c" => self.omega_c,
            "delta_p" => self.delta_p,
            "delta_s" => self.delta_s,
            "delta_c" => self.delta_c,
            "gamma1" => self.gamma1,
            "gamma2" => self.gamma2,
            "gamma3" => self.gamma3,
            "gamma4" => self.gamma4,
            "number_density" => self.number_density,
            "d23" => self.d23,
            "mu12" => self.mu12,
            _ => return None,
        })
    }

    /// Sets a field by name. Returns `false` if the key is unknown.
    pub fn set(&mut self, key: &str, value: f64) -> bool {
        let slot = match key {
            "gamma" => &mut self.gamma,
            "omega_p" => &mut self.omega_p,
            "omega_s" => &mut self.omega_s,
            "omega_c" => &mut self.omega_c,
            "delta_p" => &mut self.delta_p,
            "delta_s" => &mut self.delta_s,
            "delta_c" => &mut self.delta_c,
            "gamma1" => &mut self.gamma1,
            "gamma2" => &mut self.gamma2,
            "gamma3" => &mut self.gamma3,
            "gamma4" => &mut self.gamma4,
            "number_density" => &mut self.number_density,
            "d23" => &mut self.d23,
            "mu12" => &mut self.mu12,
            _ => return false,
        };
        *slot = value;
        true
    }

    /// Copy with the probe detuning replaced.
    pub fn with_delta_p(mut self, delta_p: f64) -> Self {
        self.delta_p = delta_p;
        self
    }
}

fn invalid(name: &'static str, reason: String) -> Error {
    Error::InvalidParams { name, reason }
}
