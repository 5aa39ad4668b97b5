// Copyright 2026 The lhvapor Authors
// SPDX-License-Identifier: Apache-2.0

//! From steady-state coherences to ε_r, μ_r and the refractive index.
//!
//! ρ₃₂ drives the electric dipole on |2⟩–|3⟩ and ρ₂₁ the magnetic dipole on
//! |1⟩–|2⟩. Both polarizabilities are corrected for the local field of a dense
//! vapor with the electric and magnetic Clausius–Mossotti relations.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::liouvillian::build_liouvillian;
use crate::params::SystemParams;
use crate::steady::steady_state;

/// Vacuum permittivity, F/m.
pub const EPSILON_0: f64 = 8.8541878128e-12;
/// Vacuum permeability, H/m.
pub const MU_0: f64 = 1.25663706212e-6;
/// Speed of light, m/s.
pub const SPEED_OF_LIGHT: f64 = 2.99792458e8;
/// Reduced Planck constant, J·s.
pub const HBAR: f64 = 1.054571817e-34;

/// `|1 - Nα/3|` below this is a Clausius–Mossotti pole.
pub const POLE_TOLERANCE: f64 = 1e-12;
/// Im n below `-GAIN_TOLERANCE` marks a gain point.
pub const GAIN_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OpticalResponse {
    /// Electric polarizability, m³.
    pub gamma_e: Complex64,
    /// Magnetic polarizability, m³.
    pub gamma_m: Complex64,
    pub eps_r: Complex64,
    pub mu_r: Complex64,
    pub n: Complex64,
    /// Re ε_r < 0 and Re μ_r < 0.
    pub left_handed: bool,
    /// Im n < −[`GAIN_TOLERANCE`].
    pub gain_flag: bool,
}

fn probe_si(params: &SystemParams) -> Result<f64> {
    let omega_p = params.omega_p_si();
    if omega_p == 0.0 {
        Err(Error::ZeroProbe)
    } else {
        Ok(omega_p)
    }
}

/// γ_e = 2 d₂₃² ρ₃₂ / (ε₀ ħ Ωp), in m³.
pub fn electric_polarizability(rho32: Complex64, params: &SystemParams) -> Result<Complex64> {
    let omega_p = probe_si(params)?;
    Ok(rho32 * (2.0 * params.d23 * params.d23 / (EPSILON_0 * HBAR * omega_p)))
}

/// γ_m = 2 μ₀ μ₁₂ ρ₂₁ / B_p, with B_p = E_p/c and E_p = ħΩp/d₂₃, in m³.
pub fn magnetic_polarizability(rho21: Complex64, params: &SystemParams) -> Result<Complex64> {
    let omega_p = probe_si(params)?;
    let b_p = HBAR * omega_p / (params.d23 * SPEED_OF_LIGHT);
    Ok(rho21 * (2.0 * MU_0 * params.mu12 / b_p))
}

fn check_pole(n_alpha: Complex64) -> Result<Complex64> {
    let denom = 1.0 - n_alpha / 3.0;
    if denom.norm() <= POLE_TOLERANCE {
        Err(Error::ClausiusMossottiPole { n_alpha })
    } else {
        Ok(denom)
    }
}

/// ε_r = 1 + χ_e with χ_e = Nγ_e / (1 − Nγ_e/3).
pub fn permittivity(gamma_e: Complex64, number_density: f64) -> Result<Complex64> {
    let x = gamma_e * number_density;
    let denom = check_pole(x)?;
    Ok(1.0 + x / denom)
}

/// μ_r = (1 + ⅔Nγ_m) / (1 − ⅓Nγ_m).
pub fn permeability(gamma_m: Complex64, number_density: f64) -> Result<Complex64> {
    let y = gamma_m * number_density;
    let denom = check_pole(y)?;
    Ok((1.0 + y * (2.0 / 3.0)) / denom)
}

/// Magnetic Clausius–Mossotti: γ_m = (1/N)(μ_r − 1)/(⅔ + μ_r/3).
///
/// Inverse of [`permeability`]. The relation is singular at μ_r = −2.
pub fn magnetic_polarizability_from_permeability(
    mu_r: Complex64,
    number_density: f64,
) -> Complex64 {
    (mu_r - 1.0) / (2.0 / 3.0 + mu_r / 3.0) / number_density
}

/// n = ±√(ε_r μ_r) on the principal branch, negated where both real parts are
/// negative. No correction is applied to the sign of Im n.
pub fn refractive_index(eps_r: Complex64, mu_r: Complex64) -> Complex64 {
    let root = (eps_r * mu_r).sqrt();
    if is_left_handed(eps_r, mu_r) {
        -root
    } else {
        root
    }
}

pub fn is_left_handed(eps_r: Complex64, mu_r: Complex64) -> bool {
    eps_r.re < 0.0 && mu_r.re < 0.0
}

impl OpticalResponse {
    /// Assembles every derived field from the two polarizabilities.
    pub fn from_polarizabilities(
        gamma_e: Complex64,
        gamma_m: Complex64,
        number_density: f64,
    ) -> Result<Self> {
        let eps_r = permittivity(gamma_e, number_density)?;
        let mu_r = permeability(gamma_m, number_density)?;
        let n = refractive_index(eps_r, mu_r);
        Ok(Self {
            gamma_e,
            gamma_m,
            eps_r,
            mu_r,
            n,
            left_handed: is_left_handed(eps_r, mu_r),
            gain_flag: n.im < -GAIN_TOLERANCE,
        })
    }

    /// Response to given steady-state coherences.
    pub fn from_state(rho: &DensityMatrix, params: &SystemParams) -> Result<Self> {
        let gamma_e = electric_polarizability(rho[(3, 2)], params)?;
        let gamma_m = magnetic_polarizability(rho[(2, 1)], params)?;
        Self::from_polarizabilities(gamma_e, gamma_m, params.number_density)
    }
}

/// Response together with the state it was computed from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointSolution {
    pub response: OpticalResponse,
    pub rho: DensityMatrix,
}

/// Full pipeline at one parameter point: Liouvillian, steady state, optics.
pub fn solve_point(params: &SystemParams) -> Result<PointSolution> {
    probe_si(params)?;
    let l = build_liouvillian(params)?;
    let rho = steady_state(&l)?;
    let response = OpticalResponse::from_state(&rho, params)?;
    Ok(PointSolution { response, rho })
}

pub fn response_at(params: &SystemParams) -> Result<OpticalResponse> {
    solve_point(params).map(|s| s.response)
}
