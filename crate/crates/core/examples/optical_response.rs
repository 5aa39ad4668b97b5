// Copyright 2026 The lhvapor Authors
// SPDX-License-Identifier: Apache-2.0

//! Optical response at a single probe detuning, computed twice: from the
//! direct steady-state solve and from a long RK4 propagation.
//!
//!     cargo run --release --example optical_response [-- <preset> <delta_p>]

use lhvapor::evolve::{DEFAULT_DT, DEFAULT_T_END};
use lhvapor::{
    build_liouvillian, presets, steady_state, time_evolve, DensityMatrix, OpticalResponse,
};

fn main() -> lhvapor::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "fig2-oc1.0".into());
    let delta_p: f64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(0.0);
    let preset = presets::find(&name).unwrap_or_else(|| panic!("unknown preset {name}"));
    let params = preset.params.with_delta_p(delta_p);

    let l = build_liouvillian(&params)?;
    let rho = steady_state(&l)?;
    let direct = OpticalResponse::from_state(&rho, &params)?;

    let rho_t = time_evolve(&l, &DensityMatrix::equal_lower(), DEFAULT_T_END, DEFAULT_DT)?;
    let evolved = OpticalResponse::from_state(&rho_t, &params)?;

    println!("{} at Δp = {delta_p}γ", preset.name);
    println!("  residual |L·ρ|∞      = {:.3e}", l.residual(&rho));
    println!("  |ρ_ss − ρ_RK4|∞      = {:.3e}", rho.max_abs_diff(&rho_t));
    println!("  populations          = {:?}", rho.populations());
    println!("  rho32                = {:.17e}", rho[(3, 2)]);
    println!("  rho21                = {:.17e}", rho[(2, 1)]);
    for (label, r) in [("steady", &direct), ("rk4", &evolved)] {
        println!("  [{label}]");
        println!("    gamma_e (m^3) = {:.17e}", r.gamma_e);
        println!("    gamma_m (m^3) = {:.17e}", r.gamma_m);
        println!("    eps_r         = {:.17e}", r.eps_r);
        println!("    mu_r          = {:.17e}", r.mu_r);
        println!("    n             = {:.17e}", r.n);
        println!(
            "    left_handed   = {}, gain = {}",
            r.left_handed, r.gain_flag
        );
    }
    Ok(())
}
