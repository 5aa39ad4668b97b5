// Copyright 2026 The lhvapor Authors
// SPDX-License-Identifier: Apache-2.0

//! Builds the Liouvillian for each preset, solves for the stationary state and
//! prints the populations, the probe coherences and solver diagnostics.
//!
//!     cargo run --release --example steady_state

use lhvapor::steady::condition_estimate;
use lhvapor::{build_liouvillian, presets, steady_state};

fn main() -> lhvapor::Result<()> {
    println!(
        "{:<11} {:>9} {:>9} {:>9} {:>9}  {:>22}  {:>22}  {:>9} {:>9}",
        "preset", "rho11", "rho22", "rho33", "rho44", "rho32", "rho21", "residual", "cond"
    );
    for preset in presets::all() {
        let l = build_liouvillian(&preset.params)?;
        let rho = steady_state(&l)?;
        let [p1, p2, p3, p4] = rho.populations();
        println!(
            "{:<11} {p1:>9.6} {p2:>9.6} {p3:>9.6} {p4:>9.6}  {:>22.3e}  {:>22.3e}  {:>9.1e} {:>9.1e}",
            preset.name,
            rho[(3, 2)],
            rho[(2, 1)],
            l.residual(&rho),
            condition_estimate(&l),
        );
    }
    Ok(())
}
