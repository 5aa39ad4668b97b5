// Copyright 2026 The lhvapor Authors
// SPDX-License-Identifier: Apache-2.0

//! The absolute dipole moments d₂₃ and μ₁₂ are free inputs. This scans both
//! around their defaults for one preset and reports how much of the detuning
//! window is left-handed and how much is absorption-free.
//!
//!     cargo run --release --example dipole_scan [-- <preset>]

use lhvapor::params::{DEFAULT_D23, DEFAULT_MU12};
use lhvapor::{presets, run_sweep};

fn main() -> lhvapor::Result<()> {
    let name = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "fig2-oc1.0".into());
    let preset = presets::find(&name).unwrap_or_else(|| panic!("unknown preset {name}"));

    println!("{name}: fraction of the window that is left-handed / zero-absorption");
    print!("{:>10}", "d23 \\ mu12");
    let mu_scales = [1.0, 10.0, 100.0, 1000.0];
    for m in mu_scales {
        print!("{:>16}", format!("x{m}"));
    }
    println!();

    for d_scale in [0.3, 1.0, 3.0, 10.0] {
        print!("{:>10}", format!("x{d_scale}"));
        for m_scale in mu_scales {
            let mut spec = preset.sweep();
            spec.points = 241;
            spec.base.d23 = DEFAULT_D23 * d_scale;
            spec.base.mu12 = DEFAULT_MU12 * m_scale;
            let result = run_sweep(&spec)?;
            let valid: Vec<_> = result.rows.iter().filter_map(|r| r.data()).collect();
            let frac = |f: &dyn Fn(&&lhvapor::sweep::PointData) -> bool| {
                valid.iter().filter(|d| f(d)).count() as f64 / valid.len() as f64
            };
            let lh = frac(&|d| d.response.left_handed);
            let za = frac(&|d| d.response.n.im.abs() < spec.abs_threshold);
            print!("{:>16}", format!("{lh:.2} / {za:.2}"));
        }
        println!();
    }
    Ok(())
}
