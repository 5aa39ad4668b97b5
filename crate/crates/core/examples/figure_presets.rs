// Copyright 2026 The lhvapor Authors
// SPDX-License-Identifier: Apache-2.0

//! Sweeps every figure preset over its default probe-detuning window and
//! prints the zero-absorption windows, left-handed windows and the most
//! negative Re n found inside the zero-absorption windows.
//!
//!     cargo run --release --example figure_presets [-- <abs_threshold>]

use lhvapor::presets;
use lhvapor::sweep::{run_sweep, Interval};

fn fmt_intervals(ivs: &[Interval]) -> String {
    if ivs.is_empty() {
        return "none".into();
    }
    let shown: Vec<String> = ivs
        .iter()
        .take(6)
        .map(|iv| format!("[{:.2}, {:.2}]", iv.lo, iv.hi))
        .collect();
    let more = if ivs.len() > 6 {
        format!(" … ({} total)", ivs.len())
    } else {
        String::new()
    };
    format!("{}{more}", shown.join(" "))
}

fn main() -> lhvapor::Result<()> {
    let threshold: Option<f64> = std::env::args().nth(1).and_then(|s| s.parse().ok());

    for preset in presets::all() {
        let mut spec = preset.sweep();
        if let Some(t) = threshold {
            spec.abs_threshold = t;
        }
        let result = run_sweep(&spec)?;

        let lh_points = result
            .rows
            .iter()
            .filter_map(|r| r.data())
            .filter(|d| d.response.left_handed)
            .count();
        let min_abs_im = result
            .rows
            .iter()
            .filter_map(|r| r.data())
            .map(|d| d.response.n.im.abs())
            .fold(f64::INFINITY, f64::min);

        println!("{} ({})", preset.name, preset.panel);
        println!(
            "  left-handed points  : {lh_points}/{} ({} failed)",
            result.rows.len(),
            result.failed_points()
        );
        println!("  min |Im n|          : {min_abs_im:.3e}");
        println!(
            "  zero absorption     : {}",
            fmt_intervals(&result.zero_absorption_intervals)
        );
        println!(
            "  left-handed windows : {}",
            fmt_intervals(&result.left_handed_intervals)
        );
        match result.re_n_extremum {
            Some(e) => println!(
                "  most negative Re n  : {:.4} at Δp = {:.2}γ",
                e.re_n, e.axis_value
            ),
            None => println!("  most negative Re n  : (no zero-absorption window)"),
        }
    }
    Ok(())
}
