// Copyright 2026 The lhvapor Authors
// SPDX-License-Identifier: Apache-2.0

#![allow(clippy::excessive_precision)]

use lhvapor::evolve::{DEFAULT_DT, DEFAULT_T_END};
use lhvapor::sweep::{run_sweep, SweepAxis, SweepSpec};
use lhvapor::{
    build_liouvillian, presets, response_at, time_evolve, Complex64, DensityMatrix, Error,
    OpticalResponse,
};

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(f64::MIN_POSITIVE)
}

/// Snapshot of the resonant Ωc = 1.0γ point at Δp = 0, cross-checked against
/// an independent numpy solve of the same equations and against the RK4 route.
#[test]
fn resonant_point_snapshot() {
    let p = presets::find("fig2-oc1.0").unwrap().params;
    let r = response_at(&p).unwrap();

    let snapshot = [
        (r.gamma_e, Complex64::new(0.0, 5.62798383556862807e-24)),
        (r.gamma_m, Complex64::new(-1.13923508105376476e-24, 0.0)),
        (
            r.eps_r,
            Complex64::new(-1.96628603396460644, 3.16236093133508978e-1),
        ),
        (r.mu_r, Complex64::new(-9.65062273865003428e-1, 0.0)),
        (
            r.n,
            Complex64::new(-1.38194822398777073, 1.10419304363283385e-1),
        ),
    ];
    for (got, want) in snapshot {
        assert!(rel(got, want) < 1e-10, "{got} vs {want}");
    }
    assert!(r.left_handed);
    assert!(!r.gain_flag);

    let l = build_liouvillian(&p).unwrap();
    let rho = time_evolve(&l, &DensityMatrix::equal_lower(), DEFAULT_T_END, DEFAULT_DT).unwrap();
    let via_rk4 = OpticalResponse::from_state(&rho, &p).unwrap();
    for (a, b) in [
        (via_rk4.eps_r, r.eps_r),
        (via_rk4.mu_r, r.mu_r),
        (via_rk4.n, r.n),
    ] {
        assert!(rel(a, b) < 1e-8);
    }
}

#[test]
fn response_is_deterministic() {
    for preset in presets::all() {
        let p = preset.params.with_delta_p(0.37);
        assert_eq!(response_at(&p), response_at(&p));
    }
}

#[test]
fn preset_sweep_invariants() {
    for preset in presets::all() {
        let mut spec = preset.sweep();
        spec.points = 301;
        let result = run_sweep(&spec).unwrap();
        assert_eq!(result.rows.len(), 301);
        for w in result.rows.windows(2) {
            assert!(w[0].axis_value < w[1].axis_value);
        }
        for d in result.rows.iter().filter_map(|r| r.data()) {
            let r = &d.response;
            assert!(!(r.n.re < 0.0 && !r.left_handed));
            let s = r.eps_r * r.mu_r;
            assert!((r.n * r.n - s).norm() <= 1e-12 * s.norm());
        }
        for ivs in [
            &result.zero_absorption_intervals,
            &result.left_handed_intervals,
        ] {
            for iv in ivs.iter() {
                assert!(spec.start <= iv.lo && iv.hi <= spec.stop);
            }
            for w in ivs.windows(2) {
                assert!(w[0].hi < w[1].lo);
            }
        }
        if let Some(e) = result.re_n_extremum {
            assert!(result
                .zero_absorption_intervals
                .iter()
                .any(|iv| iv.contains(e.axis_value)));
        } else {
            assert!(result.zero_absorption_intervals.is_empty());
        }
    }
}

#[test]
fn failing_points_do_not_abort_sweep() {
    let spec = SweepSpec {
        base: presets::find("fig2-oc1.0").unwrap().params,
        axis: SweepAxis::OmegaP,
        start: -0.1,
        stop: 0.1,
        points: 3,
        abs_threshold: 1e-2,
    };
    let result = run_sweep(&spec).unwrap();
    let status: Vec<_> = result.rows.iter().map(|r| r.status()).collect();
    assert_eq!(status, ["invalid_params", "zero_probe", "ok"]);
    assert_eq!(result.failed_points(), 2);
    assert!(matches!(result.rows[1].outcome, Err(Error::ZeroProbe)));
}

#[test]
fn strong_coupling_window_and_extremum() {
    let result = run_sweep(&presets::find("fig2-oc3.5").unwrap().sweep()).unwrap();
    assert!(!result.zero_absorption_intervals.is_empty());
    let e = result.re_n_extremum.unwrap();
    let in_window: Vec<f64> = result
        .rows
        .iter()
        .filter(|r| {
            result
                .zero_absorption_intervals
                .iter()
                .any(|iv| iv.contains(r.axis_value))
        })
        .filter_map(|r| r.data().map(|d| d.response.n.re))
        .collect();
    assert_eq!(
        e.re_n,
        in_window.iter().copied().fold(f64::INFINITY, f64::min)
    );
}
