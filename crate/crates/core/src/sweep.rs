// Copyright 2026 The lhvapor Authors
// SPDX-License-Identifier: Apache-2.0

//! Detuning sweeps, zero-absorption windows and extrema of Re n.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::optics::{solve_point, OpticalResponse};
use crate::params::SystemParams;

pub const DEFAULT_POINTS: usize = 1201;
/// |Im n| below this counts as zero absorption.
pub const DEFAULT_ABS_THRESHOLD: f64 = 1e-2;

/// Which parameter the sweep varies. Values are in units of γ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepAxis {
    DeltaP,
    DeltaS,
    DeltaC,
    OmegaP,
    OmegaS,
    OmegaC,
}

impl SweepAxis {
    pub fn key(self) -> &'static str {
        match self {
            SweepAxis::DeltaP => "delta_p",
            SweepAxis::DeltaS => "delta_s",
            SweepAxis::DeltaC => "delta_c",
            SweepAxis::OmegaP => "omega_p",
            SweepAxis::OmegaS => "omega_s",
            SweepAxis::OmegaC => "omega_c",
        }
    }

    /// `params` with this axis set to `value`.
    pub fn apply(self, mut params: SystemParams, value: f64) -> SystemParams {
        params.set(self.key(), value);
        params
    }
}

impl fmt::Display for SweepAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for SweepAxis {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        use SweepAxis::*;
        [DeltaP, DeltaS, DeltaC, OmegaP, OmegaS, OmegaC]
            .into_iter()
            .find(|a| a.key() == s)
            .ok_or_else(|| format!("not a sweepable parameter: {s}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub base: SystemParams,
    pub axis: SweepAxis,
    pub start: f64,
    pub stop: f64,
    pub points: usize,
    pub abs_threshold: f64,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        self.base.validate()?;
        if !(self.start.is_finite() && self.stop.is_finite() && self.start < self.stop) {
            return Err(Error::InvalidSweep(format!(
                "need finite start < stop, got [{}, {}]",
                self.start, self.stop
            )));
        }
        if self.points < 2 {
            return Err(Error::InvalidSweep(format!(
                "need at least 2 points, got {}",
                self.points
            )));
        }
        if self.abs_threshold.is_nan() || self.abs_threshold <= 0.0 {
            return Err(Error::InvalidSweep(format!(
                "abs_threshold must be > 0, got {}",
                self.abs_threshold
            )));
        }
        Ok(())
    }

    /// Uniform grid; the end points are exactly `start` and `stop`.
    pub fn grid(&self) -> Vec<f64> {
        let last = self.points - 1;
        (0..self.points)
            .map(|i| {
                if i == last {
                    self.stop
                } else {
                    self.start + (self.stop - self.start) * (i as f64 / last as f64)
                }
            })
            .collect()
    }

    pub fn spacing(&self) -> f64 {
        (self.stop - self.start) / (self.points - 1) as f64
    }

    /// Same window with the grid spacing halved; every old point is kept.
    pub fn refined(&self) -> Self {
        Self {
            points: 2 * (self.points - 1) + 1,
            ..*self
        }
    }
}

/// A successfully evaluated grid point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointData {
    pub response: OpticalResponse,
    /// Steady-state ρ₁₁..ρ₄₄.
    pub populations: [f64; 4],
}

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub axis_value: f64,
    pub outcome: Result<PointData>,
}

impl Row {
    pub fn data(&self) -> Option<&PointData> {
        self.outcome.as_ref().ok()
    }

    pub fn status(&self) -> &'static str {
        match &self.outcome {
            Ok(_) => "ok",
            Err(e) => e.status_tag(),
        }
    }
}

/// Closed interval of axis values; both ends are evaluated grid points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Extremum {
    pub axis_value: f64,
    pub re_n: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub spec: SweepSpec,
    pub rows: Vec<Row>,
    pub zero_absorption_intervals: Vec<Interval>,
    /// Most negative Re n inside the zero-absorption windows, if any exist.
    pub re_n_extremum: Option<Extremum>,
    pub left_handed_intervals: Vec<Interval>,
}

impl SweepResult {
    pub fn failed_points(&self) -> usize {
        self.rows.iter().filter(|r| r.outcome.is_err()).count()
    }
}

/// Evaluates every grid point (in parallel) and derives windows and extrema.
pub fn run_sweep(spec: &SweepSpec) -> Result<SweepResult> {
    spec.validate()?;
    let rows: Vec<Row> = spec
        .grid()
        .into_par_iter()
        .map(|x| Row {
            axis_value: x,
            outcome: evaluate(spec, x),
        })
        .collect();

    if rows.iter().all(|r| r.outcome.is_err()) {
        return Err(Error::AllPointsFailed);
    }

    let zero_absorption_intervals = extract_intervals(&rows, spec.abs_threshold);
    let re_n_extremum = locate_extremum(&rows, &zero_absorption_intervals).ok();
    let left_handed_intervals = runs_where(&rows, |d| d.response.left_handed);
    Ok(SweepResult {
        spec: *spec,
        rows,
        zero_absorption_intervals,
        re_n_extremum,
        left_handed_intervals,
    })
}

fn evaluate(spec: &SweepSpec, x: f64) -> Result<PointData> {
    let params = spec.axis.apply(spec.base, x);
    let sol = solve_point(&params)?;
    Ok(PointData {
        response: sol.response,
        populations: sol.rho.populations(),
    })
}

/// Maximal runs of consecutive valid rows with |Im n| < `abs_threshold`.
///
/// A failed row ends a run. Rows must be sorted by axis value.
pub fn extract_intervals(rows: &[Row], abs_threshold: f64) -> Vec<Interval> {
    runs_where(rows, |d| d.response.n.im.abs() < abs_threshold)
}

fn runs_where(rows: &[Row], pred: impl Fn(&PointData) -> bool) -> Vec<Interval> {
    let mut out = Vec::new();
    let mut open: Option<Interval> = None;
    for row in rows {
        match row.data() {
            Some(d) if pred(d) => match open.as_mut() {
                Some(iv) => iv.hi = row.axis_value,
                None => {
                    open = Some(Interval {
                        lo: row.axis_value,
                        hi: row.axis_value,
                    })
                }
            },
            _ => out.extend(open.take()),
        }
    }
    out.extend(open);
    out
}

/// Grid point with the most negative Re n inside any of `intervals`.
/// Ties go to the smaller axis value.
pub fn locate_extremum(rows: &[Row], intervals: &[Interval]) -> Result<Extremum> {
    if intervals.is_empty() {
        return Err(Error::NoIntervals);
    }
    let mut best: Option<Extremum> = None;
    for row in rows {
        let Some(d) = row.data() else { continue };
        if !intervals.iter().any(|iv| iv.contains(row.axis_value)) {
            continue;
        }
        let re_n = d.response.n.re;
        let better = match best {
            None => true,
            Some(b) => re_n < b.re_n || (re_n == b.re_n && row.axis_value < b.axis_value),
        };
        if better {
            best = Some(Extremum {
                axis_value: row.axis_value,
                re_n,
            });
        }
    }
    best.ok_or(Error::NoIntervals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    pub(crate) fn synthetic(points: &[(f64, f64, f64)]) -> Vec<Row> {
        // (axis value, Re n, Im n)
        points
            .iter()
            .map(|&(x, re, im)| {
                let n = Complex64::new(re, im);
                Row {
                    axis_value: x,
                    outcome: Ok(PointData {
                        response: OpticalResponse {
                            gamma_e: Complex64::default(),
                            gamma_m: Complex64::default(),
                            eps_r: n,
                            mu_r: Complex64::new(1.0, 0.0),
                            n,
                            left_handed: re < 0.0,
                            gain_flag: im < -1e-6,
                        },
                        populations: [1.0, 0.0, 0.0, 0.0],
                    }),
                }
            })
            .collect()
    }

    #[test]
    fn all_zero_absorption_gives_one_interval() {
        let rows = synthetic(&[(0.0, 1.0, 0.0), (1.0, 1.0, 0.0), (2.0, 1.0, 0.0)]);
        assert_eq!(
            extract_intervals(&rows, 1e-2),
            vec![Interval { lo: 0.0, hi: 2.0 }]
        );
    }

    #[test]
    fn alternating_gives_degenerate_intervals() {
        let rows = synthetic(&[
            (0.0, 1.0, 0.0),
            (1.0, 1.0, 0.5),
            (2.0, 1.0, 0.0),
            (3.0, 1.0, -0.5),
            (4.0, 1.0, 0.001),
        ]);
        assert_eq!(
            extract_intervals(&rows, 1e-2),
            vec![
                Interval { lo: 0.0, hi: 0.0 },
                Interval { lo: 2.0, hi: 2.0 },
                Interval { lo: 4.0, hi: 4.0 }
            ]
        );
    }

    #[test]
    fn failed_row_splits_run() {
        let mut rows = synthetic(&[(0.0, 1.0, 0.0), (1.0, 1.0, 0.0), (2.0, 1.0, 0.0)]);
        rows[1].outcome = Err(Error::SingularSystem { condition: 1e20 });
        assert_eq!(
            extract_intervals(&rows, 1e-2),
            vec![Interval { lo: 0.0, hi: 0.0 }, Interval { lo: 2.0, hi: 2.0 }]
        );
        assert_eq!(rows[1].status(), "singular_system");
    }

    #[test]
    fn extremum_rules() {
        let rows = synthetic(&[
            (-2.0, -3.0, 0.0),
            (-1.0, -1.0, 0.5),
            (0.0, -5.0, 0.5),
            (1.0, -1.0, 0.0),
            (2.0, -3.0, 0.0),
        ]);
        let ivs = extract_intervals(&rows, 1e-2);
        // The deep minimum at 0 is absorbing and excluded; the tie goes left.
        let e = locate_extremum(&rows, &ivs).unwrap();
        assert_eq!(
            e,
            Extremum {
                axis_value: -2.0,
                re_n: -3.0
            }
        );

        let single = vec![Interval { lo: 1.0, hi: 1.0 }];
        assert_eq!(locate_extremum(&rows, &single).unwrap().axis_value, 1.0);
        assert_eq!(locate_extremum(&rows, &[]), Err(Error::NoIntervals));
    }

    #[test]
    fn grid_is_uniform_and_exact_at_ends() {
        let spec = SweepSpec {
            base: SystemParams::default(),
            axis: SweepAxis::DeltaP,
            start: -6.0,
            stop: 6.0,
            points: 1201,
            abs_threshold: DEFAULT_ABS_THRESHOLD,
        };
        let g = spec.grid();
        assert_eq!(g.len(), 1201);
        assert_eq!((g[0], g[1200]), (-6.0, 6.0));
        assert!((g[600]).abs() < 1e-15);
        assert!((spec.spacing() - 0.01).abs() < 1e-15);
        let fine = spec.refined().grid();
        for (i, x) in g.iter().enumerate() {
            assert_eq!(fine[2 * i], *x);
        }
    }

    #[test]
    fn invalid_specs_rejected() {
        let ok = SweepSpec {
            base: SystemParams::default(),
            axis: SweepAxis::DeltaP,
            start: -1.0,
            stop: 1.0,
            points: 2,
            abs_threshold: 0.01,
        };
        assert!(ok.validate().is_ok());
        for bad in [
            SweepSpec { start: 1.0, ..ok },
            SweepSpec { points: 1, ..ok },
            SweepSpec {
                abs_threshold: 0.0,
                ..ok
            },
        ] {
            assert!(matches!(bad.validate(), Err(Error::InvalidSweep(_))));
        }
    }

    #[test]
    fn minimal_two_point_sweep() {
        let spec = SweepSpec {
            base: SystemParams::default(),
            axis: SweepAxis::DeltaP,
            start: -1.0,
            stop: 1.0,
            points: 2,
            abs_threshold: 0.01,
        };
        let r = run_sweep(&spec).unwrap();
        assert_eq!(r.rows.len(), 2);
        assert_eq!(r.rows[0].axis_value, -1.0);
        assert_eq!(r.rows[1].axis_value, 1.0);
        assert_eq!(r.failed_points(), 0);
    }

    #[test]
    fn all_points_failed() {
        // Negative probe Rabi frequencies are rejected point by point.
        let spec = SweepSpec {
            base: SystemParams::default(),
            axis: SweepAxis::OmegaP,
            start: -2.0,
            stop: -1.0,
            points: 3,
            abs_threshold: 0.01,
        };
        assert_eq!(run_sweep(&spec), Err(Error::AllPointsFailed));
    }

    #[test]
    fn axis_names_round_trip() {
        for a in [
            "delta_p", "delta_s", "delta_c", "omega_p", "omega_s", "omega_c",
        ] {
            assert_eq!(a.parse::<SweepAxis>().unwrap().key(), a);
        }
        assert!("gamma1".parse::<SweepAxis>().is_err());
    }
}
