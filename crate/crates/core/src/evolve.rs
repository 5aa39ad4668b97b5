// Copyright 2026 The lhvapor Authors
// SPDX-License-Identifier: Apache-2.0

//! Fixed-step RK4 propagation of dρ/dt = L·vec(ρ).
//!
//! Serves as an independent check on [`crate::steady::steady_state`]: the
//! propagator never touches a linear solver, only matrix-vector products.

use num_complex::Complex64;

use crate::density::{DensityMatrix, DIM};
use crate::error::{Error, Result};
use crate::liouvillian::Liouvillian;

/// Default step, in units of 1/γ.
pub const DEFAULT_DT: f64 = 1e-3;
/// Default horizon, in units of 1/γ.
pub const DEFAULT_T_END: f64 = 1e3;

/// Largest admissible step for `l`: 0.01 / max(1, Ωc, Ωp, Ωs, Σγ_k).
pub fn max_step(l: &Liouvillian) -> f64 {
    0.01 / l.params().max_rate()
}

/// Row-compressed copy of L; most of the 256 entries are zero.
struct SparseRows {
    rows: Vec<Vec<(usize, Complex64)>>,
}

impl SparseRows {
    fn new(l: &Liouvillian) -> Self {
        let m = l.matrix();
        let rows = (0..DIM)
            .map(|r| {
                (0..DIM)
                    .filter(|&c| m[(r, c)] != Complex64::new(0.0, 0.0))
                    .map(|c| (c, m[(r, c)]))
                    .collect()
            })
            .collect();
        Self { rows }
    }

    fn mul(&self, x: &[Complex64; DIM], out: &mut [Complex64; DIM]) {
        for (o, row) in out.iter_mut().zip(&self.rows) {
            *o = row.iter().map(|&(c, v)| v * x[c]).sum();
        }
    }
}

/// Propagates `rho0` to `t_end` with classic fourth-order Runge–Kutta.
///
/// If `t_end` is not a multiple of `dt` the last step is shortened.
pub fn time_evolve(
    l: &Liouvillian,
    rho0: &DensityMatrix,
    t_end: f64,
    dt: f64,
) -> Result<DensityMatrix> {
    let max_dt = max_step(l);
    if !(dt > 0.0 && dt <= max_dt) {
        return Err(Error::StepTooLarge { dt, max_dt });
    }
    if !t_end.is_finite() || t_end < 0.0 {
        return Err(Error::InvalidParams {
            name: "t_end",
            reason: format!("must be finite and >= 0, got {t_end}"),
        });
    }
    if t_end == 0.0 {
        return Ok(*rho0);
    }

    let op = SparseRows::new(l);
    let full_steps = (t_end / dt).floor() as u64;
    let remainder = t_end - full_steps as f64 * dt;

    let mut y = rho0.to_vec();
    let mut scratch = Rk4Scratch::default();
    for _ in 0..full_steps {
        scratch.step(&op, &mut y, dt);
    }
    if remainder > 1e-12 * dt {
        scratch.step(&op, &mut y, remainder);
    }
    Ok(DensityMatrix::from_vec(&y))
}

struct Rk4Scratch {
    k1: [Complex64; DIM],
    k2: [Complex64; DIM],
    k3: [Complex64; DIM],
    k4: [Complex64; DIM],
    tmp: [Complex64; DIM],
}

impl Default for Rk4Scratch {
    fn default() -> Self {
        let z = [Complex64::new(0.0, 0.0); DIM];
        Self {
            k1: z,
            k2: z,
            k3: z,
            k4: z,
            tmp: z,
        }
    }
}

impl Rk4Scratch {
    #[allow(clippy::needless_range_loop)]
    fn step(&mut self, op: &SparseRows, y: &mut [Complex64; DIM], h: f64) {
        op.mul(y, &mut self.k1);
        for k in 0..DIM {
            self.tmp[k] = y[k] + self.k1[k] * (0.5 * h);
        }
        op.mul(&self.tmp, &mut self.k2);
        for k in 0..DIM {
            self.tmp[k] = y[k] + self.k2[k] * (0.5 * h);
        }
        op.mul(&self.tmp, &mut self.k3);
        for k in 0..DIM {
            self.tmp[k] = y[k] + self.k3[k] * h;
        }
        op.mul(&self.tmp, &mut self.k4);
        for k in 0..DIM {
            y[k] += (self.k1[k] + 2.0 * self.k2[k] + 2.0 * self.k3[k] + self.k4[k]) * (h / 6.0);
        }
    }
}
