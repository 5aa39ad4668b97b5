// Copyright 2026 The lhvapor Authors
// SPDX-License-Identifier: Apache-2.0

//! Stationary solution of the master equation.

use nalgebra::SVector;
use num_complex::Complex64;

use crate::density::{vec_index, DensityMatrix, DIM, LEVELS};
use crate::error::{Error, Result};
use crate::liouvillian::{LMatrix, Liouvillian};

/// Condition estimates above this are treated as a singular system.
pub const MAX_CONDITION: f64 = 1e14;

/// The equation replaced by the trace constraint.
const REPLACED_ROW: usize = vec_index(1, 1);

/// L with the ρ₁₁ row swapped for the trace covector.
pub fn constrained_matrix(l: &Liouvillian) -> LMatrix {
    let mut a = *l.matrix();
    for c in 0..DIM {
        a[(REPLACED_ROW, c)] = Complex64::new(0.0, 0.0);
    }
    for k in 1..=LEVELS {
        a[(REPLACED_ROW, vec_index(k, k))] = Complex64::new(1.0, 0.0);
    }
    a
}

/// 2-norm condition number of the constrained system.
pub fn condition_estimate(l: &Liouvillian) -> f64 {
    condition_of(&constrained_matrix(l))
}

fn condition_of(a: &LMatrix) -> f64 {
    let sv = a.singular_values();
    let min = sv.min();
    if min == 0.0 {
        f64::INFINITY
    } else {
        sv.max() / min
    }
}

/// Solves L·vec(ρ) = 0 subject to tr ρ = 1.
///
/// The ρ₁₁ equation is redundant (the population equations sum to zero) and is
/// replaced by the trace constraint; the resulting dense system is solved by
/// LU with partial pivoting.
pub fn steady_state(l: &Liouvillian) -> Result<DensityMatrix> {
    let a = constrained_matrix(l);
    let condition = condition_of(&a);
    if condition.is_nan() || condition > MAX_CONDITION {
        return Err(Error::SingularSystem { condition });
    }

    let mut rhs = SVector::<Complex64, DIM>::zeros();
    rhs[REPLACED_ROW] = Complex64::new(1.0, 0.0);
    let x = a
        .lu()
        .solve(&rhs)
        .ok_or(Error::SingularSystem { condition })?;

    let mut v = [Complex64::new(0.0, 0.0); DIM];
    v.copy_from_slice(x.as_slice());
    Ok(DensityMatrix::from_vec(&v))
}
