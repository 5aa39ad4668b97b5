// Copyright 2026 The lhvapor Authors
// SPDX-License-Identifier: Apache-2.0

//! The 4×4 density matrix and its row-major vectorization.

use std::ops::{Add, Index, IndexMut, Mul};

use num_complex::Complex64;

/// Number of atomic levels.
pub const LEVELS: usize = 4;
/// Length of the vectorized density matrix.
pub const DIM: usize = LEVELS * LEVELS;

/// Position of ρ_ij (1-based level labels) in the vectorized state.
///
/// The ordering is (ρ₁₁, ρ₁₂, ρ₁₃, ρ₁₄, ρ₂₁, …, ρ₄₄).
#[inline]
pub const fn vec_index(i: usize, j: usize) -> usize {
    (i - 1) * LEVELS + (j - 1)
}

/// Populations and coherences ρ_ij, stored with 0-based indices.
///
/// Index with `rho[(i, j)]` using the 1-based level labels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix {
    elems: [[Complex64; LEVELS]; LEVELS],
}

impl DensityMatrix {
    pub fn zeros() -> Self {
        Self {
            elems: [[Complex64::new(0.0, 0.0); LEVELS]; LEVELS],
        }
    }

    /// Diagonal state with the given populations of |1⟩..|4⟩.
    pub fn diagonal(populations: [f64; LEVELS]) -> Self {
        let mut rho = Self::zeros();
        for (k, p) in populations.into_iter().enumerate() {
            rho.elems[k][k] = Complex64::new(p, 0.0);
        }
        rho
    }

    /// All population in level |1⟩.
    pub fn ground() -> Self {
        Self::diagonal([1.0, 0.0, 0.0, 0.0])
    }

    /// Lower levels |1⟩ and |2⟩ equally populated.
    pub fn equal_lower() -> Self {
        Self::diagonal([0.5, 0.5, 0.0, 0.0])
    }

    pub fn from_vec(v: &[Complex64; DIM]) -> Self {
        let mut rho = Self::zeros();
        for (k, z) in v.iter().enumerate() {
            rho.elems[k / LEVELS][k % LEVELS] = *z;
        }
        rho
    }

    pub fn to_vec(&self) -> [Complex64; DIM] {
        let mut v = [Complex64::new(0.0, 0.0); DIM];
        for (k, z) in v.iter_mut().enumerate() {
            *z = self.elems[k / LEVELS][k % LEVELS];
        }
        v
    }

    pub fn trace(&self) -> Complex64 {
        (0..LEVELS).map(|k| self.elems[k][k]).sum()
    }

    /// Real parts of ρ₁₁..ρ₄₄.
    pub fn populations(&self) -> [f64; LEVELS] {
        std::array::from_fn(|k| self.elems[k][k].re)
    }

    /// max |ρ_ij − conj(ρ_ji)|.
    pub fn hermiticity_error(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..LEVELS {
            for j in i..LEVELS {
                worst = worst.max((self.elems[i][j] - self.elems[j][i].conj()).norm());
            }
        }
        worst
    }

    /// Largest modulus of any element of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.to_vec()
            .iter()
            .zip(other.to_vec().iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Checks Hermiticity, unit trace and population bounds to within `tol`.
    pub fn is_physical(&self, tol: f64) -> bool {
        let pops_ok = self
            .populations()
            .iter()
            .all(|&p| (-tol..=1.0 + tol).contains(&p));
        pops_ok && self.hermiticity_error() <= tol && (self.trace() - 1.0).norm() <= tol
    }
}

impl Default for DensityMatrix {
    fn default() -> Self {
        Self::ground()
    }
}

impl Index<(usize, usize)> for DensityMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.elems[i - 1][j - 1]
    }
}

impl IndexMut<(usize, usize)> for DensityMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.elems[i - 1][j - 1]
    }
}

impl Add for DensityMatrix {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for i in 0..LEVELS {
            for j in 0..LEVELS {
                self.elems[i][j] += rhs.elems[i][j];
            }
        }
        self
    }
}

impl Mul<DensityMatrix> for f64 {
    type Output = DensityMatrix;

    fn mul(self, mut rhs: DensityMatrix) -> DensityMatrix {
        for row in rhs.elems.iter_mut() {
            for z in row.iter_mut() {
                *z *= self;
            }
        }
        rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vectorization_order() {
        assert_eq!(vec_index(1, 1), 0);
        assert_eq!(vec_index(1, 4), 3);
        assert_eq!(vec_index(2, 1), 4);
        assert_eq!(vec_index(3, 2), 9);
        assert_eq!(vec_index(4, 4), 15);

        let mut rho = DensityMatrix::zeros();
        rho[(3, 2)] = Complex64::new(0.25, -1.0);
        let v = rho.to_vec();
        assert_eq!(v[vec_index(3, 2)], Complex64::new(0.25, -1.0));
        assert_eq!(DensityMatrix::from_vec(&v), rho);
    }

    #[test]
    fn ground_state_is_physical() {
        let rho = DensityMatrix::ground();
        assert!(rho.is_physical(1e-12));
        assert_eq!(rho.trace(), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn non_hermitian_detected() {
        let mut rho = DensityMatrix::equal_lower();
        rho[(1, 2)] = Complex64::new(0.1, 0.1);
        rho[(2, 1)] = Complex64::new(0.1, 0.1);
        assert!((rho.hermiticity_error() - 0.2).abs() < 1e-15);
        assert!(!rho.is_physical(1e-12));
    }

    #[test]
    fn linear_combination() {
        let rho = 0.25 * DensityMatrix::ground() + 0.75 * DensityMatrix::equal_lower();
        assert_eq!(rho.populations(), [0.625, 0.375, 0.0, 0.0]);
    }
}
