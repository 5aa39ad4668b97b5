// Copyright 2026 The lhvapor Authors
// SPDX-License-Identifier: Apache-2.0

//! Equations of motion of the four-level atom as a 16×16 linear operator.
//!
//! Level scheme: the coupling field Ωc drives |3⟩–|4⟩, the probe Ωp drives
//! |2⟩–|3⟩ (electric) while its magnetic field couples |1⟩–|2⟩, and the signal
//! Ωs drives |1⟩–|3⟩. γ₄, γ₂, γ₃ are the radiative rates |4⟩→|3⟩, |3⟩→|2⟩,
//! |3⟩→|1⟩ and γ₁ the non-radiative relaxation of |2⟩.
//!
//! Only the four population equations and the six upper-triangle coherence
//! equations are written out below. The lower triangle follows by complex
//! conjugation, dρ_ji/dt = conj(dρ_ij/dt), so the operator maps Hermitian
//! states to Hermitian derivatives.

use nalgebra::SMatrix;
use num_complex::Complex64;

use crate::density::{vec_index, DensityMatrix, DIM, LEVELS};
use crate::error::Result;
use crate::params::SystemParams;

pub type LMatrix = SMatrix<Complex64, DIM, DIM>;

type Level = (usize, usize);

/// dρ/dt = L·vec(ρ), in units of γ.
#[derive(Debug, Clone, PartialEq)]
pub struct Liouvillian {
    matrix: LMatrix,
    params: SystemParams,
}

impl Liouvillian {
    pub fn matrix(&self) -> &LMatrix {
        &self.matrix
    }

    /// The parameter set the operator was built from.
    pub fn params(&self) -> &SystemParams {
        &self.params
    }

    /// Coefficient of ρ_col in the equation for dρ_row/dt.
    pub fn entry(&self, row: Level, col: Level) -> Complex64 {
        self.matrix[(vec_index(row.0, row.1), vec_index(col.0, col.1))]
    }

    /// dρ/dt for the given state.
    pub fn apply(&self, rho: &DensityMatrix) -> DensityMatrix {
        let v = nalgebra::SVector::<Complex64, DIM>::from_column_slice(&rho.to_vec());
        let out = self.matrix * v;
        let mut arr = [Complex64::new(0.0, 0.0); DIM];
        arr.copy_from_slice(out.as_slice());
        DensityMatrix::from_vec(&arr)
    }

    /// Max-norm of L·vec(ρ); zero for an exact stationary state.
    pub fn residual(&self, rho: &DensityMatrix) -> f64 {
        self.apply(rho)
            .to_vec()
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// max over columns of |Σ_k L[kk, col]|: how far the trace covector is
    /// from annihilating L.
    pub fn trace_annihilation_error(&self) -> f64 {
        (0..DIM)
            .map(|col| {
                (1..=LEVELS)
                    .map(|k| self.matrix[(vec_index(k, k), col)])
                    .sum::<Complex64>()
                    .norm()
            })
            .fold(0.0, f64::max)
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.matrix.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// Builds the Liouvillian for a validated parameter set.
pub fn build_liouvillian(params: &SystemParams) -> Result<Liouvillian> {
    params.validate()?;
    Ok(assemble(params))
}

fn assemble(p: &SystemParams) -> Liouvillian {
    let i = Complex64::i();
    let re = |x: f64| Complex64::new(x, 0.0);
    let (op, os, oc) = (p.omega_p, p.omega_s, p.omega_c);
    let (dp, ds, dc) = (p.delta_p, p.delta_s, p.delta_c);
    let (g1, g2, g3, g4) = (p.gamma1, p.gamma2, p.gamma3, p.gamma4);

    let populations: [(Level, Vec<(Level, Complex64)>); 4] = [
        (
            (1, 1),
            vec![
                ((3, 3), re(2.0 * g3)),
                ((2, 2), re(2.0 * g1)),
                ((1, 3), i * os),
                ((3, 1), -i * os),
            ],
        ),
        (
            (2, 2),
            vec![
                ((3, 3), re(2.0 * g2)),
                ((2, 2), re(-2.0 * g1)),
                ((2, 3), i * op),
                ((3, 2), -i * op),
            ],
        ),
        (
            (3, 3),
            vec![
                ((3, 3), re(-2.0 * (g2 + g3))),
                ((4, 4), re(2.0 * g4)),
                ((1, 3), -i * os),
                ((3, 1), i * os),
                ((2, 3), -i * op),
                ((3, 2), i * op),
                ((3, 4), i * oc),
                ((4, 3), -i * oc),
            ],
        ),
        (
            (4, 4),
            vec![((4, 4), re(-2.0 * g4)), ((3, 4), -i * oc), ((4, 3), i * oc)],
        ),
    ];

    let coherences: [(Level, Vec<(Level, Complex64)>); 6] = [
        (
            (1, 2),
            vec![
                ((1, 2), -(g1 - i * (ds - dp))),
                ((1, 3), i * op),
                ((3, 2), -i * os),
            ],
        ),
        (
            (1, 3),
            vec![
                ((1, 3), -(g2 + g3 - i * ds)),
                ((1, 2), i * op),
                ((1, 4), i * oc),
                ((1, 1), i * os),
                ((3, 3), -i * os),
            ],
        ),
        (
            (1, 4),
            vec![
                ((1, 4), -(g4 - i * (ds + dc))),
                ((1, 3), i * oc),
                ((3, 4), -i * os),
            ],
        ),
        (
            (2, 3),
            vec![
                ((2, 3), -(g2 + g3 - i * dp)),
                ((2, 1), i * os),
                ((2, 4), i * oc),
                ((2, 2), i * op),
                ((3, 3), -i * op),
            ],
        ),
        (
            (2, 4),
            vec![
                ((2, 4), -(g1 + g4 - i * (dp + dc))),
                ((2, 3), i * oc),
                ((3, 4), -i * op),
            ],
        ),
        (
            (3, 4),
            vec![
                ((3, 4), -(g2 + g3 + g4 - i * dc)),
                ((1, 4), -i * os),
                ((2, 4), -i * op),
                ((3, 3), i * oc),
                ((4, 4), -i * oc),
            ],
        ),
    ];

    let mut m = LMatrix::zeros();
    let mut put = |row: Level, col: Level, v: Complex64| {
        m[(vec_index(row.0, row.1), vec_index(col.0, col.1))] += v;
    };
    for (row, terms) in &populations {
        for &(col, v) in terms {
            put(*row, col, v);
        }
    }
    for (row, terms) in &coherences {
        for &(col, v) in terms {
            put(*row, col, v);
            put((row.1, row.0), (col.1, col.0), v.conj());
        }
    }

    Liouvillian {
        matrix: m,
        params: *p,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig2_b1() -> SystemParams {
        SystemParams::default()
    }

    #[test]
    fn coupling_entry_matches_equation_for_rho24() {
        let l = build_liouvillian(&fig2_b1()).unwrap();
        // dρ₂₃/dt ∋ iΩc ρ₂₄ with Ωc = 1.0
        assert_eq!(l.entry((2, 3), (2, 4)), Complex64::new(0.0, 1.0));
        // and its conjugate partner
        assert_eq!(l.entry((3, 2), (4, 2)), Complex64::new(0.0, -1.0));
    }

    #[test]
    fn hand_transcribed_rho23_row() {
        // Independent transcription of the ρ₂₃ equation at the base point:
        // −(γ₂+γ₃−iΔp)ρ₂₃ + iΩs ρ₂₁ + iΩc ρ₂₄ + iΩp(ρ₂₂ − ρ₃₃)
        let p = SystemParams {
            delta_p: 0.7,
            ..fig2_b1()
        };
        let l = build_liouvillian(&p).unwrap();
        let expect: [((usize, usize), Complex64); 5] = [
            ((2, 3), Complex64::new(-0.02, 0.7)),
            ((2, 1), Complex64::new(0.0, 0.1)),
            ((2, 4), Complex64::new(0.0, 1.0)),
            ((2, 2), Complex64::new(0.0, 0.1)),
            ((3, 3), Complex64::new(0.0, -0.1)),
        ];
        for k in 1..=4 {
            for j in 1..=4 {
                let want = expect
                    .iter()
                    .find(|(c, _)| *c == (k, j))
                    .map(|(_, v)| *v)
                    .unwrap_or_default();
                let got = l.entry((2, 3), (k, j));
                assert!(
                    (got - want).norm() < 1e-15,
                    "col ({k},{j}): {got} vs {want}"
                );
            }
        }
    }

    #[test]
    fn population_decay_rates() {
        let l = build_liouvillian(&fig2_b1()).unwrap();
        assert_eq!(l.entry((1, 1), (3, 3)), Complex64::new(0.02, 0.0));
        assert_eq!(l.entry((1, 1), (2, 2)), Complex64::new(0.1, 0.0));
        assert_eq!(l.entry((3, 3), (3, 3)), Complex64::new(-0.04, 0.0));
        assert_eq!(l.entry((3, 3), (4, 4)), Complex64::new(0.2, 0.0));
        assert_eq!(l.entry((4, 4), (4, 4)), Complex64::new(-0.2, 0.0));
    }

    #[test]
    fn field_free_operator_is_block_diagonal() {
        let p = SystemParams {
            omega_p: 0.0,
            omega_s: 0.0,
            omega_c: 0.0,
            ..fig2_b1()
        };
        let l = build_liouvillian(&p).unwrap();
        let is_pop = |k: usize| k.is_multiple_of(5);
        for r in 0..DIM {
            for c in 0..DIM {
                if is_pop(r) != is_pop(c) {
                    assert_eq!(l.matrix()[(r, c)], Complex64::new(0.0, 0.0));
                }
            }
            if !is_pop(r) {
                assert!(l.matrix()[(r, r)].re < 0.0);
            }
        }
    }

    #[test]
    fn trace_functional_annihilates() {
        let l = build_liouvillian(&SystemParams {
            delta_c: -1.5,
            delta_s: 1.5,
            omega_p: 0.8,
            omega_s: 0.8,
            omega_c: 3.5,
            ..fig2_b1()
        })
        .unwrap();
        assert!(l.trace_annihilation_error() <= 1e-13 * l.max_abs());
    }

    #[test]
    fn preserves_hermiticity() {
        let l = build_liouvillian(&fig2_b1().with_delta_p(0.3)).unwrap();
        let mut rho = DensityMatrix::equal_lower();
        rho[(2, 3)] = Complex64::new(0.1, 0.05);
        rho[(3, 2)] = Complex64::new(0.1, -0.05);
        rho[(1, 4)] = Complex64::new(-0.02, 0.03);
        rho[(4, 1)] = Complex64::new(-0.02, -0.03);
        assert!(l.apply(&rho).hermiticity_error() < 1e-15);
    }

    #[test]
    fn rejects_invalid_params() {
        let p = SystemParams {
            gamma2: -0.1,
            ..fig2_b1()
        };
        assert!(build_liouvillian(&p).is_err());
    }
}
