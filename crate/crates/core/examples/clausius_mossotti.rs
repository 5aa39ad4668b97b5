// Copyright 2026 The lhvapor Authors
// SPDX-License-Identifier: Apache-2.0

//! Local-field corrections in isolation: how ε_r and μ_r follow N·α from the
//! dilute limit through the Clausius–Mossotti pole at N·α = 3, and which
//! refractive-index branch is picked.
//!
//!     cargo run --example clausius_mossotti

use lhvapor::optics::{permeability, permittivity, refractive_index};
use lhvapor::Complex64;

fn main() {
    let density = 5e24;
    println!("{:>8} {:>24} {:>24} {:>24}", "N·α", "ε_r", "μ_r", "n");
    for x in [-30.0, -3.0, -1.5, -0.1, 1e-6, 0.5, 2.0, 2.9, 3.0, 3.1, 10.0] {
        let alpha = Complex64::new(x, 0.01) / density;
        match (permittivity(alpha, density), permeability(alpha, density)) {
            (Ok(eps), Ok(mu)) => {
                let n = refractive_index(eps, mu);
                println!("{x:>8} {eps:>24.4} {mu:>24.4} {n:>24.4}");
            }
            (Err(e), _) | (_, Err(e)) => println!("{x:>8} {e}"),
        }
    }

    // On the real axis N·α = 3 is an exact pole and is reported, not evaluated.
    match permittivity(Complex64::new(3.0, 0.0) / density, density) {
        Ok(eps) => println!("\nN·α = 3 (real): ε_r = {eps}"),
        Err(e) => println!("\nN·α = 3 (real): {e}"),
    }

    // Saturation: for |N·α| ≫ 3 the corrected response tends to −2.
    let big = Complex64::new(1e6, 1.0) / density;
    println!(
        "N·α = 1e6: ε_r = {:.6}, μ_r = {:.6}",
        permittivity(big, density).unwrap(),
        permeability(big, density).unwrap()
    );
}
