// Copyright 2026 The lhvapor Authors
// SPDX-License-Identifier: Apache-2.0

//! Named parameter sets for the three figure families.
//!
//! * `fig2-oc{1.0,1.5,3.5,4.0}`: coupling and signal resonant, Ωp = Ωs = 0.1.
//! * `fig3-oc{1.0,1.5,3.5}`: Δc = −1.5, Δs = 1.5, Ωp = Ωs = 0.8.
//! * `fig4-op{0.1,1.0,2.8}`: Ωc = 3.5, Δs = 1.5, Δc = 0, Ωp = Ωs swept.
//!
//! Panel labels (`fig2-b1`..`fig2-b4`, `fig3-d1`..`fig3-d3`,
//! `fig4-f1`..`fig4-f3`) are accepted as aliases.

use crate::params::SystemParams;
use crate::sweep::{SweepAxis, SweepSpec, DEFAULT_ABS_THRESHOLD, DEFAULT_POINTS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Resonant coupling and signal, Ωc varied.
    Fig2,
    /// Off-resonant coupling and signal, Ωc varied.
    Fig3,
    /// Off-resonant signal, Ωp = Ωs varied.
    Fig4,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Preset {
    pub name: &'static str,
    pub panel: &'static str,
    pub family: Family,
    pub params: SystemParams,
}

const FIG2: [(&str, &str, f64); 4] = [
    ("fig2-oc1.0", "fig2-b1", 1.0),
    ("fig2-oc1.5", "fig2-b2", 1.5),
    ("fig2-oc3.5", "fig2-b3", 3.5),
    ("fig2-oc4.0", "fig2-b4", 4.0),
];
const FIG3: [(&str, &str, f64); 3] = [
    ("fig3-oc1.0", "fig3-d1", 1.0),
    ("fig3-oc1.5", "fig3-d2", 1.5),
    ("fig3-oc3.5", "fig3-d3", 3.5),
];
const FIG4: [(&str, &str, f64); 3] = [
    ("fig4-op0.1", "fig4-f1", 0.1),
    ("fig4-op1.0", "fig4-f2", 1.0),
    ("fig4-op2.8", "fig4-f3", 2.8),
];

/// All ten presets in figure order.
pub fn all() -> Vec<Preset> {
    let base = SystemParams::default();
    let fig2 = FIG2.iter().map(|&(name, panel, oc)| Preset {
        name,
        panel,
        family: Family::Fig2,
        params: SystemParams {
            omega_c: oc,
            ..base
        },
    });
    let fig3 = FIG3.iter().map(|&(name, panel, oc)| Preset {
        name,
        panel,
        family: Family::Fig3,
        params: SystemParams {
            delta_c: -1.5,
            delta_s: 1.5,
            omega_p: 0.8,
            omega_s: 0.8,
            omega_c: oc,
            ..base
        },
    });
    let fig4 = FIG4.iter().map(|&(name, panel, op)| Preset {
        name,
        panel,
        family: Family::Fig4,
        params: SystemParams {
            delta_s: 1.5,
            omega_c: 3.5,
            omega_p: op,
            omega_s: op,
            ..base
        },
    });
    fig2.chain(fig3).chain(fig4).collect()
}

/// Looks up a preset by name or panel alias.
pub fn find(name: &str) -> Option<Preset> {
    all()
        .into_iter()
        .find(|p| p.name == name || p.panel == name)
}

impl Preset {
    /// Probe-detuning window plotted for this family, in units of γ.
    pub fn window(&self) -> (f64, f64) {
        match self.family {
            Family::Fig2 => (-6.0, 6.0),
            Family::Fig3 | Family::Fig4 => (-12.0, 14.0),
        }
    }

    /// The default probe-detuning sweep for this preset.
    pub fn sweep(&self) -> SweepSpec {
        let (start, stop) = self.window();
        SweepSpec {
            base: self.params,
            axis: SweepAxis::DeltaP,
            start,
            stop,
            points: DEFAULT_POINTS,
            abs_threshold: DEFAULT_ABS_THRESHOLD,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ten_presets_with_unique_names() {
        let all = all();
        assert_eq!(all.len(), 10);
        let mut names: Vec<_> = all.iter().flat_map(|p| [p.name, p.panel]).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), 20);
        for p in &all {
            p.params.validate().unwrap();
            p.sweep().validate().unwrap();
        }
    }

    #[test]
    fn fig2_resonant_values() {
        let p = find("fig2-oc1.0").unwrap().params;
        assert_eq!((p.delta_c, p.delta_s), (0.0, 0.0));
        assert_eq!(p.gamma1, 0.05);
        assert_eq!((p.gamma2, p.gamma3), (0.01, 0.01));
        assert_eq!(p.gamma4, 0.1);
        assert_eq!((p.omega_p, p.omega_s, p.omega_c), (0.1, 0.1, 1.0));
        assert_eq!(p.number_density, 5e24);
        assert_eq!(p.gamma, 1e8);
    }

    #[test]
    fn fig3_off_resonant_values() {
        let p = find("fig3-oc3.5").unwrap().params;
        assert_eq!((p.delta_c, p.delta_s), (-1.5, 1.5));
        assert_eq!((p.omega_p, p.omega_s, p.omega_c), (0.8, 0.8, 3.5));
        assert_eq!(p.gamma1, 0.05);
    }

    #[test]
    fn fig4_values_and_aliases() {
        let p = find("fig4-f3").unwrap();
        assert_eq!(p.name, "fig4-op2.8");
        assert_eq!((p.params.omega_p, p.params.omega_s), (2.8, 2.8));
        assert_eq!(
            (p.params.omega_c, p.params.delta_s, p.params.delta_c),
            (3.5, 1.5, 0.0)
        );
        assert_eq!(p.window(), (-12.0, 14.0));
        assert!(find("fig5-oc1.0").is_none());
    }
}
