// Copyright 2026 The lhvapor Authors
// SPDX-License-Identifier: Apache-2.0

//! Plot-ready output: one CSV table of per-point values plus a summary of the
//! derived windows and extrema.
//!
//! Floats are written with 17 significant digits so the text round-trips to
//! the same `f64`. Files are written to a temporary sibling and renamed into
//! place.

use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::config::{OutputFormat, RunConfig};
use crate::error::{Error, Result};
use crate::sweep::{Extremum, Interval, SweepAxis, SweepResult};

/// Columns after the axis column, in order.
pub const VALUE_COLUMNS: [&str; 13] = [
    "re_eps",
    "im_eps",
    "re_mu",
    "im_mu",
    "re_n",
    "im_n",
    "re_gamma_e_m3",
    "im_gamma_e_m3",
    "re_gamma_m_m3",
    "im_gamma_m_m3",
    "left_handed",
    "gain_flag",
    "status",
];

pub const POPULATION_COLUMNS: [&str; 4] = ["rho11", "rho22", "rho33", "rho44"];

/// `x` with 17 significant digits.
pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn axis_column(axis: SweepAxis) -> String {
    format!("{}_over_gamma", axis.key())
}

pub fn header(axis: SweepAxis, emit_populations: bool) -> Vec<String> {
    let mut h = vec![axis_column(axis)];
    h.extend(VALUE_COLUMNS.iter().map(|s| s.to_string()));
    if emit_populations {
        h.extend(POPULATION_COLUMNS.iter().map(|s| s.to_string()));
    }
    h
}

/// Writes the per-point table. Failed points keep their row with empty
/// numeric fields and a non-`ok` status.
pub fn write_table<W: Write>(
    result: &SweepResult,
    emit_populations: bool,
    w: W,
) -> csv::Result<()> {
    let mut wtr = csv::Writer::from_writer(w);
    wtr.write_record(header(result.spec.axis, emit_populations))?;
    let width = 1 + VALUE_COLUMNS.len() + if emit_populations { 4 } else { 0 };
    for row in &result.rows {
        let mut rec: Vec<String> = Vec::with_capacity(width);
        rec.push(format_f64(row.axis_value));
        match row.data() {
            Some(d) => {
                let r = &d.response;
                for z in [r.eps_r, r.mu_r, r.n, r.gamma_e, r.gamma_m] {
                    rec.push(format_f64(z.re));
                    rec.push(format_f64(z.im));
                }
                rec.push(r.left_handed.to_string());
                rec.push(r.gain_flag.to_string());
                rec.push(row.status().to_string());
                if emit_populations {
                    rec.extend(d.populations.iter().map(|&p| format_f64(p)));
                }
            }
            None => {
                rec.resize(VALUE_COLUMNS.len(), String::new());
                rec.push(row.status().to_string());
                rec.resize(width, String::new());
            }
        }
        wtr.write_record(&rec)?;
    }
    wtr.flush()?;
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub preset: Option<String>,
    pub axis: SweepAxis,
    pub start: f64,
    pub stop: f64,
    pub points: usize,
    pub abs_threshold: f64,
    pub failed_points: usize,
    pub zero_absorption_intervals: Vec<Interval>,
    pub re_n_extremum: Option<Extremum>,
    pub left_handed_intervals: Vec<Interval>,
}

impl Summary {
    pub fn new(result: &SweepResult, preset: Option<&str>) -> Self {
        let s = &result.spec;
        Self {
            preset: preset.map(str::to_owned),
            axis: s.axis,
            start: s.start,
            stop: s.stop,
            points: s.points,
            abs_threshold: s.abs_threshold,
            failed_points: result.failed_points(),
            zero_absorption_intervals: result.zero_absorption_intervals.clone(),
            re_n_extremum: result.re_n_extremum,
            left_handed_intervals: result.left_handed_intervals.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary is always serializable")
    }

    /// `kind,a,b` records: one per interval (`a`,`b` = ends) and one for the
    /// extremum (`a` = axis value, `b` = Re n).
    pub fn write_csv<W: Write>(&self, w: W) -> csv::Result<()> {
        let mut wtr = csv::Writer::from_writer(w);
        wtr.write_record(["kind", "a", "b"])?;
        for iv in &self.zero_absorption_intervals {
            wtr.write_record(["zero_absorption", &format_f64(iv.lo), &format_f64(iv.hi)])?;
        }
        for iv in &self.left_handed_intervals {
            wtr.write_record(["left_handed", &format_f64(iv.lo), &format_f64(iv.hi)])?;
        }
        if let Some(e) = &self.re_n_extremum {
            wtr.write_record([
                "re_n_extremum",
                &format_f64(e.axis_value),
                &format_f64(e.re_n),
            ])?;
        }
        wtr.flush()?;
        Ok(())
    }
}

/// Paths written by [`emit`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Emitted {
    pub table: PathBuf,
    pub summary: PathBuf,
}

/// `<dir>/<stem>.summary.<ext>` next to the table.
pub fn summary_path(table: &Path, format: OutputFormat) -> PathBuf {
    let stem = table
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "sweep".into());
    table.with_file_name(format!("{stem}.summary.{}", format.extension()))
}

/// Writes the table to `config.out` and the summary beside it.
pub fn emit(result: &SweepResult, config: &RunConfig) -> Result<Emitted> {
    let summary = Summary::new(result, config.preset.as_deref());
    let summary_file = summary_path(&config.out, config.format);

    write_atomic(&config.out, |f| {
        write_table(result, config.emit_populations, f).map_err(csv_to_io)
    })?;
    write_atomic(&summary_file, |f| match config.format {
        OutputFormat::Json => writeln!(f, "{}", summary.to_json()),
        OutputFormat::Csv => summary.write_csv(f).map_err(csv_to_io),
    })?;

    Ok(Emitted {
        table: config.out.clone(),
        summary: summary_file,
    })
}

fn csv_to_io(e: csv::Error) -> std::io::Error {
    std::io::Error::other(e)
}

fn write_atomic(
    path: &Path,
    body: impl FnOnce(&mut std::fs::File) -> std::io::Result<()>,
) -> Result<()> {
    let io_err = |e: std::io::Error| Error::IoFailure {
        path: path.to_owned(),
        message: e.to_string(),
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_err)?;
    body(tmp.as_file_mut()).map_err(io_err)?;
    tmp.as_file().sync_all().map_err(io_err)?;
    tmp.persist(path).map_err(|e| io_err(e.error))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_significant_digits() {
        for x in [0.1, -1.0 / 3.0, 6.02214076e23, 5e-324, -0.0, 1.0] {
            let s = format_f64(x);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back.to_bits(), x.to_bits(), "{s}");
        }
        assert_eq!(format_f64(0.1), "1.0000000000000001e-1");
    }

    #[test]
    fn summary_path_sits_next_to_table() {
        assert_eq!(
            summary_path(Path::new("out/fig2.csv"), OutputFormat::Json),
            PathBuf::from("out/fig2.summary.json")
        );
        assert_eq!(
            summary_path(Path::new("run.csv"), OutputFormat::Csv),
            PathBuf::from("run.summary.csv")
        );
    }

    #[test]
    fn header_layout() {
        let h = header(SweepAxis::DeltaP, true);
        assert_eq!(h[0], "delta_p_over_gamma");
        assert_eq!(h[13], "status");
        assert_eq!(h.len(), 18);
        assert_eq!(h[17], "rho44");
    }
}
