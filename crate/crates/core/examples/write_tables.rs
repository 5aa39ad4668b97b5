// Copyright 2026 The lhvapor Authors
// SPDX-License-Identifier: Apache-2.0

//! Writes the plot-ready table and summary for every preset into a directory,
//! the same files the `lhvapor` binary produces one preset at a time.
//!
//!     cargo run --release --example write_tables -- out/

use std::path::PathBuf;

use lhvapor::{emit, presets, run_sweep, OutputFormat, RunConfig};

fn main() -> lhvapor::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "tables".into()));
    std::fs::create_dir_all(&dir).map_err(|e| lhvapor::Error::IoFailure {
        path: dir.clone(),
        message: e.to_string(),
    })?;

    for preset in presets::all() {
        let config = RunConfig {
            preset: Some(preset.name.to_owned()),
            sweep: preset.sweep(),
            out: dir.join(format!("{}.csv", preset.name)),
            format: OutputFormat::Json,
            emit_populations: true,
        };
        let result = run_sweep(&config.sweep)?;
        let files = emit(&result, &config)?;
        println!(
            "{} -> {}, {}",
            preset.name,
            files.table.display(),
            files.summary.display()
        );
    }
    Ok(())
}
