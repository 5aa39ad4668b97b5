// Copyright 2026 The lhvapor Authors
// SPDX-License-Identifier: Apache-2.0

use std::process::ExitCode;

use lhvapor::{emit, parse_config, run_sweep, ConfigError, Error};

fn main() -> ExitCode {
    let config = match parse_config(std::env::args_os(), None) {
        Ok(c) => c,
        Err(Error::Config(ConfigError::Help(text))) => {
            print!("{text}");
            return ExitCode::SUCCESS;
        }
        Err(Error::Config(ConfigError::Usage(msg))) => {
            eprint!("{msg}");
            return ExitCode::from(2);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };

    let result = match run_sweep(&config.sweep) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    };

    match emit(&result, &config) {
        Ok(files) => {
            eprintln!(
                "wrote {} ({} points, {} failed) and {}",
                files.table.display(),
                result.rows.len(),
                result.failed_points(),
                files.summary.display()
            );
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
