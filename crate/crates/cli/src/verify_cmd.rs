//! `verify`: run the named verification suite and emit a JSON report.
//!
//! `--tol NAME=VALUE` replaces the pinned tolerance of every check whose
//! name starts with `NAME` (the pass flags are re-evaluated), which is also
//! the supported way to drive the exit-code contract from tests.

use std::io::Write;
use std::time::Instant;

use anyhow::{anyhow, Context};
use mixedtype::verify::{run_suite, suite_names, VerifyReport};
use serde_json::json;

use crate::opts::{check_format, runtime, usage, CliError, Outcome, VerifyArgs};

pub fn run(args: VerifyArgs) -> Result<Outcome, CliError> {
    let opts = args.common.resolve()?;
    check_format(&opts.format, "json")?;
    let suite = args
        .suite
        .clone()
        .or(opts.suite.clone())
        .ok_or_else(|| usage(anyhow!("verify needs a suite name or `all`")))?;

    let start = Instant::now();
    let mut reports: Vec<VerifyReport> = if suite == "all" {
        suite_names().iter().map(|name| run_suite(name).expect("known suite")).collect()
    } else {
        vec![run_suite(&suite).ok_or_else(|| {
            usage(anyhow!(
                "unknown suite `{suite}` (expected one of: {}, all)",
                suite_names().join(", ")
            ))
        })?]
    };

    for report in &mut reports {
        for check in &mut report.checks {
            for (name, value) in &opts.tol {
                if check.name.starts_with(name.as_str()) {
                    check.tolerance = *value;
                    check.pass = check.measured <= *value;
                }
            }
        }
        report.passed = report.checks.iter().all(|c| c.pass);
    }

    let passed = reports.iter().all(|r| r.passed);
    let body = json!({
        "suites": reports,
        "passed": passed,
        "wall_ms": start.elapsed().as_secs_f64() * 1e3,
    });
    let text = serde_json::to_string_pretty(&body).map_err(runtime)?;
    match &opts.out {
        Some(path) => std::fs::write(path, text + "\n")
            .with_context(|| format!("cannot write {}", path.display()))
            .map_err(runtime)?,
        None => {
            let mut stdout = std::io::stdout();
            stdout.write_all(text.as_bytes()).map_err(runtime)?;
            stdout.write_all(b"\n").map_err(runtime)?;
        }
    }

    if passed {
        Ok(Outcome::Success)
    } else {
        Ok(Outcome::VerificationFailure)
    }
}
