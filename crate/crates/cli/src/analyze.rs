//! `analyze`: curvature fields over a parameter grid as CSV.
//!
//! Columns: `u, v, beta, alpha, H, causal` — the mean-curvature column is
//! left empty on degenerate points. Rows are evaluated in parallel per
//! grid row and written in deterministic order.

use std::io::Write;

use anyhow::{anyhow, Context};
use mixedtype::curvature::{curvature_point, MetricType};
use mixedtype::jets::ParamPoint;
use rayon::prelude::*;

use crate::fmtnum::sig9;
use crate::opts::{check_format, runtime, usage, AnalyzeArgs, CliError, Outcome};
use crate::surface::resolve_surface;

pub fn run(args: AnalyzeArgs) -> Result<Outcome, CliError> {
    let opts = args.common.resolve()?;
    check_format(&opts.format, "csv")?;
    let resolved = resolve_surface(&opts)?;
    let surface = resolved.as_surface();
    let window = opts.window.unwrap_or_else(|| resolved.domain());
    let (nu, nv) = opts.res.unwrap_or((100, 100));
    let degenerate_tol = opts.tol.get("degenerate").copied();

    let du = window.width() / (nu - 1) as f64;
    let dv = window.height() / (nv - 1) as f64;

    let rows: Result<Vec<String>, CliError> = (0..nv)
        .into_par_iter()
        .map(|j| {
            let v = window.v0 + j as f64 * dv;
            let mut block = String::new();
            for i in 0..nu {
                let u = window.u0 + i as f64 * du;
                let jet = surface
                    .jet(ParamPoint::new(u, v))
                    .map_err(|e| usage(anyhow!("{e} (is the window inside the domain?)")))?;
                let cp = curvature_point(surface.space(), &jet);
                let degenerate = match degenerate_tol {
                    Some(tol) => cp.fundamental.beta.abs() <= tol,
                    None => cp.causal == MetricType::Degenerate,
                };
                let h_column = match (degenerate, cp.mean_curvature) {
                    (false, Some(h)) => sig9(h),
                    _ => String::new(),
                };
                let causal = if degenerate { MetricType::Degenerate } else { cp.causal };
                block.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    sig9(u),
                    sig9(v),
                    sig9(cp.fundamental.beta),
                    sig9(cp.alpha),
                    h_column,
                    causal,
                ));
            }
            Ok(block)
        })
        .collect();

    let mut output = String::from("u,v,beta,alpha,H,causal\n");
    for block in rows? {
        output.push_str(&block);
    }

    match &opts.out {
        Some(path) => std::fs::write(path, output)
            .with_context(|| format!("cannot write {}", path.display()))
            .map_err(runtime)?,
        None => {
            std::io::stdout().write_all(output.as_bytes()).map_err(runtime)?;
        }
    }
    Ok(Outcome::Success)
}
