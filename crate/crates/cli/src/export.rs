//! `export`: triangulated grid mesh in Wavefront OBJ text format.
//!
//! Vertices are written row-major with the per-vertex causal class encoded
//! through the common vertex-color extension (`v x y z r g b`): blue
//! space-like, red time-like, green degenerate. Faces are two triangles per
//! grid cell with a fixed diagonal, 1-based indices, vertices before faces.
//! Output is byte-deterministic for a fixed configuration.
//!
//! Surfaces in a 4-dimensional ambient need `--project I` naming the
//! coordinate to drop.

use std::io::Write;

use anyhow::{anyhow, Context};
use mixedtype::curvature::{curvature_point, MetricType};
use mixedtype::jets::ParamPoint;
use rayon::prelude::*;

use crate::fmtnum::sig9;
use crate::opts::{check_format, runtime, usage, CliError, ExportArgs, Outcome};
use crate::surface::resolve_surface;

pub fn run(args: ExportArgs) -> Result<Outcome, CliError> {
    let opts = args.common.resolve()?;
    check_format(&opts.format, "obj")?;
    let resolved = resolve_surface(&opts)?;
    let surface = resolved.as_surface();
    let window = opts.window.unwrap_or_else(|| resolved.domain());
    let (nu, nv) = opts.res.unwrap_or((50, 50));
    let project = args.project.or(opts.project);

    let dim = surface.space().ambient_dim();
    let keep: Vec<usize> = match (dim, project) {
        (3, None) => vec![0, 1, 2],
        (3, Some(_)) => {
            return Err(usage(anyhow!("--project only applies to 4-dimensional ambients")))
        }
        (4, Some(drop)) if drop < 4 => (0..4).filter(|&i| i != drop).collect(),
        (4, Some(drop)) => {
            return Err(usage(anyhow!("--project {drop} is out of range (0..=3)")))
        }
        (4, None) => {
            return Err(usage(anyhow!(
                "surface `{}` lives in a 4-dimensional ambient; pass --project I to drop one coordinate",
                surface.name()
            )))
        }
        _ => unreachable!(),
    };

    let du = window.width() / (nu - 1) as f64;
    let dv = window.height() / (nv - 1) as f64;

    let vertex_rows: Result<Vec<String>, CliError> = (0..nv)
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
                let color = match cp.causal {
                    MetricType::Spacelike => "0 0 1",
                    MetricType::Timelike => "1 0 0",
                    MetricType::Degenerate => "0 1 0",
                };
                block.push_str(&format!(
                    "v {} {} {} {color}\n",
                    sig9(jet.pos[keep[0]]),
                    sig9(jet.pos[keep[1]]),
                    sig9(jet.pos[keep[2]]),
                ));
            }
            Ok(block)
        })
        .collect();

    let mut out = String::new();
    out.push_str(&format!(
        "# mixedtype export: surface={} window={}:{}:{}:{} res={}x{}\n",
        surface.name(),
        window.u0,
        window.u1,
        window.v0,
        window.v1,
        nu,
        nv
    ));
    out.push_str("# vertex colors encode the causal class: blue space-like, red time-like, green degenerate\n");
    for block in vertex_rows? {
        out.push_str(&block);
    }
    for j in 0..nv - 1 {
        for i in 0..nu - 1 {
            let a = j * nu + i + 1;
            let b = a + 1;
            let c = a + nu + 1;
            let d = a + nu;
            out.push_str(&format!("f {a} {b} {c}\n"));
            out.push_str(&format!("f {a} {c} {d}\n"));
        }
    }

    match &opts.out {
        Some(path) => std::fs::write(path, out)
            .with_context(|| format!("cannot write {}", path.display()))
            .map_err(runtime)?,
        None => {
            std::io::stdout().write_all(out.as_bytes()).map_err(runtime)?;
        }
    }
    Ok(Outcome::Success)
}
