//! `trace`: type-change curves of a graph surface.
//!
//! Writes one `*_curveN.csv` (`s, u, v, B, class`) and one
//! `*_ambientN.csv` (`s, t, x, y`) per traced curve, plus a JSON summary
//! with the null-curve diagnostics (and the extended mean-curvature vector
//! statistics where the vector extends). Exits non-zero when a traced
//! vertex is degenerate.

use std::io::Write;

use anyhow::{anyhow, Context};
use mixedtype::curvature::{extended_mean_curvature_vector, graph_ab};
use mixedtype::spaceform::SpaceForm;
use mixedtype::tolerances;
use mixedtype::typechange::{
    null_curve_check, trace_graph_zero_set, traced_curve_sampler, TypeChangeKind,
};
use serde_json::json;

use crate::fmtnum::sig9;
use crate::opts::{check_format, runtime, usage, CliError, Outcome, TraceArgs};
use crate::surface::{resolve_surface, ResolvedSurface};

pub fn run(args: TraceArgs) -> Result<Outcome, CliError> {
    let opts = args.common.resolve()?;
    check_format(&opts.format, "csv")?;
    let resolved = resolve_surface(&opts)?;
    let graph = match &resolved {
        ResolvedSurface::Graph(g) => g.clone(),
        ResolvedSurface::Parametric(s) => {
            return Err(usage(anyhow!(
                "trace needs a graph surface (fK, construction, graph:FILE); `{}` is parametric",
                s.name()
            )))
        }
    };
    let window = opts.window.unwrap_or_else(|| graph.domain());
    let resolution = opts.res.map(|(n, _)| n).unwrap_or(200);
    if resolution < 8 {
        return Err(usage(anyhow!("trace needs --res of at least 8")));
    }
    let prefix = opts
        .out
        .as_ref()
        .ok_or_else(|| usage(anyhow!("trace needs --out as a path prefix")))?;

    let curves = trace_graph_zero_set(&graph, window, resolution);
    let space = SpaceForm::Minkowski3;
    let mut any_degenerate = false;
    let mut summaries = Vec::new();

    for (k, curve) in curves.iter().enumerate() {
        let s_params = curve.arc_params();

        let mut curve_csv = String::from("s,u,v,B,class\n");
        for ((p, class), s) in curve.vertices.iter().zip(&curve.classes).zip(&s_params) {
            let b = graph_ab(&graph.jet(*p)).b;
            if class.kind == TypeChangeKind::Degenerate {
                any_degenerate = true;
            }
            curve_csv.push_str(&format!(
                "{},{},{},{},{}\n",
                sig9(*s),
                sig9(p.u),
                sig9(p.v),
                sig9(b),
                class.kind
            ));
        }
        let curve_path = format!("{}_curve{k}.csv", prefix.display());
        std::fs::write(&curve_path, curve_csv)
            .with_context(|| format!("cannot write {curve_path}"))
            .map_err(runtime)?;

        let mut ambient_csv = String::from("s,t,x,y\n");
        let ambient = curve.ambient.as_ref().expect("graph traces carry ambient images");
        for (pos, s) in ambient.iter().zip(&s_params) {
            ambient_csv.push_str(&format!(
                "{},{},{},{}\n",
                sig9(*s),
                sig9(pos[0]),
                sig9(pos[1]),
                sig9(pos[2])
            ));
        }
        let ambient_path = format!("{}_ambient{k}.csv", prefix.display());
        std::fs::write(&ambient_path, ambient_csv)
            .with_context(|| format!("cannot write {ambient_path}"))
            .map_err(runtime)?;

        let null_report = traced_curve_sampler(&graph, curve)
            .map(|(sampler, interval)| null_curve_check(sampler, interval, 101));

        // extended mean-curvature vector statistics along the curve, where
        // the vector field extends
        let mut extended = 0usize;
        let mut min_norm = f64::INFINITY;
        let mut worst_lightlike = 0.0f64;
        for p in &curve.vertices {
            if let Ok(v) = extended_mean_curvature_vector(&graph, *p, tolerances::TYPECHANGE_B) {
                extended += 1;
                let n2 = v.dot_euclid(&v);
                if n2 > 0.0 {
                    min_norm = min_norm.min(n2.sqrt());
                    worst_lightlike = worst_lightlike.max(space.inner(&v, &v).abs() / n2);
                }
            }
        }

        summaries.push(json!({
            "curve": k,
            "vertices": curve.vertices.len(),
            "closed": curve.closed,
            "files": { "curve": curve_path, "ambient": ambient_path },
            "null_check": null_report,
            "extended_vector": {
                "extends_at": extended,
                "min_euclidean_norm": if min_norm.is_finite() { Some(min_norm) } else { None },
                "max_lightlike_rel": worst_lightlike,
            },
        }));
    }

    let report = json!({
        "surface": graph.name(),
        "window": [window.u0, window.u1, window.v0, window.v1],
        "resolution": resolution,
        "curves": summaries,
        "degenerate_vertices": any_degenerate,
    });
    let mut stdout = std::io::stdout();
    serde_json::to_writer_pretty(&mut stdout, &report).map_err(runtime)?;
    stdout.write_all(b"\n").map_err(runtime)?;

    if any_degenerate {
        Ok(Outcome::VerificationFailure)
    } else {
        Ok(Outcome::Success)
    }
}
