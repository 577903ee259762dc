//! Resolution of `--surface` specs into evaluators.

use std::str::FromStr;
use std::sync::Arc;

use anyhow::{anyhow, Context};
use mixedtype::gallery::{make_surface, GalleryId, GallerySurface};
use mixedtype::jets::{GraphSurface, Rect, SurfaceDef};

use crate::expr::parse_graph_source;
use crate::opts::{usage, CliError, Resolved};

pub enum ResolvedSurface {
    Parametric(SurfaceDef),
    Graph(GraphSurface),
}

impl ResolvedSurface {
    pub fn as_surface(&self) -> SurfaceDef {
        match self {
            ResolvedSurface::Parametric(s) => s.clone(),
            ResolvedSurface::Graph(g) => g.to_surface(),
        }
    }

    pub fn domain(&self) -> Rect {
        match self {
            ResolvedSurface::Parametric(s) => s.domain(),
            ResolvedSurface::Graph(g) => g.domain(),
        }
    }
}

/// Resolve the surface spec: a gallery id or `graph:FILE` with an
/// expression in `x`, `y`.
pub fn resolve_surface(opts: &Resolved) -> Result<ResolvedSurface, CliError> {
    let spec = opts
        .surface
        .as_deref()
        .ok_or_else(|| usage(anyhow!("--surface is required (or `surface=` in the config)")))?;

    if let Some(path) = spec.strip_prefix("graph:") {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read graph file {path}"))
            .map_err(usage)?;
        let expr = parse_graph_source(&text)
            .with_context(|| format!("cannot parse graph file {path}"))
            .map_err(usage)?;
        let domain = opts.window.unwrap_or(Rect::new(-2.0, 2.0, -2.0, 2.0));
        let expr = Arc::new(expr);
        return Ok(ResolvedSurface::Graph(GraphSurface::from_fn(
            format!("graph:{path}"),
            domain,
            move |x, y| expr.eval(x, y),
        )));
    }

    let id = GalleryId::from_str(spec).map_err(usage)?;
    match make_surface(&id).map_err(usage)? {
        GallerySurface::Parametric(s) => Ok(ResolvedSurface::Parametric(s)),
        GallerySurface::Graph(g) => Ok(ResolvedSurface::Graph(g)),
    }
}
