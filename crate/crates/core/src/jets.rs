//! Parametric surfaces as 2-jet evaluators.
//!
//! A surface is a map from a planar parameter domain into a space form. All
//! curvature computations consume the position together with its first and
//! second partial derivatives at a point — the [`Jet2`]. Closed-form
//! surfaces produce exact jets through [`crate::taylor`] arithmetic;
//! [`fd_jet`] is an independent central-difference oracle used to
//! cross-validate them.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::spaceform::{AmbientVector, SpaceForm};
use crate::taylor::Jet;

/// Point of the parameter domain.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct ParamPoint {
    pub u: f64,
    pub v: f64,
}

impl ParamPoint {
    pub const fn new(u: f64, v: f64) -> Self {
        ParamPoint { u, v }
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// Closed parameter rectangle `[u0, u1] × [v0, v1]`.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Rect {
    pub u0: f64,
    pub u1: f64,
    pub v0: f64,
    pub v1: f64,
}

impl Rect {
    pub const fn new(u0: f64, u1: f64, v0: f64, v1: f64) -> Self {
        Rect { u0, u1, v0, v1 }
    }

    pub fn contains(&self, p: ParamPoint) -> bool {
        p.u >= self.u0 && p.u <= self.u1 && p.v >= self.v0 && p.v <= self.v1
    }

    pub fn width(&self) -> f64 {
        self.u1 - self.u0
    }

    pub fn height(&self) -> f64 {
        self.v1 - self.v0
    }

    /// Shrink towards the center by `margin` on every side.
    pub fn inset(&self, margin: f64) -> Rect {
        Rect::new(self.u0 + margin, self.u1 - margin, self.v0 + margin, self.v1 - margin)
    }
}

/// Position and first/second partial derivatives of a surface at a
/// parameter point, in ambient coordinates. `fuv` is the single mixed
/// partial; symmetry of second derivatives is assumed throughout.
#[derive(Clone, Debug, PartialEq)]
pub struct Jet2 {
    pub pos: AmbientVector,
    pub fu: AmbientVector,
    pub fv: AmbientVector,
    pub fuu: AmbientVector,
    pub fuv: AmbientVector,
    pub fvv: AmbientVector,
}

impl Jet2 {
    /// Assemble from per-coordinate scalar jets (u ↦ x-slot, v ↦ y-slot).
    pub fn from_coords(coords: &[Jet]) -> Jet2 {
        let pick = |get: fn(&Jet) -> f64| {
            AmbientVector::from_slice(&coords.iter().map(get).collect::<Vec<_>>())
        };
        Jet2 {
            pos: pick(|j| j.val),
            fu: pick(|j| j.dx),
            fv: pick(|j| j.dy),
            fuu: pick(|j| j.dxx),
            fuv: pick(|j| j.dxy),
            fvv: pick(|j| j.dyy),
        }
    }

    pub fn dim(&self) -> usize {
        self.pos.dim()
    }

    pub fn is_finite(&self) -> bool {
        self.pos.is_finite()
            && self.fu.is_finite()
            && self.fv.is_finite()
            && self.fuu.is_finite()
            && self.fuv.is_finite()
            && self.fvv.is_finite()
    }
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum JetError {
    #[error("{surface}: {point} is outside the analytic domain")]
    OutsideDomain { surface: String, point: String },
    #[error("{surface}: evaluation at {point} produced a non-finite jet")]
    NonFinite { surface: String, point: String },
    #[error("finite-difference stencil leaves the domain at {point} (h = {h})")]
    StencilOutsideDomain { point: String, h: f64 },
}

type Evaluator = dyn Fn(ParamPoint) -> Result<Jet2, JetError> + Send + Sync;

/// A parametric surface: ambient space, exact 2-jet evaluator and an
/// advisory parameter rectangle for sampling and CLI defaults.
///
/// Evaluators are immutable and stateless; concurrent evaluation needs no
/// synchronization.
#[derive(Clone)]
pub struct SurfaceDef {
    space: SpaceForm,
    name: String,
    domain: Rect,
    eval: Arc<Evaluator>,
}

impl SurfaceDef {
    pub fn new(
        space: SpaceForm,
        name: impl Into<String>,
        domain: Rect,
        eval: Arc<Evaluator>,
    ) -> Self {
        SurfaceDef { space, name: name.into(), domain, eval }
    }

    pub fn space(&self) -> SpaceForm {
        self.space
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> Rect {
        self.domain
    }

    /// Exact analytic 2-jet at `p`.
    pub fn jet(&self, p: ParamPoint) -> Result<Jet2, JetError> {
        let jet = (self.eval)(p)?;
        if !jet.is_finite() {
            return Err(JetError::NonFinite { surface: self.name.clone(), point: p.to_string() });
        }
        Ok(jet)
    }

    /// Position only (used by the finite-difference oracle and exporters).
    pub fn position(&self, p: ParamPoint) -> Result<AmbientVector, JetError> {
        Ok(self.jet(p)?.pos)
    }
}

impl fmt::Debug for SurfaceDef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SurfaceDef")
            .field("space", &self.space)
            .field("name", &self.name)
            .field("domain", &self.domain)
            .finish()
    }
}

type ScalarEvaluator = dyn Fn(Jet, Jet) -> Jet + Send + Sync;

/// A graph surface `t = f(x, y)` in Minkowski 3-space, kept in scalar form
/// so that the type-change quantities (`B`, its gradient, the Hessian of
/// `f`) stay directly accessible.
#[derive(Clone)]
pub struct GraphSurface {
    name: String,
    domain: Rect,
    eval: Arc<ScalarEvaluator>,
}

impl GraphSurface {
    pub fn new(name: impl Into<String>, domain: Rect, eval: Arc<ScalarEvaluator>) -> Self {
        GraphSurface { name: name.into(), domain, eval }
    }

    /// Build from a plain closure on jets.
    pub fn from_fn<F>(name: impl Into<String>, domain: Rect, f: F) -> Self
    where
        F: Fn(Jet, Jet) -> Jet + Send + Sync + 'static,
    {
        GraphSurface::new(name, domain, Arc::new(f))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> Rect {
        self.domain
    }

    /// Scalar 2-jet `(f, f_x, f_y, f_xx, f_xy, f_yy)` at `p`.
    pub fn jet(&self, p: ParamPoint) -> Jet {
        (self.eval)(Jet::var_x(p.u), Jet::var_y(p.v))
    }

    pub fn value(&self, p: ParamPoint) -> f64 {
        self.jet(p).val
    }

    /// Realize the graph as a Minkowski surface `(x, y) ↦ (f(x,y), x, y)`.
    pub fn to_surface(&self) -> SurfaceDef {
        let eval = self.eval.clone();
        let name = self.name.clone();
        SurfaceDef::new(
            SpaceForm::Minkowski3,
            self.name.clone(),
            self.domain,
            Arc::new(move |p: ParamPoint| {
                let j = (eval)(Jet::var_x(p.u), Jet::var_y(p.v));
                if !j.is_finite() {
                    return Err(JetError::NonFinite {
                        surface: name.clone(),
                        point: p.to_string(),
                    });
                }
                Ok(graph_jet2(&j, p))
            }),
        )
    }
}

/// Surface jet of a graph `t = f(x, y)` assembled from the scalar jet:
/// `f_u = (f_x, 1, 0)`, `f_v = (f_y, 0, 1)`, second partials carry only the
/// `t`-component.
pub fn graph_jet2(j: &Jet, p: ParamPoint) -> Jet2 {
    Jet2 {
        pos: AmbientVector::mink(j.val, p.u, p.v),
        fu: AmbientVector::mink(j.dx, 1.0, 0.0),
        fv: AmbientVector::mink(j.dy, 0.0, 1.0),
        fuu: AmbientVector::mink(j.dxx, 0.0, 0.0),
        fuv: AmbientVector::mink(j.dxy, 0.0, 0.0),
        fvv: AmbientVector::mink(j.dyy, 0.0, 0.0),
    }
}

impl fmt::Debug for GraphSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GraphSurface")
            .field("name", &self.name)
            .field("domain", &self.domain)
            .finish()
    }
}

/// Central-difference 2-jet of a position-only map on a 9-point stencil,
/// truncation error `O(h²)`. Independent of the analytic jet path; used as
/// the cross-validation oracle.
pub fn fd_jet<F>(position: F, p: ParamPoint, h: f64) -> Result<Jet2, JetError>
where
    F: Fn(ParamPoint) -> Result<AmbientVector, JetError>,
{
    assert!(h > 0.0, "step must be positive");
    let at = |du: f64, dv: f64| position(ParamPoint::new(p.u + du, p.v + dv));
    let f00 = at(0.0, 0.0)?;
    let fp0 = at(h, 0.0)?;
    let fm0 = at(-h, 0.0)?;
    let f0p = at(0.0, h)?;
    let f0m = at(0.0, -h)?;
    let fpp = at(h, h)?;
    let fpm = at(h, -h)?;
    let fmp = at(-h, h)?;
    let fmm = at(-h, -h)?;

    let half = 0.5 / h;
    let sq = 1.0 / (h * h);
    let quarter = 0.25 * sq;

    Ok(Jet2 {
        fu: fp0.sub(&fm0).scale(half),
        fv: f0p.sub(&f0m).scale(half),
        fuu: fp0.add(&fm0).sub(&f00.scale(2.0)).scale(sq),
        fvv: f0p.add(&f0m).sub(&f00.scale(2.0)).scale(sq),
        fuv: fpp.sub(&fpm).sub(&fmp).add(&fmm).scale(quarter),
        pos: f00,
    })
}
