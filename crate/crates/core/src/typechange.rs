//! Type-change sets: tracing, classification and limit diagnostics.
//!
//! The zero set of the metric discriminant `B` of a graph surface is traced
//! by marching squares with a Newton corrector along `∇B`, producing
//! polylines whose vertices sit on `{B = 0}` to corrector tolerance. A
//! non-degenerate point of type change has `B = 0` and `∇B ≠ 0`; under
//! bounded mean curvature this is equivalent to `det Hess f ≠ 0`, and the
//! image of the traced curve is a non-degenerate null curve — both facts are
//! checked numerically here rather than assumed.
//!
//! The remaining tools serve the bounded-mean-curvature limit argument:
//! vanishing orders of `β` and `α` along a curve crossing the type-change
//! set (log–log fits over a geometric offset ladder), truncated Fourier
//! reconstruction of curves, and the assembled report showing `m` odd,
//! `2ℓ > 3m` and `|H| ~ |s − s_j|^{ℓ−3m/2} → 0`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::curvature::graph_ab;
use crate::jets::{GraphSurface, ParamPoint, Rect};
use crate::spaceform::{AmbientVector, SpaceForm};
use crate::taylor::Jet;
use crate::tolerances;

/// Value and gradient of a scalar field on the parameter domain.
#[derive(Copy, Clone, Debug)]
pub struct FieldJet {
    pub value: f64,
    pub grad: [f64; 2],
}

/// Classification of a parameter point with respect to the type-change set.
#[derive(Copy, Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub enum TypeChangeKind {
    /// `B = 0`, `∇B ≠ 0`.
    Nondegenerate,
    /// `B = 0`, `∇B = 0`.
    Degenerate,
    /// `B ≠ 0`.
    NotTypeChange,
}

impl std::fmt::Display for TypeChangeKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TypeChangeKind::Nondegenerate => write!(f, "nondegenerate"),
            TypeChangeKind::Degenerate => write!(f, "degenerate"),
            TypeChangeKind::NotTypeChange => write!(f, "not_type_change"),
        }
    }
}

/// Per-point type-change data. `hessian_det` is present for graph surfaces,
/// where the dual-regularity cross-check `det Hess f ≠ 0` applies; bare
/// scalar fields carry only the gradient.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct TypeChangeClass {
    pub kind: TypeChangeKind,
    pub grad_b: [f64; 2],
    pub hessian_det: Option<f64>,
}

/// Polyline on `{B = 0}` with per-vertex classification; graph surfaces
/// also carry the ambient image of each vertex.
#[derive(Clone, Debug)]
pub struct CharacteristicCurve {
    pub vertices: Vec<ParamPoint>,
    pub classes: Vec<TypeChangeClass>,
    pub ambient: Option<Vec<AmbientVector>>,
    pub closed: bool,
}

impl CharacteristicCurve {
    /// Cumulative chord-length parameter of the vertices.
    pub fn arc_params(&self) -> Vec<f64> {
        let mut s = Vec::with_capacity(self.vertices.len());
        let mut acc = 0.0;
        s.push(0.0);
        for w in self.vertices.windows(2) {
            acc += ((w[1].u - w[0].u).powi(2) + (w[1].v - w[0].v).powi(2)).sqrt();
            s.push(acc);
        }
        s
    }
}

/// Verdict of a null-curve diagnostic.
#[derive(Copy, Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub enum NullVerdict {
    NullNondegenerate,
    NullDegenerate,
    NotNull,
}

/// Worst-case diagnostics of a curve in Minkowski 3-space: how light-like
/// the velocity is, and how independent velocity and acceleration are
/// (smallest singular value of the row-normalized derivative matrix).
#[derive(Copy, Clone, Debug, serde::Serialize)]
pub struct NullCurveReport {
    pub max_null_residual: f64,
    pub min_independence: f64,
    pub verdict: NullVerdict,
}

/// Position with first and second derivatives of a curve at a parameter.
#[derive(Clone, Debug)]
pub struct CurveSample {
    pub pos: AmbientVector,
    pub vel: AmbientVector,
    pub acc: AmbientVector,
}

/// Fitted vanishing order of a scalar function near a zero.
#[derive(Copy, Clone, Debug, serde::Serialize)]
pub struct OrderEstimate {
    pub order: u32,
    pub leading_coeff: f64,
    pub fit_residual: f64,
    pub identically_zero: bool,
}

/// Truncated Fourier series of a closed parameter curve, period 2π.
#[derive(Clone, Debug)]
pub struct FourierCurve {
    pub mean: [f64; 2],
    /// `(u_k, v_k)` pairs per coordinate: `coeffs[k−1] = [[u_k, v_k]; 2]`.
    pub cos_coeffs: Vec<[f64; 2]>,
    pub sin_coeffs: Vec<[f64; 2]>,
}

impl FourierCurve {
    pub fn eval(&self, s: f64) -> ParamPoint {
        let mut out = self.mean;
        for (k, (c, d)) in self.cos_coeffs.iter().zip(&self.sin_coeffs).enumerate() {
            let ks = (k + 1) as f64 * s;
            let (sin, cos) = ks.sin_cos();
            for i in 0..2 {
                out[i] += c[i] * cos + d[i] * sin;
            }
        }
        ParamPoint::new(out[0], out[1])
    }

    pub fn harmonics(&self) -> usize {
        self.cos_coeffs.len()
    }
}

/// Report of the bounded-mean-curvature limit check along a curve crossing
/// the type-change set at `s_j`.
#[derive(Clone, Debug, serde::Serialize)]
pub struct MeanCurvatureLimitReport {
    pub s_j: f64,
    /// Vanishing order `m` of `β̂(s) = β(γ(s))`.
    pub beta_order: OrderEstimate,
    /// Vanishing order `ℓ` of `α̂(s) = α(γ(s))`; `identically_zero` on
    /// zero-mean-curvature surfaces.
    pub alpha_order: OrderEstimate,
    pub m_odd: bool,
    /// `2ℓ > 3m` (trivially satisfied when `α̂ ≡ 0`).
    pub inequality_2l_gt_3m: bool,
    /// Fitted slope of `log|H|` against `log|s − s_j|`, per side of the
    /// crossing; `None` when `H ≡ 0`.
    pub decay_exponent: Option<(f64, f64)>,
    /// `ℓ − 3m/2` from the fitted orders.
    pub expected_exponent: Option<f64>,
    /// Largest `|H|` sampled within parameter distance 1e−4 of `s_j`.
    pub h_max_near_sigma: f64,
    pub h_tends_to_zero: bool,
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum TraceError {
    #[error("samples are not uniform over [0, 2π)")]
    NonUniformSamples,
    #[error("truncation order {n} needs more than {m} samples")]
    TruncationOrder { n: usize, m: usize },
    #[error("vanishing-order fit failed: {0}")]
    OrderFit(String),
    #[error("β does not change sign across s_j = {s_j}")]
    NoSignChange { s_j: f64 },
}

/// Classify a parameter point of a graph surface from its scalar jet.
pub fn classify_point(jet: &Jet) -> TypeChangeClass {
    let ab = graph_ab(jet);
    let grad_norm = (ab.grad_b[0].powi(2) + ab.grad_b[1].powi(2)).sqrt();
    let kind = if ab.b.abs() > tolerances::TYPECHANGE_B {
        TypeChangeKind::NotTypeChange
    } else if grad_norm > tolerances::NONDEGENERATE_GRAD {
        TypeChangeKind::Nondegenerate
    } else {
        TypeChangeKind::Degenerate
    };
    TypeChangeClass { kind, grad_b: ab.grad_b, hessian_det: Some(ab.hessian_det) }
}

fn classify_field(fj: &FieldJet) -> TypeChangeClass {
    let grad_norm = (fj.grad[0].powi(2) + fj.grad[1].powi(2)).sqrt();
    let kind = if fj.value.abs() > tolerances::TYPECHANGE_B {
        TypeChangeKind::NotTypeChange
    } else if grad_norm > tolerances::NONDEGENERATE_GRAD {
        TypeChangeKind::Nondegenerate
    } else {
        TypeChangeKind::Degenerate
    };
    TypeChangeClass { kind, grad_b: fj.grad, hessian_det: None }
}

/// Grid edge identifier: orientation (0 horizontal, 1 vertical) and the
/// lower-left node. Ordered so that all bookkeeping is deterministic.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct EdgeKey {
    orient: u8,
    i: usize,
    j: usize,
}

/// Newton corrector along the field gradient.
fn newton_correct<F>(field: &F, mut p: ParamPoint) -> (ParamPoint, FieldJet)
where
    F: Fn(ParamPoint) -> FieldJet,
{
    let mut fj = field(p);
    for _ in 0..30 {
        if fj.value.abs() <= tolerances::CORRECTOR_B {
            break;
        }
        let g2 = fj.grad[0] * fj.grad[0] + fj.grad[1] * fj.grad[1];
        if g2 < 1e-24 {
            break;
        }
        p = ParamPoint::new(
            p.u - fj.value * fj.grad[0] / g2,
            p.v - fj.value * fj.grad[1] / g2,
        );
        fj = field(p);
    }
    (p, fj)
}

/// Trace the zero set of a scalar field over a window.
///
/// Marching squares on a `resolution × resolution` node grid seeds the cell
/// crossings by linear interpolation; every vertex is then Newton-corrected
/// along the gradient and classified. Chains are assembled across shared
/// cell edges; saddle cells are resolved by a center sample. A field
/// without sign changes yields an empty list.
pub fn trace_zero_set<F>(field: &F, window: Rect, resolution: usize) -> Vec<CharacteristicCurve>
where
    F: Fn(ParamPoint) -> FieldJet,
{
    assert!(resolution >= 8, "tracing needs a grid of at least 8×8 nodes");
    let n = resolution;
    let du = window.width() / (n - 1) as f64;
    let dv = window.height() / (n - 1) as f64;
    let node = |i: usize, j: usize| {
        ParamPoint::new(window.u0 + i as f64 * du, window.v0 + j as f64 * dv)
    };

    let mut values = vec![0.0f64; n * n];
    for j in 0..n {
        for i in 0..n {
            values[j * n + i] = field(node(i, j)).value;
        }
    }
    let pos = |i: usize, j: usize| values[j * n + i] >= 0.0;

    // crossing point on an edge, computed once per edge
    let mut edge_points: BTreeMap<EdgeKey, usize> = BTreeMap::new();
    let mut points: Vec<ParamPoint> = Vec::new();
    let mut segments: Vec<(usize, usize)> = Vec::new();

    let mut point_of_edge = |key: EdgeKey, points: &mut Vec<ParamPoint>| -> usize {
        if let Some(&idx) = edge_points.get(&key) {
            return idx;
        }
        let (pa, pb) = match key.orient {
            0 => (node(key.i, key.j), node(key.i + 1, key.j)),
            _ => (node(key.i, key.j), node(key.i, key.j + 1)),
        };
        let (va, vb) = match key.orient {
            0 => (values[key.j * n + key.i], values[key.j * n + key.i + 1]),
            _ => (values[key.j * n + key.i], values[(key.j + 1) * n + key.i]),
        };
        let t = if va == vb { 0.5 } else { va / (va - vb) };
        let p = ParamPoint::new(pa.u + t * (pb.u - pa.u), pa.v + t * (pb.v - pa.v));
        let idx = points.len();
        points.push(p);
        edge_points.insert(key, idx);
        idx
    };

    for j in 0..n - 1 {
        for i in 0..n - 1 {
            let idx = (pos(i, j) as u8)
                | ((pos(i + 1, j) as u8) << 1)
                | ((pos(i + 1, j + 1) as u8) << 2)
                | ((pos(i, j + 1) as u8) << 3);
            if idx == 0 || idx == 15 {
                continue;
            }
            let bottom = EdgeKey { orient: 0, i, j };
            let top = EdgeKey { orient: 0, i, j: j + 1 };
            let left = EdgeKey { orient: 1, i, j };
            let right = EdgeKey { orient: 1, i: i + 1, j };
            let mut emit = |a: EdgeKey, b: EdgeKey, points: &mut Vec<ParamPoint>| {
                let pa = point_of_edge(a, points);
                let pb = point_of_edge(b, points);
                if pa != pb {
                    segments.push((pa, pb));
                }
            };
            match idx {
                1 => emit(left, bottom, &mut points),
                2 => emit(bottom, right, &mut points),
                3 => emit(left, right, &mut points),
                4 => emit(right, top, &mut points),
                6 => emit(bottom, top, &mut points),
                7 => emit(left, top, &mut points),
                8 => emit(top, left, &mut points),
                9 => emit(bottom, top, &mut points),
                11 => emit(right, top, &mut points),
                12 => emit(right, left, &mut points),
                13 => emit(bottom, right, &mut points),
                14 => emit(left, bottom, &mut points),
                5 | 10 => {
                    // saddle: disambiguate with a center sample
                    let center = field(ParamPoint::new(
                        window.u0 + (i as f64 + 0.5) * du,
                        window.v0 + (j as f64 + 0.5) * dv,
                    ))
                    .value
                        >= 0.0;
                    let diag_pos = idx == 5; // corners a, c positive
                    if diag_pos == center {
                        emit(left, top, &mut points);
                        emit(bottom, right, &mut points);
                    } else {
                        emit(left, bottom, &mut points);
                        emit(right, top, &mut points);
                    }
                }
                _ => unreachable!(),
            }
        }
    }

    // chain segments into polylines across shared crossing points
    let mut adjacency: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (si, &(a, b)) in segments.iter().enumerate() {
        adjacency.entry(a).or_default().push(si);
        adjacency.entry(b).or_default().push(si);
    }
    let mut seg_used = vec![false; segments.len()];
    let mut chains: Vec<(Vec<usize>, bool)> = Vec::new();

    let walk = |start: usize, seg_used: &mut Vec<bool>| -> Vec<usize> {
        let mut chain = vec![start];
        let mut here = start;
        while let Some(next_seg) =
            adjacency[&here].iter().copied().find(|&s| !seg_used[s])
        {
            seg_used[next_seg] = true;
            let (a, b) = segments[next_seg];
            here = if a == here { b } else { a };
            chain.push(here);
        }
        chain
    };

    let endpoints: Vec<usize> = adjacency
        .iter()
        .filter(|(_, segs)| segs.len() == 1)
        .map(|(&p, _)| p)
        .collect();
    for start in endpoints {
        if adjacency[&start].iter().all(|&s| seg_used[s]) {
            continue;
        }
        chains.push((walk(start, &mut seg_used), false));
    }
    // leftover segments belong to closed loops
    for si in 0..segments.len() {
        if !seg_used[si] {
            let start = segments[si].0;
            let chain = walk(start, &mut seg_used);
            let closed = chain.len() > 2 && chain.first() == chain.last();
            chains.push((chain, closed));
        }
    }

    let min_sep = 1e-9 * du.hypot(dv);
    chains
        .into_iter()
        .filter(|(chain, _)| chain.len() >= 2)
        .map(|(chain, closed)| {
            let mut vertices = Vec::with_capacity(chain.len());
            let mut classes = Vec::with_capacity(chain.len());
            for &pi in &chain {
                let (p, fj) = newton_correct(field, points[pi]);
                if let Some(prev) = vertices.last() {
                    let prev: &ParamPoint = prev;
                    if (p.u - prev.u).hypot(p.v - prev.v) < min_sep {
                        continue;
                    }
                }
                vertices.push(p);
                classes.push(classify_field(&fj));
            }
            CharacteristicCurve { vertices, classes, ambient: None, closed }
        })
        .filter(|c| c.vertices.len() >= 2)
        .collect()
}

/// Trace the type-change set `{B = 0}` of a graph surface.
///
/// Vertices are classified from the full scalar jet (so the Hessian
/// cross-check is available) and the ambient image `(f(x,y), x, y)` is
/// attached.
pub fn trace_graph_zero_set(
    graph: &GraphSurface,
    window: Rect,
    resolution: usize,
) -> Vec<CharacteristicCurve> {
    let field = |p: ParamPoint| {
        let ab = graph_ab(&graph.jet(p));
        FieldJet { value: ab.b, grad: ab.grad_b }
    };
    let mut curves = trace_zero_set(&field, window, resolution);
    for curve in &mut curves {
        for (vertex, class) in curve.vertices.iter().zip(curve.classes.iter_mut()) {
            *class = classify_point(&graph.jet(*vertex));
        }
        curve.ambient = Some(
            curve
                .vertices
                .iter()
                .map(|p| AmbientVector::mink(graph.value(*p), p.u, p.v))
                .collect(),
        );
    }
    curves
}

/// Wrap a position-only curve into a [`CurveSample`] source using 5-point
/// (fourth-order) central differences for both derivatives.
pub fn curve_from_position<F>(pos: F, h: f64) -> impl Fn(f64) -> CurveSample
where
    F: Fn(f64) -> AmbientVector,
{
    move |t: f64| {
        let p2 = pos(t + 2.0 * h);
        let p1 = pos(t + h);
        let p0 = pos(t);
        let m1 = pos(t - h);
        let m2 = pos(t - 2.0 * h);
        let vel = p2
            .scale(-1.0)
            .add(&p1.scale(8.0))
            .sub(&m1.scale(8.0))
            .add(&m2)
            .scale(1.0 / (12.0 * h));
        let acc = p2
            .scale(-1.0)
            .add(&p1.scale(16.0))
            .sub(&p0.scale(30.0))
            .add(&m1.scale(16.0))
            .sub(&m2)
            .scale(1.0 / (12.0 * h * h));
        CurveSample { pos: p0, vel, acc }
    }
}

/// Null-curve diagnostics of a curve in Minkowski 3-space.
///
/// Evaluates `⟨Γ′, Γ′⟩` and the velocity/acceleration independence measure
/// at `samples` points of the interval. The independence measure is the
/// smallest singular value of the 2×3 matrix with rows `Γ′/|Γ′|`,
/// `Γ″/|Γ″|`, i.e. `√(1 − |cos θ|)` for the angle between them; a vanishing
/// acceleration scores zero.
pub fn null_curve_check<F>(curve: F, interval: (f64, f64), samples: usize) -> NullCurveReport
where
    F: Fn(f64) -> CurveSample,
{
    assert!(samples >= 2, "need at least two samples");
    let space = SpaceForm::Minkowski3;
    let (a, b) = interval;
    let mut max_null: f64 = 0.0;
    let mut min_indep = f64::INFINITY;
    for k in 0..samples {
        let t = a + (b - a) * k as f64 / (samples - 1) as f64;
        let s = curve(t);
        max_null = max_null.max(space.inner(&s.vel, &s.vel).abs());
        let vn = s.vel.norm_euclid();
        let an = s.acc.norm_euclid();
        let indep = if an <= 1e-9 * (1.0 + vn) {
            0.0
        } else {
            let cos = (s.vel.dot_euclid(&s.acc) / (vn * an)).clamp(-1.0, 1.0);
            (1.0 - cos.abs()).max(0.0).sqrt()
        };
        min_indep = min_indep.min(indep);
    }
    let verdict = if max_null < tolerances::NULL_RESIDUAL {
        if min_indep > tolerances::INDEPENDENCE_MIN {
            NullVerdict::NullNondegenerate
        } else {
            NullVerdict::NullDegenerate
        }
    } else {
        NullVerdict::NotNull
    };
    NullCurveReport { max_null_residual: max_null, min_independence: min_indep, verdict }
}

/// Reparameterize a traced type-change curve of a graph surface as a smooth
/// ambient curve.
///
/// The polyline must be strictly monotone in one parameter coordinate; that
/// coordinate becomes the curve parameter. Positions are recovered by a
/// Newton solve of `B = 0` in the other coordinate (seeded from the
/// polyline), velocities by implicit differentiation of `B = 0`, and
/// accelerations by differencing the analytic velocity. Returns the sampler
/// together with a slightly inset parameter interval, or `None` when no
/// coordinate is monotone.
pub fn traced_curve_sampler<'a>(
    graph: &'a GraphSurface,
    curve: &CharacteristicCurve,
) -> Option<(impl Fn(f64) -> CurveSample + 'a, (f64, f64))> {
    let vs = &curve.vertices;
    if vs.len() < 3 {
        return None;
    }
    let monotone = |get: fn(&ParamPoint) -> f64| {
        vs.windows(2).all(|w| get(&w[1]) > get(&w[0]))
            || vs.windows(2).all(|w| get(&w[1]) < get(&w[0]))
    };
    let param_is_v = if monotone(|p| p.v) {
        true
    } else if monotone(|p| p.u) {
        false
    } else {
        return None;
    };

    // knots sorted by the parameter coordinate
    let mut knots: Vec<(f64, f64)> = vs
        .iter()
        .map(|p| if param_is_v { (p.v, p.u) } else { (p.u, p.v) })
        .collect();
    knots.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());

    let seed_other = move |knots: &[(f64, f64)], t: f64| -> f64 {
        match knots.binary_search_by(|k| k.0.partial_cmp(&t).unwrap()) {
            Ok(i) => knots[i].1,
            Err(0) => knots[0].1,
            Err(i) if i >= knots.len() => knots[knots.len() - 1].1,
            Err(i) => {
                let (t0, x0) = knots[i - 1];
                let (t1, x1) = knots[i];
                x0 + (x1 - x0) * (t - t0) / (t1 - t0)
            }
        }
    };

    let span = knots[knots.len() - 1].0 - knots[0].0;
    let inset = 0.02 * span;
    let interval = (knots[0].0 + inset, knots[knots.len() - 1].0 - inset);

    let solve = move |t: f64| -> (ParamPoint, Jet) {
        let mut other = seed_other(&knots, t);
        let point = |o: f64| if param_is_v { ParamPoint::new(o, t) } else { ParamPoint::new(t, o) };
        let mut jet = graph.jet(point(other));
        for _ in 0..60 {
            let ab = graph_ab(&jet);
            let slope = if param_is_v { ab.grad_b[0] } else { ab.grad_b[1] };
            if ab.b.abs() <= 1e-15 || slope.abs() < 1e-14 {
                break;
            }
            other -= ab.b / slope;
            jet = graph.jet(point(other));
        }
        (point(other), jet)
    };

    let pos_vel = move |t: f64| -> (AmbientVector, AmbientVector) {
        let (p, jet) = solve(t);
        let ab = graph_ab(&jet);
        let pos = AmbientVector::mink(jet.val, p.u, p.v);
        let vel = if param_is_v {
            // x′(y) = −B_y/B_x on {B = 0}
            let xp = -ab.grad_b[1] / ab.grad_b[0];
            AmbientVector::mink(jet.dx * xp + jet.dy, xp, 1.0)
        } else {
            let yp = -ab.grad_b[0] / ab.grad_b[1];
            AmbientVector::mink(jet.dx + jet.dy * yp, 1.0, yp)
        };
        (pos, vel)
    };

    let h = (1e-3 * span).clamp(1e-6, 1e-3);
    let sampler = move |t: f64| -> CurveSample {
        let (pos, vel) = pos_vel(t);
        let v2 = pos_vel(t + 2.0 * h).1;
        let v1 = pos_vel(t + h).1;
        let m1 = pos_vel(t - h).1;
        let m2 = pos_vel(t - 2.0 * h).1;
        let acc = v2
            .scale(-1.0)
            .add(&v1.scale(8.0))
            .sub(&m1.scale(8.0))
            .add(&m2)
            .scale(1.0 / (12.0 * h));
        CurveSample { pos, vel, acc }
    };
    Some((sampler, interval))
}

/// Locate a sign change of `f` in `[a, b]` by bisection; `None` when the
/// endpoint signs agree.
pub fn bisect_sign_change<F: Fn(f64) -> f64>(f: F, a: f64, b: f64) -> Option<f64> {
    let (mut lo, mut hi) = (a, b);
    let (mut flo, fhi) = (f(lo), f(hi));
    if flo == 0.0 {
        return Some(lo);
    }
    if fhi == 0.0 {
        return Some(hi);
    }
    if flo.signum() == fhi.signum() {
        return None;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 || (hi - lo).abs() < f64::EPSILON * (1.0 + mid.abs()) {
            return Some(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

/// Least-squares line through `(x_i, y_i)`; returns (slope, intercept,
/// RMS residual).
fn fit_line(xs: &[f64], ys: &[f64]) -> (f64, f64, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let mut ss = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        let r = y - (slope * x + intercept);
        ss += r * r;
    }
    (slope, intercept, (ss / n).sqrt())
}

/// Offsets of the geometric fitting ladder for a given window.
fn order_ladder(window: f64) -> Vec<f64> {
    (0..=10).map(|k| 0.1 * window * (2f64).powi(-k)).collect()
}

/// Estimate the vanishing order of `f` at `s_j` by log–log regression over
/// a geometric ladder of offsets on both sides.
///
/// The order is accepted only when the rounded slope agrees on both sides
/// and the fit residual stays below the pinned bound; the leading
/// coefficient is recovered from the intercept, signed by the right-hand
/// samples. Functions below the identically-zero threshold everywhere are
/// reported as such.
pub fn vanishing_order<F: Fn(f64) -> f64>(
    f: F,
    s_j: f64,
    window: f64,
) -> Result<OrderEstimate, TraceError> {
    assert!(window > 0.0, "window must be positive");
    let ladder = order_ladder(window);
    let right: Vec<f64> = ladder.iter().map(|&d| f(s_j + d)).collect();
    let left: Vec<f64> = ladder.iter().map(|&d| f(s_j - d)).collect();

    let max_abs = right.iter().chain(&left).fold(0.0f64, |m, v| m.max(v.abs()));
    if max_abs < tolerances::IDENTICALLY_ZERO {
        return Ok(OrderEstimate {
            order: 0,
            leading_coeff: 0.0,
            fit_residual: 0.0,
            identically_zero: true,
        });
    }

    let fit_side = |values: &[f64]| -> Result<(f64, f64, f64), TraceError> {
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for (d, v) in ladder.iter().zip(values) {
            if v.abs() > 1e-250 {
                xs.push(d.ln());
                ys.push(v.abs().ln());
            }
        }
        if xs.len() < 4 {
            return Err(TraceError::OrderFit(
                "too few usable samples (function vanishes on the ladder)".into(),
            ));
        }
        Ok(fit_line(&xs, &ys))
    };

    let (slope_r, intercept_r, res_r) = fit_side(&right)?;
    let (slope_l, _, res_l) = fit_side(&left)?;

    let order_r = slope_r.round();
    let order_l = slope_l.round();
    let residual = res_r.max(res_l);
    if order_r != order_l {
        return Err(TraceError::OrderFit(format!(
            "sides disagree: {slope_r:.3} vs {slope_l:.3}"
        )));
    }
    if residual > tolerances::ORDER_FIT_RESIDUAL {
        return Err(TraceError::OrderFit(format!(
            "fit residual {residual:.3} exceeds {} (non-analytic or multiple zeros in window?)",
            tolerances::ORDER_FIT_RESIDUAL
        )));
    }
    if order_r < 1.0 {
        return Err(TraceError::OrderFit(format!(
            "fitted order {order_r} is not a positive integer"
        )));
    }
    let sign = if right[ladder.len() / 2] < 0.0 { -1.0 } else { 1.0 };
    Ok(OrderEstimate {
        order: order_r as u32,
        leading_coeff: sign * intercept_r.exp(),
        fit_residual: residual,
        identically_zero: false,
    })
}

/// Discrete Fourier coefficients of a uniformly sampled closed curve,
/// truncated at `n` harmonics.
///
/// Samples must sit at `s_i = 2πi/M` for `i = 0..M` and `n < M/2`;
/// anything else is rejected. Band-limited input is reproduced exactly.
pub fn fourier_truncate(
    samples: &[(f64, ParamPoint)],
    n: usize,
) -> Result<FourierCurve, TraceError> {
    let m = samples.len();
    if m < 2 || 2 * n >= m {
        return Err(TraceError::TruncationOrder { n, m });
    }
    let step = std::f64::consts::TAU / m as f64;
    for (i, (s, _)) in samples.iter().enumerate() {
        if (s - i as f64 * step).abs() > 1e-9 {
            return Err(TraceError::NonUniformSamples);
        }
    }
    let coords: Vec<[f64; 2]> = samples.iter().map(|(_, p)| [p.u, p.v]).collect();
    let mut mean = [0.0f64; 2];
    for c in &coords {
        mean[0] += c[0];
        mean[1] += c[1];
    }
    mean[0] /= m as f64;
    mean[1] /= m as f64;

    let mut cos_coeffs = Vec::with_capacity(n);
    let mut sin_coeffs = Vec::with_capacity(n);
    for k in 1..=n {
        let mut ck = [0.0f64; 2];
        let mut sk = [0.0f64; 2];
        for (i, c) in coords.iter().enumerate() {
            let phase = k as f64 * i as f64 * step;
            let (sin, cos) = phase.sin_cos();
            for d in 0..2 {
                ck[d] += c[d] * cos;
                sk[d] += c[d] * sin;
            }
        }
        let scale = 2.0 / m as f64;
        cos_coeffs.push([ck[0] * scale, ck[1] * scale]);
        sin_coeffs.push([sk[0] * scale, sk[1] * scale]);
    }
    Ok(FourierCurve { mean, cos_coeffs, sin_coeffs })
}

/// Run the bounded-mean-curvature limit checks along a parameter curve of a
/// graph surface crossing the type-change set at `s_j`.
///
/// Fits the vanishing orders `m` of `β̂` and `ℓ` of `α̂`, verifies `m` odd
/// and `2ℓ > 3m`, fits the decay exponent of `|H|` on both sides (expected
/// `ℓ − 3m/2`), and samples `|H|` close to the crossing.
pub fn verify_mean_curvature_limit<C: Fn(f64) -> ParamPoint>(
    graph: &GraphSurface,
    curve: C,
    s_j: f64,
    window: f64,
) -> Result<MeanCurvatureLimitReport, TraceError> {
    let ab_at = |s: f64| graph_ab(&graph.jet(curve(s)));
    let beta_hat = |s: f64| ab_at(s).b;
    let alpha_hat = |s: f64| ab_at(s).a;
    let h_abs = |s: f64| {
        let ab = ab_at(s);
        (ab.a / (2.0 * ab.b.abs().powf(1.5))).abs()
    };

    let probe = 0.1 * window;
    if beta_hat(s_j - probe).signum() == beta_hat(s_j + probe).signum() {
        return Err(TraceError::NoSignChange { s_j });
    }

    let beta_order = vanishing_order(beta_hat, s_j, window)?;
    let alpha_order = vanishing_order(alpha_hat, s_j, window)?;
    let m_odd = beta_order.order % 2 == 1;

    let near_offsets = [1e-4, 5e-5, 2.5e-5, 1.25e-5];
    let h_max_near_sigma = near_offsets
        .iter()
        .flat_map(|&d| [h_abs(s_j - d), h_abs(s_j + d)])
        .fold(0.0f64, f64::max);

    if alpha_order.identically_zero {
        return Ok(MeanCurvatureLimitReport {
            s_j,
            beta_order,
            alpha_order,
            m_odd,
            inequality_2l_gt_3m: true,
            decay_exponent: None,
            expected_exponent: None,
            h_max_near_sigma,
            h_tends_to_zero: h_max_near_sigma < tolerances::H_NEAR_SIGMA,
        });
    }

    let inequality = 2 * alpha_order.order > 3 * beta_order.order;
    let ladder = order_ladder(window);
    let fit_h = |side: f64| {
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for &d in &ladder {
            let h = h_abs(s_j + side * d);
            if h > 1e-250 {
                xs.push(d.ln());
                ys.push(h.ln());
            }
        }
        fit_line(&xs, &ys).0
    };
    let decay = (fit_h(-1.0), fit_h(1.0));
    let expected = alpha_order.order as f64 - 1.5 * beta_order.order as f64;

    Ok(MeanCurvatureLimitReport {
        s_j,
        beta_order,
        alpha_order,
        m_odd,
        inequality_2l_gt_3m: inequality,
        decay_exponent: Some(decay),
        expected_exponent: Some(expected),
        h_max_near_sigma,
        h_tends_to_zero: h_max_near_sigma < tolerances::H_NEAR_SIGMA,
    })
}
