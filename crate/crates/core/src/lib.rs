//! mixedtype — curvature and type-change analysis for surfaces in
//! Lorentzian space forms.
//!
//! A surface immersed in a Lorentzian 3-manifold is of *mixed type* when it
//! carries both space-like and time-like points. The locus separating the two
//! causal characters is the *type-change set*; for a graph `t = f(x, y)` in
//! Lorentz–Minkowski space it is the zero set of `B = 1 − f_x² − f_y²`.
//! This crate provides:
//!
//! - metric arithmetic for the three Lorentzian space forms (Minkowski
//!   3-space and the de Sitter / anti-de Sitter quadrics), including the
//!   metric vector products used to build surface normals ([`spaceform`]);
//! - exact second-order jets of closed-form parametric surfaces via
//!   truncated Taylor arithmetic, with a finite-difference cross-check
//!   ([`taylor`], [`jets`]);
//! - fundamental forms, mean curvature, its analytic continuation across
//!   degenerate points, and the extended mean-curvature vector field
//!   ([`curvature`]);
//! - type-change curve tracing, null-curve diagnostics, vanishing-order
//!   estimation and the bounded-mean-curvature limit checks ([`typechange`]);
//! - a gallery of closed-form surfaces, among them a perturbed helicoid
//!   whose mean-curvature vector extends analytically (and non-vanishing)
//!   across its type-change set ([`gallery`]);
//! - machine-checkable verification suites with pinned tolerances
//!   ([`verify`], [`tolerances`]).
//!
//! All evaluators are immutable and the public functions are pure, so the
//! whole API is safe to drive from multiple threads. Grid sweeps that profit
//! from parallelism use rayon internally.

pub mod curvature;
pub mod gallery;
pub mod jets;
pub mod spaceform;
pub mod taylor;
pub mod tolerances;
pub mod typechange;
pub mod verify;

pub use curvature::{
    alpha_extended, curvature_point, extended_mean_curvature_vector, first_fundamental, graph_ab,
    mean_curvature, second_fundamental, unit_normal, CurvatureError, CurvaturePoint,
    FundamentalData, GraphAB, MetricType, ShapeData,
};
pub use gallery::{
    estimate_bound_m, implicit_residual_h, implicit_residual_p, make_surface, ratio_at_sigma,
    verify_zero_sets, BoundEstimate, ConstructionParams, GalleryError, GalleryId, GallerySurface,
};
pub use jets::{fd_jet, GraphSurface, Jet2, JetError, ParamPoint, Rect, SurfaceDef};
pub use spaceform::{
    cross3_bilinear, cross4_bilinear, lorentz_cross3, triple_cross4, AmbientVector,
    CausalCharacter, Causality, SpaceForm,
};
pub use taylor::Jet;
pub use typechange::{
    classify_point, fourier_truncate, null_curve_check, trace_graph_zero_set, trace_zero_set,
    vanishing_order, verify_mean_curvature_limit, CharacteristicCurve, FourierCurve,
    MeanCurvatureLimitReport, NullCurveReport, NullVerdict, OrderEstimate, TraceError,
    TypeChangeClass, TypeChangeKind,
};
pub use verify::{run_suite, suite_names, CheckRecord, VerifyReport};
