//! Pinned numerical tolerances.
//!
//! Every threshold used by the library and the verification suites lives
//! here, with a note on where it comes from. Exact closed-form identities
//! sit near machine precision; finite-difference and extrapolation checks
//! carry their truncation-error budgets.

/// Cross-product axiom residuals over unit-scale random vectors.
pub const CROSS_AXIOM: f64 = 1e-12;

/// `|H| = 1/2` reproduction for the constant-mean-curvature pair.
pub const CMC: f64 = 1e-8;

/// Zero-mean-curvature check: `|α| < ZMC_SCALE · (1 + |β|^{3/2})`.
pub const ZMC_SCALE: f64 = 1e-10;

/// Closed-form first fundamental forms of the quadric gallery surfaces.
pub const FIRST_FORM: f64 = 1e-10;

/// Graph identities `β ≡ B`, `|α| ≡ |A|`, and the two mean-curvature routes.
pub const GRAPH_IDENTITY: f64 = 1e-10;

/// `|α|` at a type-change crossing located by bisection.
pub const ALPHA_AT_CROSSING: f64 = 1e-6;

/// Distance of refined trace vertices to the exact curve `x = ±cosh y`.
pub const SIGMA_DISTANCE: f64 = 1e-6;

/// Largest `|⟨Γ′,Γ′⟩|` accepted along a null curve.
pub const NULL_RESIDUAL: f64 = 1e-8;

/// Smallest velocity/acceleration independence measure of a
/// non-degenerate null curve (smallest singular value of the row-normalized
/// derivative matrix).
pub const INDEPENDENCE_MIN: f64 = 1e-6;

/// Window around the expected mean-curvature decay exponent `ℓ − 3m/2`.
pub const DECAY_EXPONENT_WINDOW: f64 = 0.05;

/// `|H|` within parameter distance 1e−4 of the type-change set must stay
/// below this (the bound constant 1 at the `√δ` scale).
pub const H_NEAR_SIGMA: f64 = 1e-2;

/// Relative accuracy of the extrapolated ratio limit against its closed
/// form.
pub const RATIO_REL: f64 = 1e-6;

/// Light-likeness of the extended mean-curvature vector:
/// `|⟨V,V⟩| < LIGHTLIKE_VECTOR_REL · |V|²_euclid`.
pub const LIGHTLIKE_VECTOR_REL: f64 = 1e-8;

/// Euclidean floor below which the extended vector counts as vanishing.
pub const VECTOR_NONZERO_FLOOR: f64 = 1e-8;

/// Relative drift of the bound constant under grid doubling.
pub const BOUND_STABILITY: f64 = 0.01;

/// Band-limited Fourier round-trip error.
pub const FOURIER_ROUNDTRIP: f64 = 1e-12;

/// Analytic vs finite-difference jets, relative to `1 + |value|`.
pub const FD_CONSISTENCY: f64 = 1e-6;

/// Central differences must shrink by ≈4× when `h` halves.
pub const FD_RATIO_LOW: f64 = 3.5;
pub const FD_RATIO_HIGH: f64 = 4.5;

/// Default step of the finite-difference jet oracle.
pub const FD_DEFAULT_H: f64 = 1e-4;

/// Light-like classification: `|⟨v,v⟩| ≤ LIGHTLIKE_REL · max(1, |v|²_euclid)`.
pub const LIGHTLIKE_REL: f64 = 1e-10;

/// Degenerate first fundamental form: `|β| ≤ DEGENERATE_BETA · (1 + g11² + g22²)`.
pub const DEGENERATE_BETA: f64 = 1e-12;

/// `|B|` below which a point counts as lying on the type-change set.
pub const TYPECHANGE_B: f64 = 1e-10;

/// `|∇B|` above which a type-change point is non-degenerate.
pub const NONDEGENERATE_GRAD: f64 = 1e-8;

/// Everything below this is treated as an identically vanishing function
/// when fitting vanishing orders.
pub const IDENTICALLY_ZERO: f64 = 1e-14;

/// Largest admissible RMS residual (in log space) of a vanishing-order fit.
pub const ORDER_FIT_RESIDUAL: f64 = 0.05;

/// Newton corrector target for traced zero-set vertices.
pub const CORRECTOR_B: f64 = 1e-12;

/// First offset of the transversal extrapolation ladder.
pub const RICHARDSON_DELTA0: f64 = 1e-2;

/// Rungs in the extrapolation ladder (geometric halving).
pub const RICHARDSON_TERMS: usize = 5;

/// Growth factor of raw ladder samples that flags a divergent limit.
pub const RICHARDSON_DIVERGENCE: f64 = 10.0;

/// Quadric containment residual for gallery surfaces.
pub const QUADRIC_RESIDUAL: f64 = 1e-10;

/// Implicit-set containment residual for the catenoid-type images.
pub const IMPLICIT_RESIDUAL: f64 = 1e-10;
