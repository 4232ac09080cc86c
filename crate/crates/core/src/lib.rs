//! Constrained weighted least-squares approximation of rational Bézier
//! curves by polynomial Bézier curves.
//!
//! Given a rational curve `R_n` with positive weights, a target degree `m`,
//! endpoint derivative orders `(k, l)` and a Jacobi weight `(1-t)^α t^β`,
//! [`approximate`] returns the degree-`m` Bézier curve that matches the
//! first `k` derivatives at `t = 0`, the first `l` at `t = 1`, and minimises
//! `∫_0^1 (1-t)^α t^β ‖R_n(t) - P_m(t)‖² dt` over the rest.
//!
//! The interior control points come out of an explicit inner-product formula
//! in the constrained dual Bernstein basis ([`dual`]); the rational moments it
//! needs are computed by adaptive Chebyshev interpolation and exact
//! Jacobi-weighted integration of Chebyshev sums ([`chebyshev`]).
//!
//! All numerical code is generic over [`Scalar`] (`f32` or `f64`); the
//! aliases at the crate root fix the scalar to `f64`.

pub mod approx;
pub mod baselines;
pub mod bezier;
pub mod chebyshev;
pub mod dual;
pub mod error;
pub mod metrics;
pub mod scalar;
pub mod special;

pub use crate::approx::{
    approximate, approximate_composite, boundary_control_points, endpoint_rho, inner_control_points,
    ApproximationRequest, ApproximationResult, CompositeApproximation, Diagnostics, SegmentSettings, Subdivision,
};
pub use crate::baselines::{huang_approximation, lu_iterate, ElevationState, LuNodes, LuOutcome, LuState};
pub use crate::bezier::{bernstein_eval, forward_difference, BezierCurve, CompositeCurve, End, RationalBezierCurve};
pub use crate::chebyshev::{chebyshev_fit, jacobi_integral, rational_moments, theta, ChebyshevSeries, MomentVector};
pub use crate::dual::{build_ctable, k_coefficient, ConstraintSpec, DualBasisTable, JacobiWeight};
pub use crate::error::{Error, Result};
pub use crate::metrics::{l2_error, max_error, residual_orthogonality, ErrorReport};
pub use crate::scalar::Scalar;

/// Default Chebyshev tail tolerance in double precision.
pub const DEFAULT_EPS: f64 = 1e-12;

pub type BezierCurve64 = BezierCurve<f64>;
pub type RationalBezierCurve64 = RationalBezierCurve<f64>;
pub type JacobiWeight64 = JacobiWeight<f64>;
pub type DualBasisTable64 = DualBasisTable<f64>;
pub type ChebyshevSeries64 = ChebyshevSeries<f64>;
pub type ApproximationRequest64 = ApproximationRequest<f64>;
pub type ApproximationResult64 = ApproximationResult<f64>;
pub type BezierCurve32 = BezierCurve<f32>;
pub type RationalBezierCurve32 = RationalBezierCurve<f32>;
