//! Constrained least-squares approximation of a rational Bézier curve.
//!
//! The boundary control points `p_0..p_{k-1}` and `p_{m-l+1}..p_m` are fixed by
//! the endpoint derivatives of the rational curve. The interior points are the
//! inner products of the remainder with the constrained dual basis:
//!
//! `p_i = Σ_h C(n,h) ω_h r_h Σ_j C(m,j)/C(n+m,j+h) c_ij I_{j+h} - Σ_{j∉[k,m-l]} p_j K_ij`.
//!
//! The dual table `c_ij` and the moments `I_h` depend only on the weights, so
//! they are computed once and shared by all coordinates.

use crate::bezier::{forward_difference, BezierCurve, CompositeCurve, End, RationalBezierCurve};
use crate::chebyshev::{rational_moments, MomentVector, QuadratureConfig};
use crate::dual::{build_ctable, ConstraintSpec, DualBasisTable, JacobiWeight};
use crate::error::{Error, Result};
use crate::metrics::ErrorReport;
use crate::scalar::Scalar;
use crate::special::{binomial, falling_factorial, ln_binomial, odd};

/// Input of [`approximate`].
#[derive(Debug, Clone, PartialEq)]
pub struct ApproximationRequest<T> {
    pub curve: RationalBezierCurve<T>,
    pub degree: usize,
    pub constraints: ConstraintSpec,
    pub weight: JacobiWeight<T>,
    pub quadrature: QuadratureConfig<T>,
}

impl<T: Scalar> ApproximationRequest<T> {
    pub fn new(
        curve: RationalBezierCurve<T>,
        degree: usize,
        constraints: ConstraintSpec,
        weight: JacobiWeight<T>,
    ) -> Result<Self> {
        let req = ApproximationRequest { curve, degree, constraints, weight, quadrature: QuadratureConfig::default() };
        req.validate()?;
        Ok(req)
    }

    pub fn with_eps(mut self, eps: T) -> Self {
        self.quadrature.eps = eps;
        self
    }

    pub fn with_quadrature(mut self, quadrature: QuadratureConfig<T>) -> Self {
        self.quadrature = quadrature;
        self
    }

    pub fn validate(&self) -> Result<()> {
        self.constraints.check(self.degree)?;
        let n = self.curve.degree();
        for order in [self.constraints.k, self.constraints.l] {
            if order > n + 1 {
                return Err(Error::OrderTooHigh { order: order - 1, degree: n });
            }
        }
        Ok(())
    }
}

/// Extra information about a run.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Diagnostics<T> {
    /// Interpolation order `M` used for the moments (0 if none were needed).
    pub chebyshev_order: usize,
    /// `max_j ‖⟨R - P, B^m_j⟩‖` over interior `j`, when computed.
    pub residual_orthogonality: Option<T>,
    pub errors: Option<ErrorReport<T>>,
}

/// Output of [`approximate`].
#[derive(Debug, Clone, PartialEq)]
pub struct ApproximationResult<T> {
    pub approximant: BezierCurve<T>,
    /// `R^{(i)}(0)` for `i < k`, one vector of `d` coordinates per order.
    pub rho0: Vec<Vec<T>>,
    /// `R^{(i)}(1)` for `i < l`.
    pub rho1: Vec<Vec<T>>,
    pub moments: MomentVector<T>,
    pub diagnostics: Diagnostics<T>,
}

/// Endpoint derivatives `R^{(i)}(0)` (left) or `R^{(i)}(1)` (right) for
/// `i = 0..=max_order`, from forward differences of `ω_i r_i` and `ω_i`.
pub fn endpoint_rho<T: Scalar>(curve: &RationalBezierCurve<T>, end: End, max_order: usize) -> Result<Vec<Vec<T>>> {
    let n = curve.degree();
    if max_order > n {
        return Err(Error::OrderTooHigh { order: max_order, degree: n });
    }
    let w = curve.weights();
    let w_end = match end {
        End::Left => w[0],
        End::Right => w[n],
    };
    // start index of the difference window for order `i`
    let start = |i: usize| match end {
        End::Left => 0,
        End::Right => n - i,
    };
    let dim = curve.dim();
    let mut rho: Vec<Vec<T>> = Vec::with_capacity(max_order + 1);
    for i in 0..=max_order {
        let mut value = vec![T::zero(); dim];
        for (c, slot) in value.iter_mut().enumerate() {
            let homog: Vec<T> = curve.points().zip(w).map(|(p, &wi)| p[c] * wi).collect();
            let mut acc = falling_factorial::<T>(n, i) * forward_difference(&homog[start(i)..], i)?;
            for (j, prev) in rho.iter().enumerate() {
                let dw = forward_difference(&w[start(i - j)..], i - j)?;
                acc = acc - binomial::<T>(i, j) * falling_factorial::<T>(n, i - j) * dw * prev[c];
            }
            *slot = acc / w_end;
        }
        rho.push(value);
    }
    Ok(rho)
}

/// Control points as rows of coordinates.
pub type PointRows<T> = Vec<Vec<T>>;

/// Boundary control points `(p_0..p_{k-1}, p_{m-l+1}..p_m)`, both in
/// increasing index order.
pub fn boundary_control_points<T: Scalar>(
    rho0: &[Vec<T>],
    rho1: &[Vec<T>],
    degree: usize,
    cons: ConstraintSpec,
) -> Result<(PointRows<T>, PointRows<T>)> {
    cons.check(degree)?;
    let m = degree;
    if rho0.len() < cons.k || rho1.len() < cons.l {
        return Err(Error::LengthMismatch { expected: cons.k.max(cons.l), got: rho0.len().min(rho1.len()) });
    }
    let dim = rho0.first().or(rho1.first()).map_or(0, Vec::len);

    let mut left: Vec<Vec<T>> = Vec::with_capacity(cons.k);
    for i in 0..cons.k {
        let scale = falling_factorial::<T>(m, i);
        let p: Vec<T> = (0..dim)
            .map(|c| {
                let mut v = rho0[i][c] / scale;
                for (j, pj) in left.iter().enumerate() {
                    let term = binomial::<T>(i, j) * pj[c];
                    v = if odd(i + j) { v + term } else { v - term };
                }
                v
            })
            .collect();
        left.push(p);
    }

    // right[i] holds p_{m-i}
    let mut right: Vec<Vec<T>> = Vec::with_capacity(cons.l);
    for i in 0..cons.l {
        let scale = falling_factorial::<T>(m, i);
        let p: Vec<T> = (0..dim)
            .map(|c| {
                let base = rho1[i][c] / scale;
                let mut v = if odd(i) { -base } else { base };
                for j in 1..=i {
                    // p_{m-i+j} = right[i-j]
                    let term = binomial::<T>(i, j) * right[i - j][c];
                    v = if odd(j) { v + term } else { v - term };
                }
                v
            })
            .collect();
        right.push(p);
    }
    right.reverse();
    Ok((left, right))
}

/// Interior control points `p_k..p_{m-l}`.
pub fn inner_control_points<T: Scalar>(
    curve: &RationalBezierCurve<T>,
    table: &DualBasisTable<T>,
    moments: &MomentVector<T>,
    left: &[Vec<T>],
    right: &[Vec<T>],
) -> Result<Vec<Vec<T>>> {
    let n = curve.degree();
    let m = table.degree();
    let cons = table.constraints();
    let total = n + m;
    if moments.total_degree() != total || moments.first_index() != cons.k {
        return Err(Error::DimensionMismatch { expected: total, got: moments.total_degree() });
    }
    if left.len() != cons.k || right.len() != cons.l {
        return Err(Error::LengthMismatch { expected: cons.k + cons.l, got: left.len() + right.len() });
    }
    let dim = curve.dim();
    let weights = curve.weights();
    let interior: Vec<usize> = table.range().collect();

    // coefficient of r_h in p_i, shared by all coordinates
    let mut gain = vec![T::zero(); interior.len() * (n + 1)];
    for (row, &i) in interior.iter().enumerate() {
        for h in 0..=n {
            let inner: T = interior
                .iter()
                .map(|&j| {
                    let ratio = (ln_binomial::<T>(m, j) - ln_binomial::<T>(total, j + h)).exp();
                    ratio * table.get(i, j) * moments.get(j + h)
                })
                .sum();
            gain[row * (n + 1) + h] = binomial::<T>(n, h) * weights[h] * inner;
        }
    }

    let boundary: Vec<(usize, &Vec<T>)> = left
        .iter()
        .enumerate()
        .chain(right.iter().enumerate().map(|(off, p)| (m - cons.l + 1 + off, p)))
        .collect();

    interior
        .iter()
        .enumerate()
        .map(|(row, &i)| {
            let kij = boundary
                .iter()
                .map(|&(j, _)| table.k_coefficient(i, j))
                .collect::<Result<Vec<T>>>()?;
            Ok((0..dim)
                .map(|c| {
                    let mut v: T = curve.points().enumerate().map(|(h, p)| gain[row * (n + 1) + h] * p[c]).sum();
                    for ((_, pj), &k) in boundary.iter().zip(&kij) {
                        v = v - pj[c] * k;
                    }
                    v
                })
                .collect())
        })
        .collect()
}

/// Best constrained weighted least-squares degree-`m` approximant.
pub fn approximate<T: Scalar>(req: &ApproximationRequest<T>) -> Result<ApproximationResult<T>> {
    req.validate()?;
    let curve = &req.curve;
    let (m, cons) = (req.degree, req.constraints);

    let rho0 = if cons.k > 0 { endpoint_rho(curve, End::Left, cons.k - 1)? } else { Vec::new() };
    let rho1 = if cons.l > 0 { endpoint_rho(curve, End::Right, cons.l - 1)? } else { Vec::new() };
    let (left, right) = boundary_control_points(&rho0, &rho1, m, cons)?;

    let table = build_ctable(m, cons, req.weight)?;
    let moments = rational_moments(curve, m, cons, req.weight, req.quadrature)?;
    let inner = inner_control_points(curve, &table, &moments, &left, &right)?;

    let coords: Vec<T> = left.iter().chain(&inner).chain(&right).flatten().copied().collect();
    let approximant = BezierCurve::new(curve.dim(), coords)?;
    let diagnostics = Diagnostics { chebyshev_order: moments.chebyshev_order(), ..Diagnostics::default() };
    Ok(ApproximationResult { approximant, rho0, rho1, moments, diagnostics })
}

/// Per-piece settings for [`approximate_composite`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SegmentSettings<T> {
    pub degree: usize,
    pub constraints: ConstraintSpec,
    pub weight: JacobiWeight<T>,
    pub quadrature: QuadratureConfig<T>,
}

impl<T: Scalar> SegmentSettings<T> {
    pub fn new(degree: usize, constraints: ConstraintSpec, weight: JacobiWeight<T>) -> Self {
        SegmentSettings { degree, constraints, weight, quadrature: QuadratureConfig::default() }
    }
}

/// Where to split the segments of a composite curve before approximating.
#[derive(Debug, Clone, PartialEq, Default)]
pub enum Subdivision<T> {
    #[default]
    None,
    /// The same split parameters for every segment.
    Every(Vec<T>),
    /// One list of split parameters per segment.
    PerSegment(Vec<Vec<T>>),
}

impl<T: Scalar> Subdivision<T> {
    /// One split at the parameter midpoint of each segment.
    pub fn halves() -> Self {
        Subdivision::Every(vec![T::lit(0.5)])
    }

    fn params_for(&self, segment: usize, count: usize) -> Result<&[T]> {
        match self {
            Subdivision::None => Ok(&[]),
            Subdivision::Every(p) => Ok(p),
            Subdivision::PerSegment(all) => {
                if all.len() != count {
                    return Err(Error::RequestCount { expected: count, got: all.len() });
                }
                Ok(&all[segment])
            }
        }
    }
}

/// Output of [`approximate_composite`].
#[derive(Debug, Clone, PartialEq)]
pub struct CompositeApproximation<T> {
    /// The rational pieces after subdivision.
    pub pieces: Vec<RationalBezierCurve<T>>,
    pub results: Vec<ApproximationResult<T>>,
    pub curve: CompositeCurve<BezierCurve<T>>,
}

/// Approximates every (optionally subdivided) segment independently.
///
/// `settings` holds one entry per piece after subdivision, or a single entry
/// applied to all pieces. When the composite asks for continuity order
/// `c >= 1`, the piece left of each original join needs `l >= c + 1` and the
/// piece right of it `k >= c + 1`.
pub fn approximate_composite<T: Scalar>(
    curve: &CompositeCurve<RationalBezierCurve<T>>,
    settings: &[SegmentSettings<T>],
    subdivision: &Subdivision<T>,
) -> Result<CompositeApproximation<T>> {
    let segments = curve.segments();
    let mut pieces = Vec::new();
    // index of the first piece of each original segment
    let mut first_piece = Vec::with_capacity(segments.len());
    for (s, seg) in segments.iter().enumerate() {
        first_piece.push(pieces.len());
        pieces.extend(seg.split_at(subdivision.params_for(s, segments.len())?)?);
    }
    let per_piece: Vec<SegmentSettings<T>> = match settings.len() {
        1 => vec![settings[0]; pieces.len()],
        n if n == pieces.len() => settings.to_vec(),
        n => return Err(Error::RequestCount { expected: pieces.len(), got: n }),
    };

    let order = curve.continuity_order();
    if order >= 1 {
        let required = order + 1;
        for (join, &right_piece) in first_piece.iter().enumerate().skip(1) {
            let l = per_piece[right_piece - 1].constraints.l;
            let k = per_piece[right_piece].constraints.k;
            if l < required || k < required {
                return Err(Error::ContinuityViolation { join: join - 1, order, required, l, k });
            }
        }
    }

    let results = pieces
        .iter()
        .zip(&per_piece)
        .map(|(piece, s)| {
            let req = ApproximationRequest::new(piece.clone(), s.degree, s.constraints, s.weight)?
                .with_quadrature(s.quadrature);
            approximate(&req)
        })
        .collect::<Result<Vec<_>>>()?;
    let out = CompositeCurve::from_segments_unchecked(
        results.iter().map(|r| r.approximant.clone()).collect(),
        order,
    );
    Ok(CompositeApproximation { pieces, results, curve: out })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ::approx::assert_relative_eq;

    fn sample() -> RationalBezierCurve<f64> {
        RationalBezierCurve::from_points(
            &[vec![0.0, 1.0], vec![2.0, 3.0], vec![4.0, -1.0], vec![5.0, 2.0]],
            &[1.0, 2.5, 0.7, 1.3],
        )
        .unwrap()
    }

    #[test]
    fn rho_endpoint_values() {
        let r = sample();
        let left = endpoint_rho(&r, End::Left, 0).unwrap();
        let right = endpoint_rho(&r, End::Right, 0).unwrap();
        assert_eq!(left[0], vec![0.0, 1.0]);
        assert_eq!(right[0], vec![5.0, 2.0]);
        assert!(matches!(endpoint_rho(&r, End::Left, 4), Err(Error::OrderTooHigh { .. })));
    }

    #[test]
    fn rho_first_derivative_closed_form_and_finite_differences() {
        let r = sample();
        let n = 3.0;
        let rho = endpoint_rho(&r, End::Left, 1).unwrap();
        let expect = [n * 2.5 * (2.0 - 0.0), n * 2.5 * (3.0 - 1.0)];
        for c in 0..2 {
            assert_relative_eq!(rho[1][c], expect[c], max_relative = 1e-14);
        }
        let h = 1e-4;
        // second-order one-sided differences
        let fd: Vec<f64> =
            (0..2).map(|c| (-3.0 * r.eval(0.0)[c] + 4.0 * r.eval(h)[c] - r.eval(2.0 * h)[c]) / (2.0 * h)).collect();
        for c in 0..2 {
            assert!((rho[1][c] - fd[c]).abs() <= 1e-5 * rho[1][c].abs());
        }
        let rho1 = endpoint_rho(&r, End::Right, 1).unwrap();
        let fd1: Vec<f64> = (0..2)
            .map(|c| (3.0 * r.eval(1.0)[c] - 4.0 * r.eval(1.0 - h)[c] + r.eval(1.0 - 2.0 * h)[c]) / (2.0 * h))
            .collect();
        for c in 0..2 {
            assert!((rho1[1][c] - fd1[c]).abs() <= 1e-5 * rho1[1][c].abs().max(1.0), "{} vs {}", rho1[1][c], fd1[c]);
        }
    }

    #[test]
    fn rho_matches_series_division_oracle() {
        let r = sample();
        let rho0 = endpoint_rho(&r, End::Left, 3).unwrap();
        let rho1 = endpoint_rho(&r, End::Right, 3).unwrap();
        for c in 0..2 {
            let comp = r.component(c);
            let a = ratbez_oracles::rational_derivatives_at_zero(&comp, r.weights(), 3);
            let b = ratbez_oracles::rational_derivatives_at_one(&comp, r.weights(), 3);
            for i in 0..=3 {
                assert!((rho0[i][c] - a[i]).abs() <= 1e-11 * a[i].abs().max(1.0), "left i={i}");
                assert!((rho1[i][c] - b[i]).abs() <= 1e-11 * b[i].abs().max(1.0), "right i={i}");
            }
        }
    }

    #[test]
    fn rho_for_uniform_weights_is_polynomial_derivative() {
        let pts = vec![vec![0.0], vec![1.0], vec![3.0], vec![2.0], vec![-1.0]];
        let r = RationalBezierCurve::from_points(&pts, &[2.0; 5]).unwrap();
        let p = BezierCurve::from_points(&pts).unwrap();
        let rho = endpoint_rho(&r, End::Left, 4).unwrap();
        let rho1 = endpoint_rho(&r, End::Right, 4).unwrap();
        for i in 0..=4 {
            assert_relative_eq!(rho[i][0], p.endpoint_derivative(End::Left, i).unwrap()[0], max_relative = 1e-13, epsilon = 1e-13);
            assert_relative_eq!(rho1[i][0], p.endpoint_derivative(End::Right, i).unwrap()[0], max_relative = 1e-13, epsilon = 1e-13);
        }
    }

    #[test]
    fn boundary_points_examples() {
        let r = sample();
        let rho0 = endpoint_rho(&r, End::Left, 2).unwrap();
        let rho1 = endpoint_rho(&r, End::Right, 2).unwrap();
        let m = 6;
        let (left, right) = boundary_control_points(&rho0, &rho1, m, ConstraintSpec::new(1, 1)).unwrap();
        assert_eq!(left[0], vec![0.0, 1.0]);
        assert_eq!(right[0], vec![5.0, 2.0]);
        let (left, right) = boundary_control_points(&rho0, &rho1, m, ConstraintSpec::new(3, 2)).unwrap();
        for c in 0..2 {
            assert_relative_eq!(left[1][c], rho0[1][c] / m as f64 + left[0][c], max_relative = 1e-14);
        }
        // the polynomial built from these points reproduces the derivatives
        let mut coords = Vec::new();
        for p in &left {
            coords.extend_from_slice(p);
        }
        for _ in 3..=m - 2 {
            coords.extend_from_slice(&[0.0, 0.0]);
        }
        for p in &right {
            coords.extend_from_slice(p);
        }
        let poly = BezierCurve::new(2, coords).unwrap();
        for i in 0..3 {
            let d = poly.endpoint_derivative(End::Left, i).unwrap();
            for c in 0..2 {
                assert!((d[c] - rho0[i][c]).abs() <= 1e-10 * (1.0 + rho0[i][c].abs()));
            }
        }
        for i in 0..2 {
            let d = poly.endpoint_derivative(End::Right, i).unwrap();
            for c in 0..2 {
                assert!((d[c] - rho1[i][c]).abs() <= 1e-10 * (1.0 + rho1[i][c].abs()));
            }
        }
    }

    #[test]
    fn constant_curve_is_reproduced() {
        let r = RationalBezierCurve::from_points(&vec![vec![3.0f64, -2.0]; 5], &[1.0, 4.0, 2.0, 3.0, 1.0]).unwrap();
        for (m, k, l) in [(4, 1, 1), (7, 0, 0), (6, 2, 2)] {
            let req = ApproximationRequest::new(r.clone(), m, ConstraintSpec::new(k, l), JacobiWeight::legendre()).unwrap();
            let out = approximate(&req).unwrap();
            // the unconstrained dual basis amplifies rounding by ~10^3 at m = 7
            for p in out.approximant.points() {
                assert!((p[0] - 3.0).abs() < 1e-11 && (p[1] + 2.0).abs() < 1e-11, "{m} {k} {l} {p:?}");
            }
        }
    }

    #[test]
    fn polynomial_input_is_degree_elevated() {
        let pts = vec![vec![0.0f64, 1.0], vec![2.0, 5.0], vec![-1.0, 3.0], vec![4.0, 0.0]];
        let r = RationalBezierCurve::from_points(&pts, &[1.0; 4]).unwrap();
        let expect = BezierCurve::from_points(&pts).unwrap().degree_elevate(3);
        let req = ApproximationRequest::new(r, 6, ConstraintSpec::new(0, 0), JacobiWeight::legendre()).unwrap();
        let out = approximate(&req).unwrap();
        for (a, b) in out.approximant.coords().iter().zip(expect.coords()) {
            assert!((a - b).abs() < 1e-11, "{a} vs {b}");
        }
    }

    #[test]
    fn small_example_matches_normal_equations() {
        let r = RationalBezierCurve::new(1, vec![0.0, 1.0, 0.0], vec![1.0, 2.0, 1.0]).unwrap();
        let req = ApproximationRequest::new(r, 3, ConstraintSpec::new(1, 1), JacobiWeight::legendre()).unwrap();
        let out = approximate(&req).unwrap();
        let quad = ratbez_oracles::GaussJacobi::new(200, 0.0, 0.0);
        let oracle = ratbez_oracles::constrained_least_squares(&[0.0, 1.0, 0.0], &[1.0, 2.0, 1.0], 3, 1, 1, &quad);
        for (a, b) in out.approximant.coords().iter().zip(&oracle) {
            assert!((a - b).abs() <= 1e-9 * b.abs().max(1.0), "{a} vs {b}");
        }
    }

    #[test]
    fn rejects_invalid_requests() {
        let r = sample();
        assert!(matches!(
            ApproximationRequest::new(r.clone(), 2, ConstraintSpec::new(2, 1), JacobiWeight::legendre()),
            Err(Error::ConstraintTooLarge { .. })
        ));
        assert!(matches!(
            ApproximationRequest::new(r, 12, ConstraintSpec::new(6, 0), JacobiWeight::legendre()),
            Err(Error::OrderTooHigh { .. })
        ));
    }

    #[test]
    fn composite_single_segment_equals_plain_run() {
        let r = sample();
        let composite = CompositeCurve::new(vec![r.clone()], 0).unwrap();
        let settings = SegmentSettings::new(6, ConstraintSpec::new(1, 1), JacobiWeight::legendre());
        let out = approximate_composite(&composite, &[settings], &Subdivision::None).unwrap();
        let plain = approximate(&ApproximationRequest::new(r, 6, ConstraintSpec::new(1, 1), JacobiWeight::legendre()).unwrap()).unwrap();
        assert_eq!(out.curve.segments()[0], plain.approximant);
    }

    #[test]
    fn composite_continuity_and_counts() {
        let a = sample();
        // second point chosen so that the tangents agree at the join
        let ta = endpoint_rho(&a, End::Right, 1).unwrap()[1].clone();
        let q1 = vec![5.0 + ta[0] / 4.0, 2.0 + ta[1] / 4.0];
        let b = RationalBezierCurve::from_points(&[vec![5.0, 2.0], q1, vec![8.0, 1.0]], &[1.0, 2.0, 1.0]).unwrap();
        let composite = CompositeCurve::new(vec![a, b], 1).unwrap();
        let weak = SegmentSettings::new(6, ConstraintSpec::new(1, 1), JacobiWeight::legendre());
        assert!(matches!(
            approximate_composite(&composite, &[weak], &Subdivision::None),
            Err(Error::ContinuityViolation { .. })
        ));
        let strong = SegmentSettings::new(6, ConstraintSpec::new(2, 2), JacobiWeight::legendre());
        let out = approximate_composite(&composite, &[strong], &Subdivision::halves()).unwrap();
        assert_eq!(out.curve.len(), 4);
        // C1 joins: matching end tangents
        for pair in out.curve.segments().windows(2) {
            let d0 = pair[0].endpoint_derivative(End::Right, 1).unwrap();
            let d1 = pair[1].endpoint_derivative(End::Left, 1).unwrap();
            for c in 0..2 {
                assert!((d0[c] - d1[c]).abs() < 1e-9 * (1.0 + d0[c].abs()));
            }
        }
        assert!(matches!(
            approximate_composite(&composite, &[strong, strong, strong], &Subdivision::None),
            Err(Error::RequestCount { .. })
        ));
    }
}
