//! Error measures between a rational curve and its polynomial approximant.
//!
//! `e_∞` is a dense uniform-sample maximum. `e_2` is the weighted `L²` norm
//! `sqrt(∫_0^1 (1-t)^α t^β ‖R(t) - P(t)‖² dt)`: every coordinate of the
//! difference is interpolated in Chebyshev form, squared exactly as a series
//! and integrated with [`jacobi_integral`].

use crate::bezier::{bernstein_unchecked, BezierCurve, RationalBezierCurve};
use crate::chebyshev::{chebyshev_fit, jacobi_integral, ChebyshevSeries, QuadratureConfig};
use crate::dual::{ConstraintSpec, JacobiWeight};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::special::ln_binomial;

/// Default number of uniform samples for [`max_error`].
pub const DEFAULT_SAMPLES: usize = 10_000;

/// Both error measures of one approximant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorReport<T> {
    pub e_inf: T,
    pub e_2: T,
    pub sample_count: usize,
    /// Parameter at which `e_inf` was attained.
    pub argmax_t: T,
}

impl<T: Scalar> ErrorReport<T> {
    pub fn compute(
        rational: &RationalBezierCurve<T>,
        poly: &BezierCurve<T>,
        weight: JacobiWeight<T>,
        samples: usize,
        quadrature: QuadratureConfig<T>,
    ) -> Result<Self> {
        let (e_inf, argmax_t) = max_error(rational, poly, samples)?;
        let e_2 = l2_error(rational, poly, weight, quadrature)?;
        Ok(ErrorReport { e_inf, e_2, sample_count: samples, argmax_t })
    }
}

fn check_dims<T: Scalar>(rational: &RationalBezierCurve<T>, poly: &BezierCurve<T>) -> Result<()> {
    if rational.dim() != poly.dim() {
        return Err(Error::DimensionMismatch { expected: rational.dim(), got: poly.dim() });
    }
    Ok(())
}

/// `max_i ‖R(t_i) - P(t_i)‖` over `t_i = i/(samples-1)`, with the maximiser.
pub fn max_error<T: Scalar>(rational: &RationalBezierCurve<T>, poly: &BezierCurve<T>, samples: usize) -> Result<(T, T)> {
    check_dims(rational, poly)?;
    if samples < 2 {
        return Err(Error::TooFewSamples(samples));
    }
    let last = T::of_usize(samples - 1);
    let mut best = (T::zero(), T::zero());
    for i in 0..samples {
        let t = T::of_usize(i) / last;
        let d = distance(&rational.eval(t), &poly.eval(t));
        if d > best.0 {
            best = (d, t);
        }
    }
    Ok(best)
}

fn distance<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).map(|(&x, &y)| (x - y) * (x - y)).sum::<T>().sqrt()
}

/// Coordinate magnitude used to make the fit tolerance relative.
fn magnitude<T: Scalar>(rational: &RationalBezierCurve<T>, poly: &BezierCurve<T>) -> T {
    rational.coords().iter().chain(poly.coords()).fold(T::one(), |acc, c| acc.max(c.abs()))
}

/// Chebyshev interpolants of `R_c - P_c` on `x ∈ [-1, 1]`, `t = (1+x)/2`.
fn difference_series<T: Scalar>(
    rational: &RationalBezierCurve<T>,
    poly: &BezierCurve<T>,
    quadrature: QuadratureConfig<T>,
) -> Result<Vec<ChebyshevSeries<T>>> {
    check_dims(rational, poly)?;
    let eps = quadrature.eps * magnitude(rational, poly);
    let half = T::lit(0.5);
    (0..rational.dim())
        .map(|c| {
            chebyshev_fit(
                |x: T| {
                    let t = (T::one() + x) * half;
                    rational.eval(t)[c] - poly.eval(t)[c]
                },
                eps,
                quadrature.max_order,
            )
        })
        .collect()
}

/// Exact square of a Chebyshev sum, via `T_i T_j = (T_{i+j} + T_{|i-j|})/2`.
pub fn chebyshev_square<T: Scalar>(series: &ChebyshevSeries<T>) -> ChebyshevSeries<T> {
    let half = T::lit(0.5);
    // standard coefficients a_0 = γ_0/2, a_j = γ_j
    let mut a: Vec<T> = series.coefficients().to_vec();
    a[0] = a[0] * half;
    let mut out = vec![T::zero(); 2 * a.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == T::zero() {
            continue;
        }
        for (j, &aj) in a.iter().enumerate() {
            let p = half * ai * aj;
            out[i + j] = out[i + j] + p;
            out[i.abs_diff(j)] = out[i.abs_diff(j)] + p;
        }
    }
    out[0] = out[0] + out[0];
    ChebyshevSeries::from_coefficients(out)
}

/// Weighted `L²` distance between `R` and `P` on `[0, 1]`.
pub fn l2_error<T: Scalar>(
    rational: &RationalBezierCurve<T>,
    poly: &BezierCurve<T>,
    weight: JacobiWeight<T>,
    quadrature: QuadratureConfig<T>,
) -> Result<T> {
    let series = difference_series(rational, poly, quadrature)?;
    let mut total = T::zero();
    for s in &series {
        total = total + jacobi_integral(weight.alpha(), weight.beta(), &chebyshev_square(s))?;
    }
    let scaled = total * (-weight.sigma() * T::LN_2()).exp();
    Ok(scaled.max(T::zero()).sqrt())
}

/// `max_j ‖⟨R - P, B^m_j⟩‖` over the interior indices `j ∈ [k, m-l]`, where
/// `m` is the degree of `P`. Zero (to rounding) for the optimal approximant.
pub fn residual_orthogonality<T: Scalar>(
    rational: &RationalBezierCurve<T>,
    poly: &BezierCurve<T>,
    cons: ConstraintSpec,
    weight: JacobiWeight<T>,
    quadrature: QuadratureConfig<T>,
) -> Result<T> {
    let m = poly.degree();
    cons.check(m)?;
    let series = difference_series(rational, poly, quadrature)?;
    let (alpha, beta) = (weight.alpha(), weight.beta());
    let mut worst = T::zero();
    for j in cons.k..=m - cons.l {
        // B^m_j(t) = C(m,j) 2^{-m} (1-x)^{m-j} (1+x)^j
        let ln_scale = ln_binomial::<T>(m, j) - (T::of_usize(m) + weight.sigma()) * T::LN_2();
        let mut norm2 = T::zero();
        for s in &series {
            let v = jacobi_integral(alpha + T::of_usize(m - j), beta + T::of_usize(j), s)? * ln_scale.exp();
            norm2 = norm2 + v * v;
        }
        worst = worst.max(norm2.sqrt());
    }
    Ok(worst)
}

/// `⟨f, B^m_j⟩` for a plain function, by the same fit-and-integrate route.
pub fn bernstein_inner_product<T: Scalar>(
    f: impl Fn(T) -> T,
    m: usize,
    j: usize,
    weight: JacobiWeight<T>,
    quadrature: QuadratureConfig<T>,
) -> Result<T> {
    if j > m {
        return Err(Error::IndexOutOfRange { index: j, degree: m });
    }
    let half = T::lit(0.5);
    let series = chebyshev_fit(
        |x: T| {
            let t = (T::one() + x) * half;
            f(t) * bernstein_unchecked::<T>(m, j, t)
        },
        quadrature.eps,
        quadrature.max_order,
    )?;
    Ok(jacobi_integral(weight.alpha(), weight.beta(), &series)? * (-weight.sigma() * T::LN_2()).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use ratbez_oracles::GaussJacobi;

    fn pair() -> (RationalBezierCurve<f64>, BezierCurve<f64>) {
        let r = RationalBezierCurve::from_points(
            &[vec![0.0, 0.0], vec![1.0, 2.0], vec![3.0, -1.0], vec![4.0, 1.0]],
            &[1.0, 3.0, 0.5, 2.0],
        )
        .unwrap();
        let p = BezierCurve::from_points(&[vec![0.0, 0.0], vec![2.0, 1.0], vec![4.0, 1.0]]).unwrap();
        (r, p)
    }

    #[test]
    fn identical_curves_have_zero_error() {
        let pts = vec![vec![1.0, 2.0], vec![3.0, 5.0], vec![0.0, 1.0]];
        let p = BezierCurve::from_points(&pts).unwrap();
        let r = RationalBezierCurve::from_polynomial(&p);
        let (e, _) = max_error(&r, &p, 1000).unwrap();
        assert!(e < 1e-14);
        let e2 = l2_error(&r, &p, JacobiWeight::legendre(), QuadratureConfig::default()).unwrap();
        assert!(e2 < 1e-12, "{e2}");
    }

    #[test]
    fn max_error_rejects_single_sample() {
        let (r, p) = pair();
        assert_eq!(max_error(&r, &p, 1), Err(Error::TooFewSamples(1)));
    }

    #[test]
    fn l2_error_matches_gauss_jacobi() {
        let (r, p) = pair();
        for (a, b) in [(0.0, 0.0), (0.5, -0.5), (2.0, 1.5)] {
            let w = JacobiWeight::new(a, b).unwrap();
            let quad = GaussJacobi::new(300, a, b);
            let reference = quad
                .integrate_unit(|t| {
                    let (x, y) = (r.eval(t), p.eval(t));
                    (x[0] - y[0]).powi(2) + (x[1] - y[1]).powi(2)
                })
                .sqrt();
            let got = l2_error(&r, &p, w, QuadratureConfig::default()).unwrap();
            assert!((got - reference).abs() < 1e-11 * reference.max(1.0), "({a},{b}): {got} vs {reference}");
        }
    }

    #[test]
    fn chebyshev_square_is_exact() {
        let s = ChebyshevSeries::from_coefficients(vec![1.0, -0.5, 0.25, 2.0]);
        let sq = chebyshev_square(&s);
        for i in 0..=20 {
            let x = -1.0 + 0.1 * i as f64;
            assert!((sq.eval(x) - s.eval(x).powi(2)).abs() < 1e-13);
        }
    }

    #[test]
    fn bernstein_inner_product_of_constant() {
        // ∫ B^m_j dt = 1/(m+1)
        for j in 0..=5 {
            let v = bernstein_inner_product(|_| 1.0f64, 5, j, JacobiWeight::legendre(), QuadratureConfig::default()).unwrap();
            assert!((v - 1.0 / 6.0).abs() < 1e-14);
        }
    }
}
