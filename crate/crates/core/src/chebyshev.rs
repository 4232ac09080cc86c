//! Adaptive Chebyshev interpolation and exact Jacobi-weighted integration of
//! Chebyshev sums.
//!
//! A function on `[-1, 1]` is interpolated at the extrema nodes
//! `ξ_i = cos(iπ/M)` by `S_M(x) = ½γ_0 + Σ_{j≥1} γ_j T_j(x)`, doubling `M`
//! until the last four coefficients fall below a tolerance. The integral
//! `∫ (1-x)^a (1+x)^b S_M(x) dx` is then evaluated exactly through a backward
//! recurrence on auxiliary coefficients `d_i`.

use num_traits::Zero;
use rustfft::num_complex::Complex;
use rustfft::FftPlanner;

use crate::bezier::RationalBezierCurve;
use crate::dual::{ConstraintSpec, JacobiWeight};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::special::{ln_beta, ln_binomial, LogValue};

/// First interpolation order tried by [`chebyshev_fit`].
pub const INITIAL_ORDER: usize = 32;
/// Default cap on the interpolation order.
pub const DEFAULT_MAX_ORDER: usize = 1 << 17;

/// Tolerance and order cap for the adaptive fit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig<T> {
    pub eps: T,
    pub max_order: usize,
}

impl<T: Scalar> Default for QuadratureConfig<T> {
    fn default() -> Self {
        QuadratureConfig { eps: T::lit(crate::DEFAULT_EPS), max_order: DEFAULT_MAX_ORDER }
    }
}

impl<T: Scalar> QuadratureConfig<T> {
    pub fn with_eps(eps: T) -> Self {
        QuadratureConfig { eps, ..Self::default() }
    }
}

/// Chebyshev sum `½γ_0 T_0 + Σ_{j=1}^{M} γ_j T_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChebyshevSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> ChebyshevSeries<T> {
    /// Wraps `γ_0, …, γ_M` as given (note the halved `γ_0` convention).
    pub fn from_coefficients(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a Chebyshev series needs at least γ_0");
        ChebyshevSeries { coeffs }
    }

    /// The single polynomial `T_j`.
    pub fn unit(j: usize) -> Self {
        let mut coeffs = vec![T::zero(); j + 1];
        coeffs[j] = if j == 0 { T::lit(2.0) } else { T::one() };
        ChebyshevSeries { coeffs }
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coeffs
    }

    /// Interpolation order `M`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `Σ_{i=M-3}^{M} |γ_i|`.
    pub fn tail(&self) -> T {
        let m = self.order();
        self.coeffs[m.saturating_sub(3)..].iter().map(|c| c.abs()).sum()
    }

    /// Clenshaw evaluation at `x ∈ [-1, 1]`.
    pub fn eval(&self, x: T) -> T {
        let two_x = x + x;
        let mut b1 = T::zero();
        let mut b2 = T::zero();
        for &c in self.coeffs.iter().skip(1).rev() {
            let b0 = two_x * b1 - b2 + c;
            b2 = b1;
            b1 = b0;
        }
        x * b1 - b2 + T::lit(0.5) * self.coeffs[0]
    }

    /// Coefficient-wise sum.
    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let at = |v: &[T], i: usize| v.get(i).copied().unwrap_or_else(T::zero);
        ChebyshevSeries { coeffs: (0..len).map(|i| at(&self.coeffs, i) + at(&other.coeffs, i)).collect() }
    }

    pub fn scale(&self, factor: T) -> Self {
        ChebyshevSeries { coeffs: self.coeffs.iter().map(|&c| c * factor).collect() }
    }
}

/// `cos(iπ/M)` for `i = 0..=M`, symmetric about zero to the last bit.
pub fn chebyshev_nodes<T: Scalar>(order: usize) -> Vec<T> {
    (0..=order).map(|i| node(i, order)).collect()
}

fn node<T: Scalar>(i: usize, order: usize) -> T {
    // cos(iπ/M) = sin(π(M - 2i) / (2M))
    let num = order as i64 - 2 * i as i64;
    (T::PI() * T::lit(num as f64) / T::of_usize(2 * order)).sin()
}

/// `γ_j = (2 - δ_jM)/M · Σ''_i f(ξ_i) cos(ijπ/M)` by a length-`2M` real FFT of
/// the even extension of the samples. `M` must be a power of two for speed,
/// though any `M >= 1` is accepted.
pub fn chebyshev_coefficients<T: Scalar>(samples: &[T]) -> Vec<T> {
    let order = samples.len() - 1;
    assert!(order >= 1, "need at least two samples");
    let len = 2 * order;
    let mut buf: Vec<Complex<T>> = Vec::with_capacity(len);
    buf.extend(samples.iter().map(|&v| Complex::new(v, T::zero())));
    buf.extend(samples[1..order].iter().rev().map(|&v| Complex::new(v, T::zero())));
    let mut planner = FftPlanner::<T>::new();
    planner.plan_fft_forward(len).process(&mut buf);
    let m = T::of_usize(order);
    (0..=order)
        .map(|j| {
            let v = buf[j].re / m;
            if j == order {
                v * T::lit(0.5)
            } else {
                v
            }
        })
        .collect()
}

/// Direct `O(M²)` evaluation of the same coefficients.
pub fn chebyshev_coefficients_direct<T: Scalar>(samples: &[T]) -> Vec<T> {
    let order = samples.len() - 1;
    let m = T::of_usize(order);
    (0..=order)
        .map(|j| {
            let mut acc = T::zero();
            for (i, &f) in samples.iter().enumerate() {
                let half = if i == 0 || i == order { T::lit(0.5) } else { T::one() };
                // cos(ijπ/M) with the angle reduced mod 2M
                let r = (i * j) % (2 * order);
                let c = node::<T>(r.min(2 * order - r), order);
                acc = acc + half * f * c;
            }
            let scale = if j == order { T::one() } else { T::lit(2.0) };
            scale * acc / m
        })
        .collect()
}

fn sample<T: Scalar>(f: &impl Fn(T) -> T, x: T) -> Result<T> {
    let v = f(x);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite("sampled function"))
    }
}

/// Adaptive interpolation of `f` on `[-1, 1]`.
///
/// Tries `M = 32, 64, …` up to `max_order`, reusing all earlier samples
/// (the old grid is the even-index subset of the doubled one), and stops at
/// the first `M` with `Σ_{i=M-3}^{M} |γ_i| < eps`.
pub fn chebyshev_fit<T: Scalar>(f: impl Fn(T) -> T, eps: T, max_order: usize) -> Result<ChebyshevSeries<T>> {
    if !(eps > T::zero()) || !eps.is_finite() {
        return Err(Error::InvalidTolerance(eps.to_f64_lossy()));
    }
    let mut order = INITIAL_ORDER;
    let mut best: Option<ChebyshevSeries<T>> = None;
    if order <= max_order {
        let mut samples = (0..=order).map(|i| sample(&f, node(i, order))).collect::<Result<Vec<T>>>()?;
        loop {
            let series = ChebyshevSeries { coeffs: chebyshev_coefficients(&samples) };
            let tail = series.tail();
            if tail < eps {
                return Ok(series);
            }
            if best.as_ref().is_none_or(|b| tail < b.tail()) {
                best = Some(series);
            }
            if 2 * order > max_order {
                break;
            }
            let doubled = 2 * order;
            let mut next = Vec::with_capacity(doubled + 1);
            for i in 0..=doubled {
                if i % 2 == 0 {
                    next.push(samples[i / 2]);
                } else {
                    next.push(sample(&f, node(i, doubled))?);
                }
            }
            samples = next;
            order = doubled;
        }
    }
    let (best_order, best_tail, best_coefficients) = match best {
        Some(b) => (b.order(), b.tail().to_f64_lossy(), b.coeffs.iter().map(|c| c.to_f64_lossy()).collect()),
        None => (0, f64::INFINITY, Vec::new()),
    };
    Err(Error::QuadratureNotConverged { max_order, best_order, best_tail, best_coefficients })
}

fn check_exponent<T: Scalar>(name: &'static str, v: T) -> Result<()> {
    if v.is_finite() && v > -T::one() {
        Ok(())
    } else {
        Err(Error::InvalidJacobiExponent { name, value: v.to_f64_lossy() })
    }
}

/// `J(a, b; S) = ∫_{-1}^{1} (1-x)^a (1+x)^b S(x) dx` as `(2^{s-1} B(a+1, b+1)) · δ`
/// with the prefactor kept in log form.
fn jacobi_integral_parts<T: Scalar>(a: T, b: T, series: &ChebyshevSeries<T>) -> (T, T) {
    let r = b - a;
    let s = a + b + T::one();
    let gamma = &series.coeffs;
    let order = series.order();
    let two = T::lit(2.0);
    // d_{M+1} = d_M = 0; d_{i-1} = (2r d_i + (i-s) d_{i+1} - 2γ_i)/(i+s)
    let mut d_next = T::zero(); // d_{i+1}
    let mut d_cur = T::zero(); // d_i
    let mut d1 = T::zero();
    for i in (1..=order).rev() {
        let it = T::of_usize(i);
        debug_assert!(it + s > T::zero());
        let d_prev = (two * r * d_cur + (it - s) * d_next - two * gamma[i]) / (it + s);
        d_next = d_cur;
        d_cur = d_prev;
        if i == 1 {
            d1 = d_next;
        }
    }
    let d0 = d_cur;
    let delta = gamma[0] - r * d0 + s * d1;
    let log_scale = (s - T::one()) * two.ln() + ln_beta(a + T::one(), b + T::one());
    (log_scale, delta)
}

/// Exact integral of a Chebyshev sum against `(1-x)^a (1+x)^b`.
pub fn jacobi_integral<T: Scalar>(a: T, b: T, series: &ChebyshevSeries<T>) -> Result<T> {
    check_exponent("a", a)?;
    check_exponent("b", b)?;
    let (log_scale, delta) = jacobi_integral_parts(a, b, series);
    Ok(log_scale.exp() * delta)
}

/// `ϑ(x) = (1-x)^l (1+x)^k / ω((1+x)/2)` for a positive weight sequence.
pub fn theta<T: Scalar>(weights: &[T], cons: ConstraintSpec) -> Result<impl Fn(T) -> T> {
    if weights.is_empty() {
        return Err(Error::Empty);
    }
    for (index, &w) in weights.iter().enumerate() {
        if !(w > T::zero()) || !w.is_finite() {
            return Err(Error::NonPositiveWeight { index, value: w.to_f64_lossy() });
        }
    }
    let weights = weights.to_vec();
    Ok(move |x: T| {
        let t = T::lit(0.5) * (T::one() + x);
        let s = T::one() - t;
        let mut buf = weights.clone();
        for level in 1..buf.len() {
            for i in 0..(buf.len() - level) {
                buf[i] = s * buf[i] + t * buf[i + 1];
            }
        }
        (T::one() - x).powi(cons.l as i32) * (T::one() + x).powi(cons.k as i32) / buf[0]
    })
}

/// The moments `I_h = ∫_0^1 (1-t)^α t^β B^N_h(t) / ω(t) dt` for `h = k..=N-l`.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentVector<T> {
    first: usize,
    total_degree: usize,
    values: Vec<T>,
    chebyshev_order: usize,
    tail: T,
}

impl<T: Scalar> MomentVector<T> {
    /// `I_h`; panics outside `k..=N-l`.
    pub fn get(&self, h: usize) -> T {
        self.values[h - self.first]
    }

    pub fn try_get(&self, h: usize) -> Option<T> {
        h.checked_sub(self.first).and_then(|i| self.values.get(i).copied())
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    /// Index of the first stored moment (`k`).
    pub fn first_index(&self) -> usize {
        self.first
    }

    /// `N = n + m`.
    pub fn total_degree(&self) -> usize {
        self.total_degree
    }

    /// Interpolation order `M` of the fit of `ϑ`.
    pub fn chebyshev_order(&self) -> usize {
        self.chebyshev_order
    }

    pub fn tail(&self) -> T {
        self.tail
    }
}

/// All moments needed for a degree-`m` approximation of `curve`, from one
/// Chebyshev fit of `ϑ` and one exact Jacobi integral per index.
pub fn rational_moments<T: Scalar>(
    curve: &RationalBezierCurve<T>,
    m: usize,
    cons: ConstraintSpec,
    weight: JacobiWeight<T>,
    config: QuadratureConfig<T>,
) -> Result<MomentVector<T>> {
    let n = curve.degree();
    let total = n + m;
    cons.check(total)?;
    let series = chebyshev_fit(theta(curve.weights(), cons)?, config.eps, config.max_order)?;
    let ln2 = T::lit(2.0).ln();
    let sigma = weight.sigma();
    let (k, l) = (cons.k, cons.l);
    let values = (k..=total - l)
        .map(|h| {
            let a = weight.alpha() + T::of_usize(total - l - h);
            let b = weight.beta() - T::of_usize(k) + T::of_usize(h);
            let (log_scale, delta) = jacobi_integral_parts(a, b, &series);
            let ln_factor = log_scale + ln_binomial::<T>(total, h) - (sigma + T::of_usize(total)) * ln2;
            LogValue::from_value(delta).scale_ln(ln_factor).value()
        })
        .collect::<Vec<T>>();
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("rational moments"));
    }
    Ok(MomentVector {
        first: k,
        total_degree: total,
        values,
        chebyshev_order: series.order(),
        tail: series.tail(),
    })
}

impl<T: Scalar> Zero for ChebyshevSeries<T> {
    fn zero() -> Self {
        ChebyshevSeries { coeffs: vec![T::zero()] }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl<T: Scalar> std::ops::Add for ChebyshevSeries<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        ChebyshevSeries::add(&self, &rhs)
    }
}
