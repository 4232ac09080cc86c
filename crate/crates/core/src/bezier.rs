//! Bernstein and Bézier primitives for polynomial and rational curves in `R^d`.
//!
//! Rational curves are manipulated in homogeneous form `(ω_i r_i, ω_i)`;
//! projection back to `R^d` only happens on evaluation or when control data
//! is handed out.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::special::{binomial, falling_factorial, ln_binomial};

/// Which end of the parameter interval `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum End {
    Left,
    Right,
}

/// `B^n_i(t) = C(n,i) t^i (1-t)^{n-i}`.
pub fn bernstein_eval<T: Scalar>(n: usize, i: usize, t: T) -> Result<T> {
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, degree: n });
    }
    Ok(bernstein_unchecked(n, i, t))
}

pub(crate) fn bernstein_unchecked<T: Scalar>(n: usize, i: usize, t: T) -> T {
    let s = T::one() - t;
    let powers = t.powi(i as i32) * s.powi((n - i) as i32);
    if n <= crate::special::BINOM_TABLE_MAX {
        binomial::<T>(n, i) * powers
    } else if powers == T::zero() {
        T::zero()
    } else {
        (ln_binomial::<T>(n, i) + T::of_usize(i) * t.ln() + T::of_usize(n - i) * s.ln()).exp()
    }
}

/// `Δ^j c_0` with `Δ^0 c_h = c_h` and `Δ^j c_h = Δ^{j-1}c_{h+1} - Δ^{j-1}c_h`.
pub fn forward_difference<T: Scalar>(seq: &[T], j: usize) -> Result<T> {
    if seq.len() < j + 1 {
        return Err(Error::InsufficientLength { len: seq.len(), order: j });
    }
    let mut work: Vec<T> = seq[..=j].to_vec();
    for order in 0..j {
        for h in 0..(j - order) {
            work[h] = work[h + 1] - work[h];
        }
    }
    Ok(work[0])
}

/// In-place de Casteljau on `rows` points of width `dim`; result in `buf[..dim]`.
fn de_casteljau_in_place<T: Scalar>(buf: &mut [T], dim: usize, t: T) {
    let rows = buf.len() / dim;
    let s = T::one() - t;
    for level in 1..rows {
        for i in 0..(rows - level) {
            for c in 0..dim {
                buf[i * dim + c] = s * buf[i * dim + c] + t * buf[(i + 1) * dim + c];
            }
        }
    }
}

/// Elevation of flat control data (`rows` points of width `dim`) by `h`.
fn elevate_flat<T: Scalar>(data: &[T], dim: usize, h: usize) -> Vec<T> {
    let n = data.len() / dim - 1;
    if h == 0 {
        return data.to_vec();
    }
    let mut out = vec![T::zero(); (n + h + 1) * dim];
    for i in 0..=(n + h) {
        let lo = i.saturating_sub(h);
        let hi = i.min(n);
        let denom = binomial::<T>(n + h, i);
        for j in lo..=hi {
            let coef = binomial::<T>(n, j) * binomial::<T>(h, i - j) / denom;
            for c in 0..dim {
                out[i * dim + c] = out[i * dim + c] + coef * data[j * dim + c];
            }
        }
    }
    out
}

/// Splits flat control data at `t0` via the de Casteljau triangle.
fn subdivide_flat<T: Scalar>(data: &[T], dim: usize, t0: T) -> (Vec<T>, Vec<T>) {
    let rows = data.len() / dim;
    let mut work = data.to_vec();
    let mut left = Vec::with_capacity(data.len());
    let mut right = vec![T::zero(); data.len()];
    let s = T::one() - t0;
    left.extend_from_slice(&work[..dim]);
    right[(rows - 1) * dim..].copy_from_slice(&work[(rows - 1) * dim..]);
    for level in 1..rows {
        for i in 0..(rows - level) {
            for c in 0..dim {
                work[i * dim + c] = s * work[i * dim + c] + t0 * work[(i + 1) * dim + c];
            }
        }
        left.extend_from_slice(&work[..dim]);
        let last = rows - level - 1;
        let target = (rows - 1 - level) * dim;
        right[target..target + dim].copy_from_slice(&work[last * dim..(last + 1) * dim]);
    }
    (left, right)
}

fn check_param<T: Scalar>(t: T) -> Result<()> {
    if t >= T::zero() && t <= T::one() {
        Ok(())
    } else {
        Err(Error::ParameterOutOfRange { value: t.to_f64_lossy(), range: "[0, 1]" })
    }
}

fn check_points<T: Scalar>(dim: usize, coords: &[T]) -> Result<usize> {
    if dim == 0 || coords.is_empty() {
        return Err(Error::Empty);
    }
    if !coords.len().is_multiple_of(dim) {
        return Err(Error::DimensionMismatch { expected: dim, got: coords.len() % dim });
    }
    if coords.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("control points"));
    }
    Ok(coords.len() / dim - 1)
}

fn flatten<T: Scalar>(rows: &[Vec<T>]) -> Result<(usize, Vec<T>)> {
    let dim = rows.first().map(Vec::len).ok_or(Error::Empty)?;
    let mut flat = Vec::with_capacity(rows.len() * dim);
    for row in rows {
        if row.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, got: row.len() });
        }
        flat.extend_from_slice(row);
    }
    Ok((dim, flat))
}

/// A degree-`m` polynomial Bézier curve in `R^d`.
#[derive(Debug, Clone, PartialEq)]
pub struct BezierCurve<T> {
    dim: usize,
    coords: Vec<T>,
}

impl<T: Scalar> BezierCurve<T> {
    /// Builds a curve from row-major coordinates (`(m+1) · dim` values).
    pub fn new(dim: usize, coords: Vec<T>) -> Result<Self> {
        check_points(dim, &coords)?;
        Ok(BezierCurve { dim, coords })
    }

    pub fn from_points(points: &[Vec<T>]) -> Result<Self> {
        let (dim, coords) = flatten(points)?;
        Self::new(dim, coords)
    }

    /// Scalar-valued curve (`d = 1`).
    pub fn from_scalars(values: &[T]) -> Result<Self> {
        Self::new(1, values.to_vec())
    }

    pub fn degree(&self) -> usize {
        self.coords.len() / self.dim - 1
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn point(&self, i: usize) -> &[T] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn points(&self) -> impl Iterator<Item = &[T]> {
        self.coords.chunks(self.dim)
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    /// Control values of coordinate `c`.
    pub fn component(&self, c: usize) -> Vec<T> {
        self.points().map(|p| p[c]).collect()
    }

    /// De Casteljau evaluation.
    pub fn eval(&self, t: T) -> Vec<T> {
        let mut buf = self.coords.clone();
        de_casteljau_in_place(&mut buf, self.dim, t);
        buf.truncate(self.dim);
        buf
    }

    /// Checked evaluation for `t ∈ [0, 1]`.
    pub fn poly_eval(&self, t: T) -> Result<Vec<T>> {
        check_param(t)?;
        Ok(self.eval(t))
    }

    pub fn degree_elevate(&self, h: usize) -> Self {
        BezierCurve { dim: self.dim, coords: elevate_flat(&self.coords, self.dim, h) }
    }

    pub fn subdivide(&self, t0: T) -> Result<(Self, Self)> {
        if !(t0 > T::zero() && t0 < T::one()) {
            return Err(Error::ParameterOutOfRange { value: t0.to_f64_lossy(), range: "(0, 1)" });
        }
        let (l, r) = subdivide_flat(&self.coords, self.dim, t0);
        Ok((BezierCurve { dim: self.dim, coords: l }, BezierCurve { dim: self.dim, coords: r }))
    }

    /// `U^{(j)}(0) = m!/(m-j)! Δ^j u_0` or `U^{(j)}(1) = m!/(m-j)! Δ^j u_{m-j}`.
    pub fn endpoint_derivative(&self, end: End, j: usize) -> Result<Vec<T>> {
        let m = self.degree();
        if j > m {
            return Err(Error::OrderTooHigh { order: j, degree: m });
        }
        let scale = falling_factorial::<T>(m, j);
        (0..self.dim)
            .map(|c| {
                let comp = self.component(c);
                let window = match end {
                    End::Left => &comp[..=j],
                    End::Right => &comp[m - j..],
                };
                forward_difference(window, j).map(|d| scale * d)
            })
            .collect()
    }
}

/// A degree-`n` rational Bézier curve with positive weights.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalBezierCurve<T> {
    dim: usize,
    coords: Vec<T>,
    weights: Vec<T>,
}

impl<T: Scalar> RationalBezierCurve<T> {
    pub fn new(dim: usize, coords: Vec<T>, weights: Vec<T>) -> Result<Self> {
        let n = check_points(dim, &coords)?;
        if weights.len() != n + 1 {
            return Err(Error::LengthMismatch { expected: n + 1, got: weights.len() });
        }
        for (index, &w) in weights.iter().enumerate() {
            if !w.is_finite() {
                return Err(Error::NonFinite("weights"));
            }
            if w <= T::zero() {
                return Err(Error::NonPositiveWeight { index, value: w.to_f64_lossy() });
            }
        }
        Ok(RationalBezierCurve { dim, coords, weights })
    }

    pub fn from_points(points: &[Vec<T>], weights: &[T]) -> Result<Self> {
        let (dim, coords) = flatten(points)?;
        Self::new(dim, coords, weights.to_vec())
    }

    /// A polynomial curve viewed as rational with unit weights.
    pub fn from_polynomial(curve: &BezierCurve<T>) -> Self {
        RationalBezierCurve {
            dim: curve.dim,
            coords: curve.coords.clone(),
            weights: vec![T::one(); curve.degree() + 1],
        }
    }

    fn from_homogeneous(dim: usize, homog: &[T]) -> Self {
        let width = dim + 1;
        let rows = homog.len() / width;
        let mut coords = Vec::with_capacity(rows * dim);
        let mut weights = Vec::with_capacity(rows);
        for row in homog.chunks(width) {
            let w = row[dim];
            weights.push(w);
            coords.extend(row[..dim].iter().map(|&v| v / w));
        }
        RationalBezierCurve { dim, coords, weights }
    }

    pub fn degree(&self) -> usize {
        self.weights.len() - 1
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn point(&self, i: usize) -> &[T] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn points(&self) -> impl Iterator<Item = &[T]> {
        self.coords.chunks(self.dim)
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    pub fn component(&self, c: usize) -> Vec<T> {
        self.points().map(|p| p[c]).collect()
    }

    /// Homogeneous control data: rows `(ω_i r_i, ω_i)` of width `d + 1`.
    pub fn homogeneous(&self) -> Vec<T> {
        let mut out = Vec::with_capacity(self.weights.len() * (self.dim + 1));
        for (p, &w) in self.points().zip(&self.weights) {
            out.extend(p.iter().map(|&v| v * w));
            out.push(w);
        }
        out
    }

    /// `ω(t) = Σ ω_i B^n_i(t)` by de Casteljau.
    pub fn weight_eval(&self, t: T) -> T {
        let mut buf = self.weights.clone();
        de_casteljau_in_place(&mut buf, 1, t);
        buf[0]
    }

    /// `Q_n(t)/ω(t)` via homogeneous de Casteljau; endpoints return the raw control points.
    pub fn eval(&self, t: T) -> Vec<T> {
        let n = self.degree();
        if t == T::zero() {
            return self.point(0).to_vec();
        }
        if t == T::one() {
            return self.point(n).to_vec();
        }
        let mut buf = self.homogeneous();
        de_casteljau_in_place(&mut buf, self.dim + 1, t);
        let w = buf[self.dim];
        buf.truncate(self.dim);
        buf.iter_mut().for_each(|v| *v = *v / w);
        buf
    }

    /// Checked evaluation for `t ∈ [0, 1]`.
    pub fn rational_eval(&self, t: T) -> Result<Vec<T>> {
        check_param(t)?;
        Ok(self.eval(t))
    }

    pub fn degree_elevate(&self, h: usize) -> Self {
        let elevated = elevate_flat(&self.homogeneous(), self.dim + 1, h);
        Self::from_homogeneous(self.dim, &elevated)
    }

    /// Left and right pieces, each reparameterised to `[0, 1]`.
    pub fn subdivide(&self, t0: T) -> Result<(Self, Self)> {
        if !(t0 > T::zero() && t0 < T::one()) {
            return Err(Error::ParameterOutOfRange { value: t0.to_f64_lossy(), range: "(0, 1)" });
        }
        let (l, r) = subdivide_flat(&self.homogeneous(), self.dim + 1, t0);
        Ok((Self::from_homogeneous(self.dim, &l), Self::from_homogeneous(self.dim, &r)))
    }

    /// Splits at several increasing parameters of the original curve.
    pub fn split_at(&self, params: &[T]) -> Result<Vec<Self>> {
        let mut pieces = Vec::with_capacity(params.len() + 1);
        let mut rest = self.clone();
        let mut consumed = T::zero();
        for &t in params {
            if !(t > consumed && t < T::one()) {
                return Err(Error::ParameterOutOfRange {
                    value: t.to_f64_lossy(),
                    range: "increasing values in (0, 1)",
                });
            }
            let local = (t - consumed) / (T::one() - consumed);
            let (left, right) = rest.subdivide(local)?;
            pieces.push(left);
            rest = right;
            consumed = t;
        }
        pieces.push(rest);
        Ok(pieces)
    }

    /// True if every weight equals the first one.
    pub fn has_uniform_weights(&self) -> bool {
        self.weights.iter().all(|&w| w == self.weights[0])
    }
}

/// Ordered sequence of segments parameterised on `[0, 1]` each.
#[derive(Debug, Clone, PartialEq)]
pub struct CompositeCurve<C> {
    segments: Vec<C>,
    continuity_order: usize,
}

/// Access to a segment's end points, for join validation.
pub trait Segment<T: Scalar> {
    fn start_point(&self) -> Vec<T>;
    fn end_point(&self) -> Vec<T>;
}

impl<T: Scalar> Segment<T> for BezierCurve<T> {
    fn start_point(&self) -> Vec<T> {
        self.point(0).to_vec()
    }
    fn end_point(&self) -> Vec<T> {
        self.point(self.degree()).to_vec()
    }
}

impl<T: Scalar> Segment<T> for RationalBezierCurve<T> {
    fn start_point(&self) -> Vec<T> {
        self.eval(T::zero())
    }
    fn end_point(&self) -> Vec<T> {
        self.eval(T::one())
    }
}

impl<C> CompositeCurve<C> {
    pub fn segments(&self) -> &[C] {
        &self.segments
    }

    pub fn into_segments(self) -> Vec<C> {
        self.segments
    }

    pub fn continuity_order(&self) -> usize {
        self.continuity_order
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }
}

impl<C> CompositeCurve<C> {
    /// Checks that consecutive segments share their join point (relative tolerance `1e-12`).
    pub fn new<T: Scalar>(segments: Vec<C>, continuity_order: usize) -> Result<Self>
    where
        C: Segment<T>,
    {
        if segments.is_empty() {
            return Err(Error::Empty);
        }
        let tol = T::lit(1e-12);
        for (join, pair) in segments.windows(2).enumerate() {
            let a = pair[0].end_point();
            let b = pair[1].start_point();
            if a.len() != b.len() {
                return Err(Error::DimensionMismatch { expected: a.len(), got: b.len() });
            }
            let ok = a
                .iter()
                .zip(&b)
                .all(|(&x, &y)| (x - y).abs() <= tol * (T::one() + x.abs().max(y.abs())));
            if !ok {
                return Err(Error::BrokenJoin { join, next: join + 1 });
            }
        }
        Ok(CompositeCurve { segments, continuity_order })
    }

    /// Wraps segments without join validation (used for approximation output).
    pub fn from_segments_unchecked(segments: Vec<C>, continuity_order: usize) -> Self {
        CompositeCurve { segments, continuity_order }
    }
}
