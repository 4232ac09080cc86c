//! Two comparison methods: dropping the weights of a degree-elevated rational
//! curve, and progressive iterative approximation (PIA) of curve samples.

use crate::bezier::{BezierCurve, RationalBezierCurve};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A rational curve elevated `h` times, kept in rational form.
#[derive(Debug, Clone, PartialEq)]
pub struct ElevationState<T> {
    pub elevation: usize,
    pub curve: RationalBezierCurve<T>,
}

impl<T: Scalar> ElevationState<T> {
    pub fn new(curve: &RationalBezierCurve<T>, h: usize) -> Self {
        ElevationState { elevation: h, curve: curve.degree_elevate(h) }
    }

    /// The elevated control points read as a polynomial curve.
    pub fn polynomial(&self) -> BezierCurve<T> {
        BezierCurve::new(self.curve.dim(), self.curve.coords().to_vec()).expect("valid elevated curve")
    }
}

/// Degree-`n+h` polynomial whose control points are those of the `h`-times
/// elevated rational curve, weights discarded. Converges to `R` as `h → ∞`.
pub fn huang_approximation<T: Scalar>(curve: &RationalBezierCurve<T>, h: usize) -> BezierCurve<T> {
    ElevationState::new(curve, h).polynomial()
}

/// Node placement for [`lu_iterate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LuNodes {
    /// `t_i = i/m`.
    #[default]
    Uniform,
    /// `t_i = (1 - cos(iπ/m))/2`.
    Chebyshev,
}

impl LuNodes {
    pub fn nodes<T: Scalar>(self, m: usize) -> Vec<T> {
        let mt = T::of_usize(m.max(1));
        (0..=m)
            .map(|i| match self {
                LuNodes::Uniform => T::of_usize(i) / mt,
                LuNodes::Chebyshev => {
                    if i == 0 {
                        T::zero()
                    } else if i == m {
                        T::one()
                    } else {
                        (T::one() - (T::PI() * T::of_usize(i) / mt).cos()) * T::lit(0.5)
                    }
                }
            })
            .collect()
    }
}

/// Iteration state of the PIA scheme `v^{h+1}_i = v^h_i + λ(v^0_i - V^h(t_i))`.
#[derive(Debug, Clone, PartialEq)]
pub struct LuState<T> {
    nodes: Vec<T>,
    targets: Vec<Vec<T>>,
    control: Vec<Vec<T>>,
    lambda: T,
    iteration: usize,
}

impl<T: Scalar> LuState<T> {
    /// Starts with `v^0_i = R(t_i)`; nodes must rise strictly from 0 to 1.
    pub fn new(curve: &RationalBezierCurve<T>, nodes: Vec<T>, lambda: T) -> Result<Self> {
        let ok_ends = nodes.first() == Some(&T::zero()) && nodes.last() == Some(&T::one());
        if nodes.len() < 2 || !ok_ends || nodes.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::NonMonotoneNodes);
        }
        if !lambda.is_finite() {
            return Err(Error::NonFinite("lambda"));
        }
        let targets: Vec<Vec<T>> = nodes.iter().map(|&t| curve.eval(t)).collect();
        Ok(LuState { control: targets.clone(), targets, nodes, lambda, iteration: 0 })
    }

    pub fn iteration(&self) -> usize {
        self.iteration
    }

    pub fn nodes(&self) -> &[T] {
        &self.nodes
    }

    pub fn lambda(&self) -> T {
        self.lambda
    }

    pub fn curve(&self) -> BezierCurve<T> {
        BezierCurve::from_points(&self.control).expect("valid control polygon")
    }

    /// Current differences `v^0_i - V^h(t_i)`.
    fn differences(&self) -> Vec<Vec<T>> {
        let curve = self.curve();
        self.nodes
            .iter()
            .zip(&self.targets)
            .map(|(&t, v0)| v0.iter().zip(curve.eval(t)).map(|(&a, b)| a - b).collect())
            .collect()
    }

    /// `max_i ‖v^0_i - V^h(t_i)‖`.
    pub fn residual(&self) -> T {
        self.differences()
            .iter()
            .map(|d| d.iter().map(|&x| x * x).sum::<T>().sqrt())
            .fold(T::zero(), T::max)
    }

    pub fn step(&mut self) {
        let diffs = self.differences();
        for (v, d) in self.control.iter_mut().zip(diffs) {
            for (vc, dc) in v.iter_mut().zip(d) {
                *vc = *vc + self.lambda * dc;
            }
        }
        self.iteration += 1;
    }
}

/// Result of [`lu_iterate`].
#[derive(Debug, Clone, PartialEq)]
pub struct LuOutcome<T> {
    pub curve: BezierCurve<T>,
    /// Interpolation residual before each step and after the last: `iters + 1` entries.
    pub residuals: Vec<T>,
    pub state: LuState<T>,
}

/// Runs `iters` PIA steps towards the samples `R(t_i)` at degree `nodes.len() - 1`.
pub fn lu_iterate<T: Scalar>(
    curve: &RationalBezierCurve<T>,
    nodes: Vec<T>,
    lambda: T,
    iters: usize,
) -> Result<LuOutcome<T>> {
    let mut state = LuState::new(curve, nodes, lambda)?;
    let mut residuals = Vec::with_capacity(iters + 1);
    residuals.push(state.residual());
    for _ in 0..iters {
        state.step();
        residuals.push(state.residual());
    }
    Ok(LuOutcome { curve: state.curve(), residuals, state })
}
