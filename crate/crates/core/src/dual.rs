//! Constrained dual Bernstein basis.
//!
//! For a degree `m` and constraint orders `(k, l)` the polynomials
//! `D_k, …, D_{m-l}` span the same space as `B^m_k, …, B^m_{m-l}` and satisfy
//! `⟨D_i, B^m_j⟩ = δ_ij` under the Jacobi inner product
//! `⟨f, g⟩ = ∫_0^1 (1-t)^α t^β f(t) g(t) dt`. Their Bernstein coefficients
//! `c_ij` form a symmetric table, built here by a closed-form first row and a
//! five-term recurrence for the remaining rows.

use std::ops::{Div, Mul};

use crate::bezier::bernstein_unchecked;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::special::{ln_beta, ln_binomial, ln_pochhammer, odd, LogValue};

/// Largest degree accepted by [`build_ctable`] in double precision.
///
/// The forward recurrence loses digits as `m` grows; at `m = 25` the table
/// still agrees with a dense Gram inverse to about six digits.
pub const MAX_DUAL_DEGREE: usize = 25;

/// Endpoint constraint orders: `k` derivatives matched at `t = 0`, `l` at `t = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ConstraintSpec {
    pub k: usize,
    pub l: usize,
}

impl ConstraintSpec {
    pub fn new(k: usize, l: usize) -> Self {
        ConstraintSpec { k, l }
    }

    /// Checks `k + l <= m`.
    pub fn check(&self, m: usize) -> Result<()> {
        if self.k + self.l > m {
            Err(Error::ConstraintTooLarge { k: self.k, l: self.l, m })
        } else {
            Ok(())
        }
    }

    /// The constraints seen after the reflection `t ↦ 1 - t`.
    pub fn reflected(&self) -> Self {
        ConstraintSpec { k: self.l, l: self.k }
    }
}

/// Jacobi weight `(1-t)^α t^β` on `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiWeight<T> {
    alpha: T,
    beta: T,
}

impl<T: Scalar> JacobiWeight<T> {
    pub fn new(alpha: T, beta: T) -> Result<Self> {
        for (name, v) in [("alpha", alpha), ("beta", beta)] {
            if !v.is_finite() || v <= -T::one() {
                return Err(Error::InvalidJacobiExponent { name, value: v.to_f64_lossy() });
            }
        }
        Ok(JacobiWeight { alpha, beta })
    }

    /// The Legendre weight `α = β = 0`.
    pub fn legendre() -> Self {
        JacobiWeight { alpha: T::zero(), beta: T::zero() }
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn beta(&self) -> T {
        self.beta
    }

    /// `σ = α + β + 1`.
    pub fn sigma(&self) -> T {
        self.alpha + self.beta + T::one()
    }

    pub fn reflected(&self) -> Self {
        JacobiWeight { alpha: self.beta, beta: self.alpha }
    }
}

/// Bernstein coefficients `c_ij(m, k, l, α, β)` of the constrained dual basis.
#[derive(Debug, Clone, PartialEq)]
pub struct DualBasisTable<T> {
    m: usize,
    cons: ConstraintSpec,
    weight: JacobiWeight<T>,
    c: Vec<T>,
}

impl<T: Scalar> DualBasisTable<T> {
    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn constraints(&self) -> ConstraintSpec {
        self.cons
    }

    pub fn weight(&self) -> JacobiWeight<T> {
        self.weight
    }

    /// Interior index range `k ..= m-l`.
    pub fn range(&self) -> std::ops::RangeInclusive<usize> {
        self.cons.k..=self.m - self.cons.l
    }

    fn size(&self) -> usize {
        self.m - self.cons.k - self.cons.l + 1
    }

    /// `c_ij`, zero outside the interior range.
    pub fn get(&self, i: usize, j: usize) -> T {
        if self.range().contains(&i) && self.range().contains(&j) {
            let (a, b) = (i - self.cons.k, j - self.cons.k);
            self.c[a * self.size() + b]
        } else {
            T::zero()
        }
    }

    /// `D^{(m,k,l)}_i(t) = Σ_j c_ij B^m_j(t)`.
    pub fn dual_eval(&self, i: usize, t: T) -> Result<T> {
        if !self.range().contains(&i) {
            return Err(Error::IndexOutOfRange { index: i, degree: self.m });
        }
        Ok(self.range().map(|j| self.get(i, j) * bernstein_unchecked(self.m, j, t)).sum())
    }

    /// `K_ij = ⟨B^m_j, D_i⟩` for a boundary index `j`.
    pub fn k_coefficient(&self, i: usize, j: usize) -> Result<T> {
        k_coefficient(i, j, self.m, self.cons, self.weight)
    }
}

fn validate<T: Scalar>(m: usize, cons: ConstraintSpec, _w: &JacobiWeight<T>) -> Result<()> {
    cons.check(m)?;
    if m > MAX_DUAL_DEGREE {
        return Err(Error::DegreeCap { m, cap: MAX_DUAL_DEGREE });
    }
    Ok(())
}

/// Last entry of the first row, `c_{k, m-l}`, in closed form.
fn corner_entry<T: Scalar>(m: usize, cons: ConstraintSpec, w: JacobiWeight<T>) -> T {
    let (k, l) = (cons.k, cons.l);
    let len = m - k - l;
    let two = T::lit(2.0);
    let poch = ln_pochhammer(w.sigma() + T::of_usize(2 * k + 2 * l + 1), len);
    let ln_rest = -ln_binomial::<T>(m, k)
        - ln_binomial::<T>(m, l)
        - ln_beta(w.alpha + two * T::of_usize(l) + T::one(), w.beta + two * T::of_usize(k) + T::one())
        - ln_factorial::<T>(len);
    poch.scale_ln(ln_rest).negate_if(odd(len)).value()
}

fn ln_factorial<T: Scalar>(n: usize) -> T {
    (2..=n).map(|v| T::of_usize(v).ln()).sum()
}

/// First row `c_kj` straight from its product formula (cross-check for the
/// right-to-left ratio recurrence).
pub fn first_row_closed_form<T: Scalar>(m: usize, cons: ConstraintSpec, w: JacobiWeight<T>) -> Vec<T> {
    let (k, l) = (cons.k, cons.l);
    let len = m - k - l;
    let two = T::lit(2.0);
    let kb2 = T::of_usize(k) + w.beta + two;
    let a2l1 = w.alpha + two * T::of_usize(l) + T::one();
    let lead = ln_pochhammer(w.sigma() + T::of_usize(2 * k + 2 * l + 1), len)
        .mul(ln_pochhammer(kb2, m - l))
        .scale_ln(
            -ln_binomial::<T>(m, k)
                - ln_factorial::<T>(len)
                - ln_beta(a2l1, w.beta + two * T::of_usize(k) + T::one()),
        )
        .negate_if(odd(k));
    (k..=m - l)
        .map(|j| {
            let tail = LogValue::one()
                .scale_ln(ln_binomial::<T>(len, j - k) - ln_binomial::<T>(m, j))
                .div(ln_pochhammer(a2l1, m - l - j))
                .div(ln_pochhammer(kb2, j))
                .negate_if(odd(j));
            lead.mul(tail).value()
        })
        .collect()
}

/// Builds the full `(m-k-l+1)²` table.
///
/// The first row runs right to left from the closed-form corner entry; rows
/// `k+1 ..= m-l` follow from
/// `A(i) c_{i+1,j} = (i-j)(2i+2j-2m-α+β) c_ij + B(j) c_{i,j-1} + A(j) c_{i,j+1} - B(i) c_{i-1,j}`.
pub fn build_ctable<T: Scalar>(
    m: usize,
    cons: ConstraintSpec,
    weight: JacobiWeight<T>,
) -> Result<DualBasisTable<T>> {
    validate(m, cons, &weight)?;
    let (k, l) = (cons.k, cons.l);
    let size = m - k - l + 1;
    let (alpha, beta) = (weight.alpha, weight.beta);
    let mt = T::of_usize(m);
    let kt = T::of_usize(k);
    let lt = T::of_usize(l);
    let one = T::one();
    let two = T::lit(2.0);

    let a_fn = |u: T| (u - mt) * (u - kt + one) * (u + kt + beta + one) / (u + one);
    let b_fn = |u: T| {
        let den = u - mt - one;
        debug_assert!(den != T::zero());
        u * (u - mt - lt - alpha - one) * (u - mt + lt - one) / den
    };

    let mut table = DualBasisTable { m, cons, weight, c: vec![T::zero(); size * size] };
    let idx = |i: usize, j: usize| (i - k) * size + (j - k);

    table.c[idx(k, m - l)] = corner_entry(m, cons, weight);
    for j in (k..m - l).rev() {
        let jt = T::of_usize(j);
        let ratio = (jt - mt) * (jt - kt + one) * (jt + beta + kt + two)
            / ((jt + one) * (jt - mt + lt) * (jt - alpha - lt - mt));
        table.c[idx(k, j)] = ratio * table.c[idx(k, j + 1)];
    }

    for i in k..m - l {
        let it = T::of_usize(i);
        let a_i = a_fn(it);
        let b_i = b_fn(it);
        for j in k..=m - l {
            let jt = T::of_usize(j);
            let mut acc = (it - jt) * (two * it + two * jt - two * mt - alpha + beta) * table.get(i, j);
            if j > k {
                acc = acc + b_fn(jt) * table.get(i, j - 1);
            }
            if j < m - l {
                acc = acc + a_fn(jt) * table.get(i, j + 1);
            }
            if i > k {
                acc = acc - b_i * table.get(i - 1, j);
            }
            let v = acc / a_i;
            if !v.is_finite() {
                return Err(Error::Unstable { i: i + 1, j });
            }
            table.c[idx(i + 1, j)] = v;
        }
    }
    if table.c.iter().any(|v| !v.is_finite()) {
        return Err(Error::Unstable { i: k, j: k });
    }
    Ok(table)
}

/// Closed form of `K_ij = ⟨B^m_j, D^{(m,k,l)}_i⟩` for `j < k` or `j > m - l`.
pub fn k_coefficient<T: Scalar>(
    i: usize,
    j: usize,
    m: usize,
    cons: ConstraintSpec,
    weight: JacobiWeight<T>,
) -> Result<T> {
    cons.check(m)?;
    let (k, l) = (cons.k, cons.l);
    if i < k || i > m - l {
        return Err(Error::IndexOutOfRange { index: i, degree: m });
    }
    if j > m {
        return Err(Error::IndexOutOfRange { index: j, degree: m });
    }
    if j >= k && j <= m - l {
        return Err(Error::InteriorIndex { j, lo: k, hi: m - l });
    }
    let one = T::one();
    let al1 = weight.alpha + T::of_usize(l) + one;
    let bk1 = weight.beta + T::of_usize(k) + one;
    let kj = T::of_usize(k) - T::of_usize(j);
    let ij = T::of_usize(i) - T::of_usize(j);
    let value = ln_pochhammer(kj, m - k - l + 1)
        .div(LogValue::from_value(ij))
        .mul(ln_pochhammer(al1, m - j))
        .mul(ln_pochhammer(bk1, j))
        .div(ln_pochhammer(al1, m - i))
        .div(ln_pochhammer(bk1, i))
        .scale_ln(
            ln_binomial::<T>(m, j) - ln_binomial::<T>(m, i) - ln_factorial::<T>(i - k) - ln_factorial::<T>(m - l - i),
        )
        .negate_if(odd(i - k));
    Ok(value.value())
}
