//! Binomials, log-gamma, Beta and Pochhammer symbols.
//!
//! Products that can overflow (Pochhammer symbols with large length, Beta
//! functions of large arguments) are assembled as `(ln|x|, sign)` pairs and
//! exponentiated once by the caller.

use std::ops::{Div, Mul};

use crate::scalar::Scalar;

/// Largest `n` served from the exact binomial table.
pub const BINOM_TABLE_MAX: usize = 60;

static BINOM_TABLE: [[u64; BINOM_TABLE_MAX + 1]; BINOM_TABLE_MAX + 1] = build_binomial_table();

const fn build_binomial_table() -> [[u64; BINOM_TABLE_MAX + 1]; BINOM_TABLE_MAX + 1] {
    let mut t = [[0u64; BINOM_TABLE_MAX + 1]; BINOM_TABLE_MAX + 1];
    let mut n = 0;
    while n <= BINOM_TABLE_MAX {
        t[n][0] = 1;
        let mut k = 1;
        while k <= n {
            t[n][k] = t[n - 1][k - 1] + if k < n { t[n - 1][k] } else { 0 };
            k += 1;
        }
        n += 1;
    }
    t
}

/// `C(n, k)`; exact table for `n <= 60`, log-gamma beyond.
pub fn binomial<T: Scalar>(n: usize, k: usize) -> T {
    if k > n {
        return T::zero();
    }
    if n <= BINOM_TABLE_MAX {
        T::from_u64(BINOM_TABLE[n][k]).expect("u64 representable")
    } else {
        ln_binomial::<T>(n, k).exp()
    }
}

/// `ln C(n, k)` for `k <= n`.
pub fn ln_binomial<T: Scalar>(n: usize, k: usize) -> T {
    debug_assert!(k <= n);
    if n <= BINOM_TABLE_MAX {
        T::from_u64(BINOM_TABLE[n][k]).expect("u64 representable").ln()
    } else {
        ln_gamma(T::of_usize(n + 1)) - ln_gamma(T::of_usize(k + 1)) - ln_gamma(T::of_usize(n - k + 1))
    }
}

/// `n! / (n-j)!` as a plain product.
pub fn falling_factorial<T: Scalar>(n: usize, j: usize) -> T {
    (0..j).fold(T::one(), |acc, i| acc * T::of_usize(n - i))
}

/// `n!` as a plain product.
pub fn factorial<T: Scalar>(n: usize) -> T {
    falling_factorial(n, n)
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Integer arguments up to this bound go through an explicit factorial.
const EXACT_FACTORIAL_MAX: usize = 100;

/// `ln |Γ(x)|` by the Lanczos approximation (g = 7), with reflection below 1/2.
pub fn ln_gamma<T: Scalar>(x: T) -> T {
    let half = T::lit(0.5);
    if x >= T::one() && x <= T::lit(EXACT_FACTORIAL_MAX as f64) && x == x.floor() {
        let n = x.to_usize().expect("small positive integer") - 1;
        // 20! is exact in f64 and finite in f32
        return if n <= 20 {
            factorial::<T>(n).ln()
        } else {
            factorial::<T>(20).ln() + (21..=n).map(|v| T::of_usize(v).ln()).sum::<T>()
        };
    }
    if x < half {
        let pi = T::PI();
        return (pi / (pi * x).sin().abs()).ln() - ln_gamma(T::one() - x);
    }
    let x = x - T::one();
    let mut acc = T::lit(LANCZOS_COEFFS[0]);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc = acc + T::lit(c) / (x + T::of_usize(i));
    }
    let t = x + T::lit(LANCZOS_G) + half;
    T::lit(0.5) * (T::TAU()).ln() + (x + half) * t.ln() - t + acc.ln()
}

/// `ln B(a, b)` for `a, b > 0`.
pub fn ln_beta<T: Scalar>(a: T, b: T) -> T {
    ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)
}

/// `B(a, b) = Γ(a)Γ(b)/Γ(a+b)` for `a, b > 0`.
pub fn beta<T: Scalar>(a: T, b: T) -> T {
    ln_beta(a, b).exp()
}

/// A real number held as `sign · exp(ln_abs)`; `sign == 0` encodes zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogValue<T> {
    pub ln_abs: T,
    pub sign: i8,
}

impl<T: Scalar> LogValue<T> {
    pub fn one() -> Self {
        LogValue { ln_abs: T::zero(), sign: 1 }
    }

    pub fn zero() -> Self {
        LogValue { ln_abs: T::neg_infinity(), sign: 0 }
    }

    pub fn from_value(x: T) -> Self {
        if x == T::zero() {
            Self::zero()
        } else {
            LogValue { ln_abs: x.abs().ln(), sign: if x > T::zero() { 1 } else { -1 } }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// Multiplies by `exp(ln_factor)`.
    pub fn scale_ln(self, ln_factor: T) -> Self {
        if self.is_zero() {
            return self;
        }
        LogValue { ln_abs: self.ln_abs + ln_factor, sign: self.sign }
    }

    pub fn negate_if(self, flip: bool) -> Self {
        if flip {
            LogValue { ln_abs: self.ln_abs, sign: -self.sign }
        } else {
            self
        }
    }

    pub fn value(self) -> T {
        match self.sign {
            0 => T::zero(),
            s => T::lit(f64::from(s)) * self.ln_abs.exp(),
        }
    }
}

impl<T: Scalar> Mul for LogValue<T> {
    type Output = Self;

    fn mul(self, other: Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        LogValue { ln_abs: self.ln_abs + other.ln_abs, sign: self.sign * other.sign }
    }
}

impl<T: Scalar> Div for LogValue<T> {
    type Output = Self;

    fn div(self, other: Self) -> Self {
        assert!(!other.is_zero(), "division by zero in log space");
        if self.is_zero() {
            return Self::zero();
        }
        LogValue { ln_abs: self.ln_abs - other.ln_abs, sign: self.sign * other.sign }
    }
}

/// Pochhammer symbol `(a)_k = a(a+1)…(a+k-1)` in log/sign form.
pub fn ln_pochhammer<T: Scalar>(a: T, k: usize) -> LogValue<T> {
    let mut out = LogValue::one();
    for j in 0..k {
        let factor = a + T::of_usize(j);
        if factor == T::zero() {
            return LogValue::zero();
        }
        out = out * LogValue::from_value(factor);
    }
    out
}

/// Pochhammer symbol `(a)_k` as a plain value.
pub fn pochhammer<T: Scalar>(a: T, k: usize) -> T {
    ln_pochhammer(a, k).value()
}

/// `(-1)^p` as a boolean "is negative" flag.
#[inline]
pub(crate) fn odd(p: usize) -> bool {
    p % 2 == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use ::approx::assert_relative_eq;

    #[test]
    fn binomial_table_edges() {
        assert_eq!(binomial::<f64>(0, 0), 1.0);
        assert_eq!(binomial::<f64>(5, 2), 10.0);
        assert_eq!(binomial::<f64>(5, 6), 0.0);
        assert_eq!(BINOM_TABLE[60][30], 118_264_581_564_861_424);
    }

    #[test]
    fn binomial_beyond_table_uses_log_gamma() {
        // C(70, 35) = 112186277816662845432
        assert_relative_eq!(binomial::<f64>(70, 35), 1.121_862_778_166_628_5e20, max_relative = 1e-12);
        assert_relative_eq!(binomial::<f64>(61, 1), 61.0, max_relative = 1e-13);
    }

    #[test]
    fn ln_gamma_known_values() {
        assert_relative_eq!(ln_gamma(1.0f64), 0.0, epsilon = 1e-15);
        assert_relative_eq!(ln_gamma(0.5f64), std::f64::consts::PI.sqrt().ln(), epsilon = 1e-14);
        // ln(20!) = ln(2432902008176640000)
        assert_relative_eq!(ln_gamma(21.0f64), 2_432_902_008_176_640_000f64.ln(), max_relative = 1e-14);
        assert_relative_eq!(ln_gamma(0.25f64), 1.288_022_524_698_077_5, epsilon = 1e-13);
    }

    #[test]
    fn beta_matches_factorials() {
        // B(2, 3) = 1!2!/4! = 1/12
        assert_relative_eq!(beta(2.0f64, 3.0), 1.0 / 12.0, max_relative = 1e-14);
        // B(1/2, 1/2) = π
        assert_relative_eq!(beta(0.5f64, 0.5), std::f64::consts::PI, max_relative = 1e-14);
    }

    #[test]
    fn pochhammer_signs_and_zero() {
        assert_eq!(pochhammer(3.0f64, 0), 1.0);
        assert_relative_eq!(pochhammer(3.0f64, 3), 60.0, max_relative = 1e-14);
        assert_relative_eq!(pochhammer(-2.5f64, 3), -2.5 * -1.5 * -0.5, max_relative = 1e-14);
        assert_eq!(pochhammer(-2.0f64, 4), 0.0);
        assert!(ln_pochhammer(-2.0f64, 2).sign == 1);
    }

    #[test]
    fn log_value_arithmetic() {
        let a = LogValue::from_value(-3.0f64);
        let b = LogValue::from_value(4.0f64);
        assert_relative_eq!((a * b).value(), -12.0, max_relative = 1e-15);
        assert_relative_eq!((b / a).value(), -4.0 / 3.0, max_relative = 1e-15);
        assert_eq!((a * LogValue::zero()).value(), 0.0);
    }
}
