use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{fmt_complex, SeriesOp, UNIT_TOL, ZERO_TOL};
use crate::{Error, Result, C64};

/// Order of vanishing of a series at `t = 0`. The zero series has
/// valuation [`Valuation::Infinite`], which compares above every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinite)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "+inf"),
        }
    }
}

/// Truncated power series `c₀ + c₁t + … + c_{N−1}t^{N−1}`.
///
/// The coefficient vector always has exactly `trunc_order` entries. Binary
/// operations truncate to the smaller order of their operands.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<C64>,
}

impl PowerSeries {
    /// Builds a series of the given order, zero-padding or truncating `coeffs`.
    ///
    /// Panics if `order == 0`.
    pub fn new(coeffs: impl Into<Vec<C64>>, order: usize) -> Self {
        assert!(order > 0, "truncation order must be positive");
        let mut coeffs = coeffs.into();
        coeffs.resize(order, C64::new(0.0, 0.0));
        PowerSeries { coeffs }
    }

    pub fn from_real(coeffs: &[f64], order: usize) -> Self {
        Self::new(
            coeffs.iter().map(|&c| C64::new(c, 0.0)).collect::<Vec<_>>(),
            order,
        )
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C64::new(1.0, 0.0), order)
    }

    pub fn constant(c: C64, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// `tᵏ`, which is the zero series when `k >= order`.
    pub fn monomial(k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k < order {
            s.coeffs[k] = C64::new(1.0, 0.0);
        }
        s
    }

    /// `Σ ratioⁿ tⁿ = 1 / (1 − ratio·t)`.
    pub fn geometric(ratio: C64, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order);
        let mut p = C64::new(1.0, 0.0);
        for _ in 0..order {
            coeffs.push(p);
            p *= ratio;
        }
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    /// Coefficient of `tᵏ`; zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> C64 {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == C64::new(0.0, 0.0))
    }

    pub fn scale(&self, k: C64) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Same coefficients, different truncation order.
    pub fn with_order(&self, order: usize) -> Self {
        Self::new(self.coeffs.clone(), order)
    }

    /// Ring operation on two series. `Div` is routed through
    /// [`PowerSeries::invert`] and fails for non-units.
    pub fn arith(&self, other: &Self, op: SeriesOp) -> Result<Self> {
        match op {
            SeriesOp::Add => Ok(self + other),
            SeriesOp::Sub => Ok(self - other),
            SeriesOp::Mul => Ok(self * other),
            SeriesOp::Div => Ok(self * &other.invert()?),
        }
    }

    /// Multiplicative inverse of a series with nonzero constant term.
    ///
    /// `d₀ = 1/c₀`, `dₙ = −(1/c₀) Σ_{k=1..n} cₖ d_{n−k}`.
    pub fn invert(&self) -> Result<Self> {
        let c0 = self.coeffs[0];
        if c0.norm() <= UNIT_TOL {
            return Err(Error::NotAUnit(c0.norm()));
        }
        let inv_c0 = c0.inv();
        let n = self.order();
        let mut d = Vec::with_capacity(n);
        d.push(inv_c0);
        for m in 1..n {
            let acc: C64 = (1..=m).map(|k| self.coeffs[k] * d[m - k]).sum();
            d.push(-inv_c0 * acc);
        }
        Ok(PowerSeries { coeffs: d })
    }

    /// Smallest `k` with `|cₖ| > min(ZERO_TOL · max|cⱼ|, UNIT_TOL)`.
    ///
    /// The absolute floor keeps rapidly growing series such as `1/(1 − 2t)`
    /// from having their leading terms swamped by the tail.
    pub fn valuation(&self) -> Valuation {
        let max = self.max_abs();
        if max == 0.0 {
            return Valuation::Infinite;
        }
        let threshold = (ZERO_TOL * max).min(UNIT_TOL);
        self.coeffs
            .iter()
            .position(|c| c.norm() > threshold)
            .map(|k| Valuation::Finite(k as i64))
            .unwrap_or(Valuation::Infinite)
    }

    /// Divides by `tᵏ`, dropping the first `k` coefficients. The order
    /// shrinks by `k` since nothing is known past the original truncation.
    ///
    /// Panics if `k >= order`.
    pub fn shift_down(&self, k: usize) -> Self {
        assert!(k < self.order(), "shift exceeds truncation order");
        PowerSeries {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    /// Multiplies by `tᵏ`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![C64::new(0.0, 0.0); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + k < n {
                coeffs[i + k] = *c;
            }
        }
        PowerSeries { coeffs }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(C64, C64) -> C64) -> Self {
        let n = self.order().min(other.order());
        PowerSeries {
            coeffs: (0..n).map(|k| f(self.coeffs[k], other.coeffs[k])).collect(),
        }
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

/// Cauchy product truncated at the smaller order.
impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![C64::new(0.0, 0.0); n];
        for (i, a) in self.coeffs[..n].iter().enumerate() {
            if *a == C64::new(0.0, 0.0) {
                continue;
            }
            for (j, b) in rhs.coeffs[..n - i].iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PowerSeries { coeffs }
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        self.scale(C64::new(-1.0, 0.0))
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if *c == C64::new(0.0, 0.0) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", fmt_complex(*c))?,
                1 => write!(f, "{}·t", fmt_complex(*c))?,
                _ => write!(f, "{}·t^{}", fmt_complex(*c), k)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    #[test]
    fn add_cancels() {
        let a = PowerSeries::from_real(&[1.0, 1.0], 8);
        let b = PowerSeries::from_real(&[1.0, -1.0], 8);
        assert_eq!(&a + &b, PowerSeries::from_real(&[2.0], 8));
    }

    #[test]
    fn difference_of_squares() {
        let a = PowerSeries::from_real(&[1.0, 1.0], 8);
        let b = PowerSeries::from_real(&[1.0, -1.0], 8);
        assert_eq!(&a * &b, PowerSeries::from_real(&[1.0, 0.0, -1.0], 8));
    }

    #[test]
    fn product_truncates_to_smaller_order() {
        let a = PowerSeries::from_real(&[1.0, 1.0], 3);
        let b = PowerSeries::from_real(&[1.0, 1.0, 1.0, 1.0], 10);
        let p = &a * &b;
        assert_eq!(p.order(), 3);
        assert_eq!(p.coeffs(), &[c(1.0), c(2.0), c(2.0)]);
    }

    #[test]
    fn invert_constants() {
        assert_eq!(PowerSeries::one(4).invert().unwrap(), PowerSeries::one(4));
        let half = PowerSeries::constant(c(2.0), 4).invert().unwrap();
        assert_eq!(half, PowerSeries::constant(c(0.5), 4));
    }

    #[test]
    fn invert_one_minus_t_is_geometric() {
        let a = PowerSeries::from_real(&[1.0, -1.0], 12);
        let inv = a.invert().unwrap();
        assert_eq!(inv, PowerSeries::geometric(c(1.0), 12));
        assert_eq!(&a * &inv, PowerSeries::one(12));
    }

    #[test]
    fn invert_rejects_non_units() {
        let a = PowerSeries::from_real(&[0.0, 1.0], 4);
        assert!(matches!(a.invert(), Err(Error::NotAUnit(_))));
        let tiny = PowerSeries::from_real(&[1e-13, 1.0], 4);
        assert!(matches!(tiny.invert(), Err(Error::NotAUnit(_))));
    }

    #[test]
    fn valuations() {
        let a = PowerSeries::from_real(&[0.0, 0.0, 3.0, 0.0, 1.0], 8);
        assert_eq!(a.valuation(), Valuation::Finite(2));
        assert_eq!(PowerSeries::zero(8).valuation(), Valuation::Infinite);
        let b = PowerSeries::from_real(&[0.0, 1.0, -1.0], 8);
        assert_eq!(b.valuation(), Valuation::Finite(1));
        assert!(Valuation::Finite(1000) < Valuation::Infinite);
        // 1/(1 − 2t): the constant term is tiny next to 2⁶³ but still a unit
        assert_eq!(
            PowerSeries::geometric(C64::new(2.0, 0.0), 64).valuation(),
            Valuation::Finite(0)
        );
    }

    #[test]
    fn shifts() {
        let a = PowerSeries::from_real(&[0.0, 0.0, 1.0, 2.0], 4);
        assert_eq!(a.shift_down(2), PowerSeries::from_real(&[1.0, 2.0], 2));
        assert_eq!(
            a.shift_up(1),
            PowerSeries::from_real(&[0.0, 0.0, 0.0, 1.0], 4)
        );
    }

    #[test]
    fn display_reads_naturally() {
        let a = PowerSeries::from_real(&[1.0, 0.0, -2.0], 4);
        assert_eq!(a.to_string(), "1 + -2·t^2 + O(t^4)");
    }
}
