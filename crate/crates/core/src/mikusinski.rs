//! Mikusinski functions: ratios `u/g` of continuous functions by nonzero
//! power series, kept in the normal form `sⁿu` with `s = t⁻¹`.
//!
//! Two representatives `sⁿ¹u₁` and `sⁿ²u₂` denote the same function iff
//! `Jⁿ²(u₁) = Jⁿ¹(u₂)`. Equality is always decided by integrating up;
//! only [`MikusinskiFunction::normalize`] differentiates.

use crate::funcrep::{module_mul, ChebFunction, Interval, Precision};
use crate::series::{LaurentSeries, Valuation};
use crate::{Error, Result, C64};

/// Relative tolerance for [`MikusinskiFunction::equals`].
pub const EQ_TOL: f64 = 1e-9;

/// Relative size of `body(0)` under which normalization lowers the order.
pub const REDUCE_TOL: f64 = 1e-10;

/// `sⁿu` for a continuous body `u`.
#[derive(Clone, Debug, PartialEq)]
pub struct MikusinskiFunction {
    order: usize,
    body: ChebFunction,
}

impl MikusinskiFunction {
    pub fn new(order: usize, body: ChebFunction) -> Self {
        MikusinskiFunction { order, body }
    }

    /// The identification `u = u/1`.
    pub fn from_continuous(u: ChebFunction) -> Self {
        Self::new(0, u)
    }

    pub fn zero(interval: Interval) -> Self {
        Self::new(0, ChebFunction::zero(interval))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn body(&self) -> &ChebFunction {
        &self.body
    }

    pub fn into_body(self) -> ChebFunction {
        self.body
    }

    pub fn interval(&self) -> Interval {
        self.body.interval()
    }

    pub fn precision(&self) -> Precision {
        self.body.precision()
    }

    /// Both bodies lifted to the common order `max(n₁, n₂)`:
    /// returns `(n, J^{n−n₁}u₁, J^{n−n₂}u₂)`.
    pub fn aligned(&self, other: &Self) -> Result<(usize, ChebFunction, ChebFunction)> {
        if self.interval() != other.interval() {
            return Err(Error::IntervalMismatch);
        }
        let n = self.order.max(other.order);
        Ok((
            n,
            self.body.integral_n(n - self.order),
            other.body.integral_n(n - other.order),
        ))
    }

    /// Equality of ratios at [`EQ_TOL`].
    pub fn equals(&self, other: &Self) -> bool {
        self.equals_tol(other, EQ_TOL)
    }

    /// `‖Jⁿ²u₁ − Jⁿ¹u₂‖∞ ≤ tol·(1 + ‖Jⁿ²u₁‖∞)`. Representatives on different
    /// intervals are never equal.
    pub fn equals_tol(&self, other: &Self, tol: f64) -> bool {
        let Ok((_, lhs, rhs)) = self.aligned(other) else {
            return false;
        };
        let scale = 1.0 + lhs.sup_norm();
        match lhs.max_diff(&rhs) {
            Ok(diff) => diff <= tol * scale,
            Err(_) => false,
        }
    }

    /// `c₁·self + c₂·other`, at the common order `max(n₁, n₂)`.
    pub fn linear_combination(&self, c1: C64, other: &Self, c2: C64) -> Result<Self> {
        let (n, u1, u2) = self.aligned(other)?;
        Ok(Self::new(n, u1.linear_combination(c1, &u2, c2)?))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.linear_combination(C64::new(1.0, 0.0), other, C64::new(1.0, 0.0))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.linear_combination(C64::new(1.0, 0.0), other, C64::new(-1.0, 0.0))
    }

    pub fn scale(&self, c: C64) -> Self {
        Self::new(self.order, self.body.scale(c))
    }

    /// Scalar action of `h = tᵛh₀ ∈ ℂ({t})`.
    ///
    /// For `v ≥ 0` the result is `(n, h₀·Jᵛ(u))`; for `v < 0` it is
    /// `(n + |v|, h₀·u)`. The unit part is never inverted here.
    pub fn scalar_mul(&self, h: &LaurentSeries) -> Self {
        let Valuation::Finite(v) = h.valuation() else {
            return Self::zero(self.interval());
        };
        let unit = h.unit_part();
        let act = |u: &ChebFunction| {
            if is_one(unit) {
                u.clone()
            } else {
                module_mul(unit, u)
            }
        };
        if v >= 0 {
            Self::new(self.order, act(&self.body.integral_n(v as usize)))
        } else {
            Self::new(self.order + v.unsigned_abs() as usize, act(&self.body))
        }
    }

    /// Extended integration `J(w) = t·w`.
    pub fn integrate(&self) -> Self {
        Self::new(self.order, self.body.integral())
    }

    /// `s·w`, i.e. one more power of `s` on the same body.
    pub fn shift_s(&self, k: usize) -> Self {
        Self::new(self.order + k, self.body.clone())
    }

    /// Lowers the order while the body vanishes at the origin, using
    /// `sⁿ·J(u′) = sⁿ⁻¹u′`. The result is `equals`-equal to the input.
    pub fn normalize(&self) -> Self {
        let mut order = self.order;
        let mut body = self.body.clone();
        while order > 0 {
            let at_zero = body.eval(0.0).map(|z| z.norm()).unwrap_or(f64::INFINITY);
            if at_zero > REDUCE_TOL * body.sup_norm() {
                break;
            }
            body = body.derivative();
            order -= 1;
        }
        Self::new(order, body)
    }
}

fn is_one(series: &crate::series::PowerSeries) -> bool {
    let c = series.coeffs();
    c[0] == C64::new(1.0, 0.0) && c[1..].iter().all(|x| *x == C64::new(0.0, 0.0))
}
