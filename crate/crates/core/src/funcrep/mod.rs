//! Continuous functions on a compact interval `[a, b] ∋ 0`, stored as
//! Chebyshev series, together with the integration operator `J`, the
//! `ℂ{t}`-module action `g·u = Σ bₙJⁿ(u)` and the entire transform
//! `E(g) = g·𝟏 = Σ bₙxⁿ/n!`.

mod action;
mod cheb;

pub use action::{e_transform, module_mul, series_cutoff};
pub use cheb::ChebFunction;

use std::ops::BitOr;

use crate::{Error, Result};

/// Relative size under which trailing Chebyshev coefficients are dropped.
pub const TRIM_TOL: f64 = 1e-14;

/// Relative tail bound for `Σ bₙJⁿ(u)`, measured against `‖u‖∞`.
pub const TAIL_TOL: f64 = 1e-14;

/// Default target accuracy for adaptive interpolation.
pub const DEFAULT_TOL: f64 = 1e-14;

/// Smallest degree tried by adaptive interpolation.
pub const MIN_DEGREE: usize = 16;

/// Degree cap for adaptive interpolation.
pub const MAX_DEGREE: usize = 1 << 14;

/// Compact interval `[a, b]` with `a ≤ 0 ≤ b` and `a < b`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    a: f64,
    b: f64,
}

impl Interval {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && a < b && a <= 0.0 && 0.0 <= b) {
            return Err(Error::InvalidInterval { a, b });
        }
        Ok(Interval { a, b })
    }

    /// `[−1, 1]`.
    pub fn unit() -> Self {
        Interval { a: -1.0, b: 1.0 }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// `max(|a|, |b|)`, the largest distance from the origin.
    pub fn radius(&self) -> f64 {
        self.a.abs().max(self.b.abs())
    }

    pub fn contains(&self, x: f64) -> bool {
        let slack = 1e-12 * (self.b - self.a);
        x >= self.a - slack && x <= self.b + slack
    }

    pub(crate) fn half_width(&self) -> f64 {
        0.5 * (self.b - self.a)
    }

    pub(crate) fn midpoint(&self) -> f64 {
        0.5 * (self.a + self.b)
    }

    /// Maps `x ∈ [a, b]` to `y ∈ [−1, 1]`.
    pub(crate) fn to_reference(self, x: f64) -> f64 {
        ((x - self.midpoint()) / self.half_width()).clamp(-1.0, 1.0)
    }

    pub(crate) fn at_reference(self, y: f64) -> f64 {
        self.midpoint() + self.half_width() * y
    }

    /// `n` equispaced points from `a` to `b` inclusive.
    pub fn grid(&self, n: usize) -> Vec<f64> {
        match n {
            0 => Vec::new(),
            1 => vec![self.a],
            _ => (0..n)
                .map(|i| {
                    if i == n - 1 {
                        self.b
                    } else {
                        self.a + (self.b - self.a) * i as f64 / (n - 1) as f64
                    }
                })
                .collect(),
        }
    }
}

impl Default for Interval {
    fn default() -> Self {
        Self::unit()
    }
}

/// Accuracy warnings carried by a function representation.
///
/// `truncated`: a series action stopped at the truncation order while its
/// factorial tail bound was still above tolerance. `unconverged`: adaptive
/// interpolation hit the degree cap, typical for non-smooth input.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Precision {
    pub truncated: bool,
    pub unconverged: bool,
}

impl Precision {
    pub fn exact() -> Self {
        Self::default()
    }

    pub fn is_degraded(&self) -> bool {
        self.truncated || self.unconverged
    }
}

impl BitOr for Precision {
    type Output = Precision;
    fn bitor(self, rhs: Precision) -> Precision {
        Precision {
            truncated: self.truncated || rhs.truncated,
            unconverged: self.unconverged || rhs.unconverged,
        }
    }
}
