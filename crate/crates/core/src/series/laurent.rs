use std::fmt;

use super::{fmt_complex, PolynomialS, PowerSeries, SeriesOp, Valuation, DEFAULT_ORDER};
use crate::{Error, Result, C64};

/// Convergent Laurent series `tᵛ · unit`, with `unit(0) ≠ 0`.
///
/// The zero series is the distinguished value with valuation
/// [`Valuation::Infinite`]; its unit part is kept only to remember the order.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentSeries {
    valuation: Valuation,
    unit: PowerSeries,
}

impl LaurentSeries {
    pub fn zero(order: usize) -> Self {
        LaurentSeries {
            valuation: Valuation::Infinite,
            unit: PowerSeries::zero(order),
        }
    }

    pub fn one(order: usize) -> Self {
        Self::from_power_series(&PowerSeries::one(order))
    }

    /// `tᵏ` for any integer `k`; `t⁻¹` is `s`.
    pub fn t_power(k: i64, order: usize) -> Self {
        LaurentSeries {
            valuation: Valuation::Finite(k),
            unit: PowerSeries::one(order),
        }
    }

    /// `tᵏ · series`, renormalized so the unit part has a nonzero constant
    /// term. Leading coefficients absorbed into the valuation shorten the
    /// known part of the unit accordingly.
    pub fn new(k: i64, series: &PowerSeries) -> Self {
        match series.valuation() {
            Valuation::Infinite => Self::zero(series.order()),
            Valuation::Finite(v) => LaurentSeries {
                valuation: Valuation::Finite(k + v),
                unit: series.shift_down(v as usize),
            },
        }
    }

    pub fn from_power_series(series: &PowerSeries) -> Self {
        Self::new(0, series)
    }

    pub fn valuation(&self) -> Valuation {
        self.valuation
    }

    pub fn unit_part(&self) -> &PowerSeries {
        &self.unit
    }

    pub fn order(&self) -> usize {
        self.unit.order()
    }

    pub fn is_zero(&self) -> bool {
        self.valuation.is_infinite()
    }

    /// Coefficient of `tᵏ` (absolute exponent).
    pub fn coeff(&self, k: i64) -> C64 {
        match self.valuation {
            Valuation::Finite(v) if k >= v => self.unit.coeff((k - v) as usize),
            _ => C64::new(0.0, 0.0),
        }
    }

    /// The series as an element of `ℂ{t}`, keeping the unit part's order.
    pub fn to_power_series(&self) -> Result<PowerSeries> {
        match self.valuation {
            Valuation::Infinite => Ok(PowerSeries::zero(self.order())),
            Valuation::Finite(v) if v < 0 => Err(Error::NegativeValuation(v)),
            Valuation::Finite(v) => Ok(self.unit.shift_up(v as usize)),
        }
    }

    pub fn scale(&self, k: C64) -> Self {
        if k == C64::new(0.0, 0.0) {
            return Self::zero(self.order());
        }
        LaurentSeries {
            valuation: self.valuation,
            unit: self.unit.scale(k),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(C64::new(-1.0, 0.0))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (Valuation::Finite(v1), Valuation::Finite(v2)) = (self.valuation, other.valuation)
        else {
            return if self.is_zero() {
                other.clone()
            } else {
                self.clone()
            };
        };
        let v = v1.min(v2);
        // Highest exponent known in both operands bounds the result.
        let top = (v1 + self.order() as i64).min(v2 + other.order() as i64);
        let len = (top - v) as usize;
        let coeffs: Vec<C64> = (0..len as i64)
            .map(|k| self.coeff(v + k) + other.coeff(v + k))
            .collect();
        Self::new(v, &PowerSeries::new(coeffs, len))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self.valuation, other.valuation) {
            (Valuation::Finite(v1), Valuation::Finite(v2)) => {
                Self::new(v1 + v2, &(&self.unit * &other.unit))
            }
            _ => Self::zero(self.order().min(other.order())),
        }
    }

    /// Field division: unit parts are divided through series inversion and
    /// valuations subtract.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let Valuation::Finite(v2) = other.valuation else {
            return Err(Error::DivisionByZeroSeries);
        };
        let inv = other.unit.invert()?;
        match self.valuation {
            Valuation::Infinite => Ok(Self::zero(self.order().min(other.order()))),
            Valuation::Finite(v1) => Ok(Self::new(v1 - v2, &(&self.unit * &inv))),
        }
    }

    pub fn arith(&self, other: &Self, op: SeriesOp) -> Result<Self> {
        match op {
            SeriesOp::Add => Ok(self.add(other)),
            SeriesOp::Sub => Ok(self.sub(other)),
            SeriesOp::Mul => Ok(self.mul(other)),
            SeriesOp::Div => self.div(other),
        }
    }
}

/// Embeds `a₀ + … + a_d s^d` as `t^{−d}(a_d + a_{d−1}t + … + a₀t^d)`.
pub fn poly_s_to_laurent(f: &PolynomialS, order: usize) -> Result<LaurentSeries> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    if d >= order {
        return Err(Error::InvalidArgument(format!(
            "polynomial degree {d} does not fit truncation order {order}"
        )));
    }
    let reversed: Vec<C64> = f.coeffs().iter().rev().copied().collect();
    Ok(LaurentSeries::new(
        -(d as i64),
        &PowerSeries::new(reversed, order),
    ))
}

/// Laurent expansion of `p/q` in powers of `t`; valuation `deg q − deg p`.
pub fn laurent_ratio(p: &PolynomialS, q: &PolynomialS, order: usize) -> Result<LaurentSeries> {
    let den = poly_s_to_laurent(q, order)?;
    if p.is_zero() {
        return Ok(LaurentSeries::zero(order));
    }
    poly_s_to_laurent(p, order)?.div(&den)
}

/// [`laurent_ratio`] at [`DEFAULT_ORDER`].
pub fn laurent_ratio_default(p: &PolynomialS, q: &PolynomialS) -> Result<LaurentSeries> {
    laurent_ratio(p, q, DEFAULT_ORDER)
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Valuation::Finite(v) = self.valuation else {
            return write!(f, "0");
        };
        let mut first = true;
        for (i, c) in self.unit.coeffs().iter().enumerate() {
            if *c == C64::new(0.0, 0.0) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match v + i as i64 {
                0 => write!(f, "{}", fmt_complex(*c))?,
                1 => write!(f, "{}·t", fmt_complex(*c))?,
                k => write!(f, "{}·t^{}", fmt_complex(*c), k)?,
            }
        }
        write!(f, " + O(t^{})", v + self.order() as i64)
    }
}
