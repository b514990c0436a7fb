use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::fmt_complex;
use crate::{Error, Result, C64};

/// Polynomial `a₀ + a₁s + … + a_d s^d` in `s = t⁻¹`.
///
/// Trailing zero coefficients are trimmed, so the zero polynomial has an
/// empty coefficient list and degree `None` (standing in for −∞).
#[derive(Clone, Debug, PartialEq)]
pub struct PolynomialS {
    coeffs: Vec<C64>,
}

impl PolynomialS {
    pub fn new(coeffs: impl Into<Vec<C64>>) -> Self {
        let mut coeffs = coeffs.into();
        while coeffs.last().is_some_and(|c| *c == C64::new(0.0, 0.0)) {
            coeffs.pop();
        }
        PolynomialS { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| C64::new(c, 0.0)).collect::<Vec<_>>())
    }

    pub fn zero() -> Self {
        PolynomialS { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_real(&[1.0])
    }

    /// `sᵏ`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![C64::new(0.0, 0.0); k + 1];
        coeffs[k] = C64::new(1.0, 0.0);
        PolynomialS { coeffs }
    }

    /// `∏ (s − λᵢ)`.
    pub fn from_roots(roots: &[C64]) -> Self {
        roots.iter().fold(Self::one(), |acc, &r| {
            &acc * &PolynomialS::new(vec![-r, C64::new(1.0, 0.0)])
        })
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    /// Coefficient of `sᵏ`, zero past the degree.
    pub fn coeff(&self, k: usize) -> C64 {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<C64> {
        self.coeffs.last().copied()
    }

    pub fn eval(&self, z: C64) -> C64 {
        self.coeffs
            .iter()
            .rev()
            .fold(C64::new(0.0, 0.0), |acc, c| acc * z + c)
    }

    pub fn scale(&self, k: C64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect::<Vec<_>>())
    }

    /// Euclidean division: `self = quot·q + rem` with `deg rem < deg q`.
    pub fn divmod(&self, q: &Self) -> Result<(Self, Self)> {
        let dq = q.degree().ok_or(Error::ZeroPolynomial)?;
        let lead = q.coeffs[dq];
        let Some(dp) = self.degree().filter(|&dp| dp >= dq) else {
            return Ok((Self::zero(), self.clone()));
        };
        let mut rem = self.coeffs.clone();
        let mut quot = vec![C64::new(0.0, 0.0); dp - dq + 1];
        for k in (0..=dp - dq).rev() {
            let c = rem[k + dq] / lead;
            quot[k] = c;
            for (j, qj) in q.coeffs.iter().enumerate() {
                rem[k + j] -= c * qj;
            }
        }
        rem.truncate(dq);
        Ok((Self::new(quot), Self::new(rem)))
    }
}

impl Add for &PolynomialS {
    type Output = PolynomialS;
    fn add(self, rhs: &PolynomialS) -> PolynomialS {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolynomialS::new(
            (0..n)
                .map(|k| self.coeff(k) + rhs.coeff(k))
                .collect::<Vec<_>>(),
        )
    }
}

impl Sub for &PolynomialS {
    type Output = PolynomialS;
    fn sub(self, rhs: &PolynomialS) -> PolynomialS {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolynomialS::new(
            (0..n)
                .map(|k| self.coeff(k) - rhs.coeff(k))
                .collect::<Vec<_>>(),
        )
    }
}

impl Mul for &PolynomialS {
    type Output = PolynomialS;
    fn mul(self, rhs: &PolynomialS) -> PolynomialS {
        if self.is_zero() || rhs.is_zero() {
            return PolynomialS::zero();
        }
        let mut out = vec![C64::new(0.0, 0.0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolynomialS::new(out)
    }
}

impl fmt::Display for PolynomialS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if *c == C64::new(0.0, 0.0) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", fmt_complex(*c))?,
                1 => write!(f, "{}·s", fmt_complex(*c))?,
                _ => write!(f, "{}·s^{}", fmt_complex(*c), k)?,
            }
        }
        Ok(())
    }
}
