use std::f64::consts::PI;

use rustfft::FftPlanner;

use super::{Interval, Precision, DEFAULT_TOL, MAX_DEGREE, MIN_DEGREE, TRIM_TOL};
use crate::{Error, Result, C64};

const ZERO: C64 = C64::new(0.0, 0.0);

/// Chebyshev series `Σ cₖ Tₖ(y)` with `y` the affine image of `x ∈ [a, b]`
/// in `[−1, 1]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChebFunction {
    interval: Interval,
    coeffs: Vec<C64>,
    precision: Precision,
}

impl ChebFunction {
    /// Wraps raw Chebyshev coefficients, trimming negligible trailing terms.
    pub fn new(interval: Interval, coeffs: impl Into<Vec<C64>>) -> Self {
        Self::with_precision(interval, coeffs.into(), Precision::exact())
    }

    pub(crate) fn with_precision(
        interval: Interval,
        coeffs: Vec<C64>,
        precision: Precision,
    ) -> Self {
        let mut f = ChebFunction {
            interval,
            coeffs,
            precision,
        };
        f.trim();
        f
    }

    pub fn zero(interval: Interval) -> Self {
        Self::new(interval, vec![ZERO])
    }

    pub fn constant(interval: Interval, c: C64) -> Self {
        Self::new(interval, vec![c])
    }

    /// The unit function `𝟏`.
    pub fn one(interval: Interval) -> Self {
        Self::constant(interval, C64::new(1.0, 0.0))
    }

    /// The identity `x ↦ x`.
    pub fn identity(interval: Interval) -> Self {
        let r = interval.half_width();
        let m = interval.midpoint();
        Self::new(interval, vec![C64::new(m, 0.0), C64::new(r, 0.0)])
    }

    /// Polynomial `Σ pₖxᵏ` given in the monomial basis, converted by Horner's
    /// scheme in the Chebyshev basis (exact up to rounding).
    pub fn from_power_basis(interval: Interval, coeffs: &[C64]) -> Self {
        let mut acc = vec![ZERO];
        for &p in coeffs.iter().rev() {
            acc = times_x(&interval, &acc);
            acc[0] += p;
        }
        Self::new(interval, acc)
    }

    /// Adaptive Chebyshev interpolation of `f` on `interval`.
    ///
    /// The degree doubles from 16 until the trailing quarter of the
    /// coefficients falls below `tol · max|cₖ|`. If the cap of `2¹⁴` is hit
    /// first the last interpolant is returned with
    /// [`Precision::unconverged`] set; non-finite samples set it at once.
    pub fn from_callable(f: impl Fn(f64) -> C64, interval: Interval, tol: f64) -> Self {
        Self::from_callable_capped(f, interval, tol, MAX_DEGREE)
    }

    /// [`ChebFunction::from_callable`] with an explicit degree cap.
    pub fn from_callable_capped(
        f: impl Fn(f64) -> C64,
        interval: Interval,
        tol: f64,
        max_degree: usize,
    ) -> Self {
        let mut degree = MIN_DEGREE.min(max_degree.max(1));
        loop {
            let coeffs = interpolate(&f, &interval, degree + 1);
            if coeffs.iter().any(|c| !c.is_finite()) {
                // a pole or overflow; refining cannot help
                let precision = Precision {
                    unconverged: true,
                    ..Precision::exact()
                };
                return Self::with_precision(interval, coeffs, precision);
            }
            let max = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
            let tail_start = coeffs.len() - coeffs.len() / 4;
            let plateau = coeffs[tail_start..].iter().all(|c| c.norm() <= tol * max);
            if plateau || max == 0.0 {
                return Self::new(interval, coeffs);
            }
            if degree >= max_degree {
                let precision = Precision {
                    unconverged: true,
                    ..Precision::exact()
                };
                return Self::with_precision(interval, coeffs, precision);
            }
            degree = (degree * 2).min(max_degree);
        }
    }

    /// Real-valued convenience wrapper around [`ChebFunction::from_callable`]
    /// at the default tolerance.
    pub fn from_real_fn(f: impl Fn(f64) -> f64, interval: Interval) -> Self {
        Self::from_callable(|x| C64::new(f(x), 0.0), interval, DEFAULT_TOL)
    }

    pub fn interval(&self) -> Interval {
        self.interval
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    /// Fails with [`Error::NoConvergence`] if interpolation never settled.
    pub fn require_converged(&self) -> Result<&Self> {
        if self.precision.unconverged {
            Err(Error::NoConvergence(self.degree()))
        } else {
            Ok(self)
        }
    }

    pub(crate) fn mark(&mut self, precision: Precision) {
        self.precision = self.precision | precision;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == ZERO)
    }

    /// Value at `x` by the Clenshaw recurrence.
    pub fn eval(&self, x: f64) -> Result<C64> {
        if !self.interval.contains(x) {
            return Err(Error::OutOfDomain {
                x,
                a: self.interval.a(),
                b: self.interval.b(),
            });
        }
        Ok(clenshaw(&self.coeffs, self.interval.to_reference(x)))
    }

    /// Estimated `‖u‖∞`: the maximum over a Chebyshev–Lobatto sample at
    /// least twice as fine as the degree.
    pub fn sup_norm(&self) -> f64 {
        if self.coeffs.len() == 1 {
            return self.coeffs[0].norm();
        }
        let m = (2 * self.coeffs.len() + 1).max(64);
        (0..m)
            .map(|k| clenshaw(&self.coeffs, (PI * k as f64 / (m - 1) as f64).cos()).norm())
            .fold(0.0, f64::max)
    }

    /// `J(u)(x) = ∫₀ˣ u`, exact on the Chebyshev representative.
    pub fn integral(&self) -> Self {
        let n = self.coeffs.len();
        let r = self.interval.half_width();
        let mut out = vec![ZERO; n + 1];
        for (k, &c) in self.coeffs.iter().enumerate() {
            match k {
                0 => out[1] += c,
                1 => {
                    out[2] += c / 4.0;
                    out[0] -= c / 4.0;
                }
                _ => {
                    out[k + 1] += c / (2.0 * (k + 1) as f64);
                    out[k - 1] -= c / (2.0 * (k - 1) as f64);
                }
            }
        }
        for c in out.iter_mut() {
            *c *= r;
        }
        let at_zero = clenshaw(&out, self.interval.to_reference(0.0));
        out[0] -= at_zero;
        Self::with_precision(self.interval, out, self.precision)
    }

    /// `Jᵏ(u)`.
    pub fn integral_n(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |u, _| u.integral())
    }

    /// Exact derivative of the Chebyshev representative.
    pub fn derivative(&self) -> Self {
        let n = self.coeffs.len();
        if n == 1 {
            return Self::with_precision(self.interval, vec![ZERO], self.precision);
        }
        let scale = 1.0 / self.interval.half_width();
        let mut d = vec![ZERO; n + 1];
        for k in (1..n).rev() {
            d[k - 1] = d[k + 1] + self.coeffs[k] * (2.0 * k as f64);
        }
        d[0] /= 2.0;
        d.truncate(n - 1);
        for c in d.iter_mut() {
            *c *= scale;
        }
        Self::with_precision(self.interval, d, self.precision)
    }

    pub fn derivative_n(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |u, _| u.derivative())
    }

    pub fn scale(&self, k: C64) -> Self {
        Self::with_precision(
            self.interval,
            self.coeffs.iter().map(|c| c * k).collect(),
            self.precision,
        )
    }

    /// `c₁·self + c₂·other`.
    pub fn linear_combination(&self, c1: C64, other: &Self, c2: C64) -> Result<Self> {
        if self.interval != other.interval {
            return Err(Error::IntervalMismatch);
        }
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| {
                c1 * self.coeffs.get(k).copied().unwrap_or(ZERO)
                    + c2 * other.coeffs.get(k).copied().unwrap_or(ZERO)
            })
            .collect();
        Ok(Self::with_precision(
            self.interval,
            coeffs,
            self.precision | other.precision,
        ))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.linear_combination(C64::new(1.0, 0.0), other, C64::new(1.0, 0.0))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.linear_combination(C64::new(1.0, 0.0), other, C64::new(-1.0, 0.0))
    }

    /// Estimated `‖self − other‖∞`.
    pub fn max_diff(&self, other: &Self) -> Result<f64> {
        Ok(self.sub(other)?.sup_norm())
    }

    /// Largest deviation from a reference function over `n` equispaced points.
    pub fn max_deviation_from(&self, f: impl Fn(f64) -> C64, n: usize) -> f64 {
        self.interval
            .grid(n)
            .into_iter()
            .map(|x| (clenshaw(&self.coeffs, self.interval.to_reference(x)) - f(x)).norm())
            .fold(0.0, f64::max)
    }

    fn trim(&mut self) {
        let max = self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        let cut = TRIM_TOL * max;
        while self.coeffs.len() > 1 && self.coeffs.last().is_some_and(|c| c.norm() <= cut) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.coeffs.push(ZERO);
        }
    }
}

pub(crate) fn clenshaw(coeffs: &[C64], y: f64) -> C64 {
    let (mut b1, mut b2) = (ZERO, ZERO);
    for &c in coeffs.iter().skip(1).rev() {
        let b0 = c + b1 * (2.0 * y) - b2;
        b2 = b1;
        b1 = b0;
    }
    coeffs[0] + b1 * y - b2
}

/// Coefficients of the degree `n − 1` interpolant at Chebyshev points of the
/// first kind, via a cosine table.
fn interpolate(f: &impl Fn(f64) -> C64, interval: &Interval, n: usize) -> Vec<C64> {
    // c_j = (2/n) Σ_k v_k cos(πj(2k+1)/2n), the DCT-II of the samples at
    // first-kind points, read off a length-4n FFT of the even extension.
    let mut z = vec![ZERO; 4 * n];
    for k in 0..n {
        let y = (PI * (2 * k + 1) as f64 / (2 * n) as f64).cos();
        let v = f(interval.at_reference(y));
        z[2 * k + 1] = v;
        z[4 * n - 2 * k - 1] = v;
    }
    FftPlanner::new().plan_fft_forward(4 * n).process(&mut z);
    let mut coeffs: Vec<C64> = z[..n].iter().map(|c| c / n as f64).collect();
    coeffs[0] /= 2.0;
    coeffs
}

/// Multiplies a Chebyshev series by `x = m + r·y`.
fn times_x(interval: &Interval, c: &[C64]) -> Vec<C64> {
    let (m, r) = (interval.midpoint(), interval.half_width());
    let mut out = vec![ZERO; c.len() + 1];
    for (k, &ck) in c.iter().enumerate() {
        out[k] += ck * m;
        if k == 0 {
            out[1] += ck * r;
        } else {
            out[k + 1] += ck * (0.5 * r);
            out[k - 1] += ck * (0.5 * r);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    fn unit() -> Interval {
        Interval::unit()
    }

    #[test]
    fn interpolates_constant_and_identity() {
        let one = ChebFunction::from_real_fn(|_| 1.0, unit());
        assert_eq!(one.degree(), 0);
        assert!((one.coeffs()[0] - re(1.0)).norm() < 1e-15);

        let x = ChebFunction::from_real_fn(|x| x, unit());
        assert_eq!(x.degree(), 1);
        assert!(x.coeffs()[0].norm() < 1e-15);
        assert!((x.coeffs()[1] - re(1.0)).norm() < 1e-15);
    }

    #[test]
    fn interpolates_exp_to_machine_precision() {
        let e = ChebFunction::from_real_fn(f64::exp, unit());
        assert!(e.degree() <= 20, "degree {}", e.degree());
        let err = e.max_deviation_from(|x| re(x.exp()), 1000);
        assert!(err < 1e-13, "error {err:e}");
        assert!(!e.precision().is_degraded());
    }

    #[test]
    fn non_smooth_input_is_flagged() {
        let abs = ChebFunction::from_callable_capped(|x| re(x.abs()), unit(), 1e-14, 256);
        assert!(abs.precision().unconverged);
        assert!(matches!(
            abs.require_converged(),
            Err(Error::NoConvergence(_))
        ));
        // still a usable approximation
        assert!(abs.max_deviation_from(|x| re(x.abs()), 1000) < 1e-2);
    }

    #[test]
    fn eval_basics() {
        let one = ChebFunction::one(unit());
        assert_eq!(one.eval(0.3).unwrap(), re(1.0));
        let x = ChebFunction::new(unit(), vec![re(0.0), re(1.0)]);
        assert_eq!(x.eval(0.5).unwrap(), re(0.5));
        assert!(matches!(x.eval(1.5), Err(Error::OutOfDomain { .. })));
    }

    #[test]
    fn eval_matches_horner_on_random_polynomial() {
        // Oracle: direct power-basis evaluation.
        let p: Vec<C64> = (0..11)
            .map(|k| C64::new(((k * 37 % 11) as f64 - 5.0) / 3.0, (k as f64).sin()))
            .collect();
        let i = Interval::new(-0.7, 1.3).unwrap();
        let u = ChebFunction::from_power_basis(i, &p);
        for x in i.grid(41) {
            let horner = p.iter().rev().fold(re(0.0), |acc, c| acc * x + c);
            assert!((u.eval(x).unwrap() - horner).norm() < 1e-12);
        }
    }

    #[test]
    fn iterated_integrals_of_one() {
        let mut u = ChebFunction::one(unit());
        let mut fact = 1.0;
        for n in 1..=8 {
            u = u.integral();
            fact *= n as f64;
            let err = u.max_deviation_from(|x| re(x.powi(n) / fact), 201);
            assert!(err < 1e-15, "n = {n}: {err:e}");
            assert!(u.eval(0.0).unwrap().norm() < 1e-14);
        }
        let x = ChebFunction::one(unit()).integral();
        assert!((x.eval(0.25).unwrap() - re(0.25)).norm() < 1e-16);
    }

    #[test]
    fn integral_vanishes_at_origin_off_center() {
        let i = Interval::new(-0.2, 3.0).unwrap();
        let u = ChebFunction::from_real_fn(|x| (2.0 * x).cos() + x, i);
        let ju = u.integral();
        assert!(ju.eval(0.0).unwrap().norm() < 1e-14);
        let err = ju.max_deviation_from(|x| re((2.0 * x).sin() / 2.0 + x * x / 2.0), 301);
        assert!(err < 1e-12, "{err:e}");
    }

    #[test]
    fn integral_of_cos_is_sin() {
        let c = ChebFunction::from_real_fn(f64::cos, unit());
        let err = c.integral().max_deviation_from(|x| re(x.sin()), 1000);
        assert!(err < 1e-12, "{err:e}");
    }

    #[test]
    fn derivative_round_trips() {
        let x = ChebFunction::identity(unit());
        let d = x.derivative();
        assert!((d.eval(0.4).unwrap() - re(1.0)).norm() < 1e-15);

        let u = ChebFunction::from_real_fn(|x| (3.0 * x).sin() * x.exp(), unit());
        let back = u.integral().derivative();
        let scale = u.coeffs().iter().map(|c| c.norm()).fold(0.0, f64::max);
        for (a, b) in back.coeffs().iter().zip(u.coeffs()) {
            assert!((a - b).norm() <= 1e-10 * scale);
        }

        let e = ChebFunction::from_real_fn(f64::exp, unit());
        let err = e.derivative().max_deviation_from(|x| re(x.exp()), 1000);
        assert!(err < 1e-10, "{err:e}");
    }

    #[test]
    fn derivative_scales_with_interval() {
        let i = Interval::new(-2.0, 0.5).unwrap();
        let u = ChebFunction::from_power_basis(i, &[re(1.0), re(0.0), re(3.0)]);
        let d = u.derivative();
        assert!((d.eval(-1.5).unwrap() - re(-9.0)).norm() < 1e-13);
    }

    #[test]
    fn linear_combination_checks_interval() {
        let u = ChebFunction::one(unit());
        let v = ChebFunction::one(Interval::new(0.0, 1.0).unwrap());
        assert_eq!(u.add(&v), Err(Error::IntervalMismatch));
        let w = u
            .linear_combination(re(2.0), &ChebFunction::identity(unit()), re(-1.0))
            .unwrap();
        assert!((w.eval(0.5).unwrap() - re(1.5)).norm() < 1e-15);
    }

    #[test]
    fn sup_norm_finds_endpoint_maximum() {
        let e = ChebFunction::from_real_fn(f64::exp, unit());
        assert!((e.sup_norm() - std::f64::consts::E).abs() < 1e-13);
    }
}
