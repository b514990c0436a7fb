//! Classical reference computations used to cross-check the algebraic
//! kernel: RK4 on the companion system, composite Simpson quadrature and
//! closed-form elementary functions.
//!
//! Nothing here calls into the series or Chebyshev code; operator and
//! interval types are only read as plain data.

use crate::funcrep::Interval;
use crate::series::PolynomialS;
use crate::{Error, Result, C64};

/// Values `ys[i]` at strictly increasing abscissae `xs[i]`.
#[derive(Clone, Debug, PartialEq)]
pub struct SampledTrajectory {
    pub xs: Vec<f64>,
    pub ys: Vec<C64>,
}

impl SampledTrajectory {
    pub fn new(xs: Vec<f64>, ys: Vec<C64>) -> Result<Self> {
        if xs.len() != ys.len() {
            return Err(Error::InvalidArgument(
                "abscissae and values differ in length".into(),
            ));
        }
        if xs.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(
                "abscissae must be strictly increasing".into(),
            ));
        }
        Ok(SampledTrajectory { xs, ys })
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    /// `max |ys[i] − f(xs[i])|`.
    pub fn max_deviation(&self, f: impl Fn(f64) -> C64) -> f64 {
        self.xs
            .iter()
            .zip(&self.ys)
            .map(|(&x, &y)| (y - f(x)).norm())
            .fold(0.0, f64::max)
    }

    pub fn value_at(&self, x: f64) -> Option<C64> {
        self.xs.iter().position(|&xi| xi == x).map(|i| self.ys[i])
    }
}

/// Classical RK4 for `Σ aⱼ ξ⁽ʲ⁾ = forcing` with `ξ⁽ᵏ⁾(0) = ics[k]`, on the
/// grid `0, ±step, ±2·step, …` clipped to `[a, b]` (both endpoints included).
pub fn rk4_integrate(
    f: &PolynomialS,
    ics: &[C64],
    forcing: impl Fn(f64) -> C64,
    interval: Interval,
    step: f64,
) -> Result<SampledTrajectory> {
    if step.is_nan() || step <= 0.0 {
        return Err(Error::InvalidArgument("step must be positive".into()));
    }
    let mut points = Vec::new();
    let n_back = (-interval.a() / step).ceil() as usize;
    for i in (1..=n_back).rev() {
        points.push((-(i as f64) * step).max(interval.a()));
    }
    points.push(0.0);
    let n_fwd = (interval.b() / step).ceil() as usize;
    for i in 1..=n_fwd {
        points.push((i as f64 * step).min(interval.b()));
    }
    points.dedup();
    rk4_sample(f, ics, forcing, &points, step)
}

/// RK4 values at arbitrary sorted points, stepping outward from the origin
/// with sub-steps no longer than `max_step`.
pub fn rk4_sample(
    f: &PolynomialS,
    ics: &[C64],
    forcing: impl Fn(f64) -> C64,
    points: &[f64],
    max_step: f64,
) -> Result<SampledTrajectory> {
    let a = f.coeffs();
    let d = a.len().saturating_sub(1);
    if d == 0 {
        return Err(Error::InvalidArgument(
            "operator must have degree at least 1".into(),
        ));
    }
    let lead = a[d];
    if lead.norm() == 0.0 {
        return Err(Error::ZeroLeadingCoefficient);
    }
    if ics.len() != d {
        return Err(Error::InvalidArgument(format!(
            "expected {d} initial values, got {}",
            ics.len()
        )));
    }
    if max_step.is_nan() || max_step <= 0.0 {
        return Err(Error::InvalidArgument("step must be positive".into()));
    }

    let rhs = |x: f64, y: &[C64]| -> Vec<C64> {
        let mut dy: Vec<C64> = y[1..].to_vec();
        let lower: C64 = a[..d].iter().zip(y).map(|(aj, yj)| aj * yj).sum();
        dy.push((forcing(x) - lower) / lead);
        dy
    };

    let mut ys = vec![C64::new(0.0, 0.0); points.len()];
    let split = points.partition_point(|&x| x < 0.0);
    // forward from 0 through the nonnegative points
    let mut state = ics.to_vec();
    let mut x = 0.0;
    for i in split..points.len() {
        state = advance(&rhs, x, points[i], state, max_step);
        x = points[i];
        ys[i] = state[0];
    }
    // backward from 0 through the negative points
    let mut state = ics.to_vec();
    let mut x = 0.0;
    for i in (0..split).rev() {
        state = advance(&rhs, x, points[i], state, max_step);
        x = points[i];
        ys[i] = state[0];
    }
    SampledTrajectory::new(points.to_vec(), ys)
}

fn advance(
    rhs: &impl Fn(f64, &[C64]) -> Vec<C64>,
    from: f64,
    to: f64,
    mut y: Vec<C64>,
    max_step: f64,
) -> Vec<C64> {
    let span = to - from;
    if span == 0.0 {
        return y;
    }
    let n = (span.abs() / max_step).ceil().max(1.0) as usize;
    let h = span / n as f64;
    let axpy = |y: &[C64], k: &[C64], s: f64| -> Vec<C64> {
        y.iter().zip(k).map(|(a, b)| a + b * s).collect()
    };
    for i in 0..n {
        let x = from + h * i as f64;
        let k1 = rhs(x, &y);
        let k2 = rhs(x + 0.5 * h, &axpy(&y, &k1, 0.5 * h));
        let k3 = rhs(x + 0.5 * h, &axpy(&y, &k2, 0.5 * h));
        let k4 = rhs(x + h, &axpy(&y, &k3, h));
        for j in 0..y.len() {
            y[j] += (k1[j] + (k2[j] + k3[j]) * 2.0 + k4[j]) * (h / 6.0);
        }
    }
    y
}

/// Composite Simpson approximation of `∫₀ˣ u`.
///
/// Panics unless `nsteps` is even and at least 2.
pub fn quad_j(u: impl Fn(f64) -> C64, x: f64, nsteps: usize) -> C64 {
    assert!(
        nsteps >= 2 && nsteps.is_multiple_of(2),
        "Simpson needs an even number of steps"
    );
    if x == 0.0 {
        return C64::new(0.0, 0.0);
    }
    let h = x / nsteps as f64;
    let mut sum = u(0.0) + u(x);
    for i in 1..nsteps {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += u(h * i as f64) * w;
    }
    sum * (h / 3.0)
}

/// Elementary reference functions.
#[derive(Clone, Debug, PartialEq)]
pub enum ClosedForm {
    /// `e^{λx}`
    Exp(C64),
    Sin,
    Cos,
    /// `Σ pₖxᵏ`
    Poly(Vec<C64>),
}

impl ClosedForm {
    pub fn eval(&self, x: f64) -> C64 {
        match self {
            ClosedForm::Exp(lambda) => (lambda * x).exp(),
            ClosedForm::Sin => C64::new(x.sin(), 0.0),
            ClosedForm::Cos => C64::new(x.cos(), 0.0),
            ClosedForm::Poly(p) => p
                .iter()
                .rev()
                .fold(C64::new(0.0, 0.0), |acc, c| acc * x + c),
        }
    }
}

pub fn closed_form_reference(kind: &ClosedForm, x: f64) -> C64 {
    kind.eval(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::E;

    fn re(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    fn zero_forcing(_: f64) -> C64 {
        re(0.0)
    }

    #[test]
    fn exponential_growth() {
        let f = PolynomialS::from_real(&[-1.0, 1.0]);
        let i = Interval::new(0.0, 1.0).unwrap();
        let traj = rk4_integrate(&f, &[re(1.0)], zero_forcing, i, 1e-3).unwrap();
        assert_eq!(traj.len(), 1001);
        assert!((traj.value_at(1.0).unwrap() - re(E)).norm() < 1e-9);
    }

    #[test]
    fn harmonic_oscillator_both_directions() {
        let f = PolynomialS::from_real(&[1.0, 0.0, 1.0]);
        let traj = rk4_integrate(
            &f,
            &[re(0.0), re(1.0)],
            zero_forcing,
            Interval::unit(),
            1e-3,
        )
        .unwrap();
        assert_eq!(traj.xs[0], -1.0);
        assert_eq!(*traj.xs.last().unwrap(), 1.0);
        assert!(traj.max_deviation(|x| re(x.sin())) < 1e-8);
    }

    #[test]
    fn constant_solution() {
        let f = PolynomialS::monomial(1);
        let c = C64::new(2.5, -1.0);
        let traj = rk4_integrate(&f, &[c], zero_forcing, Interval::unit(), 0.1).unwrap();
        assert!(traj.max_deviation(|_| c) == 0.0);
    }

    #[test]
    fn rejects_bad_operators() {
        let i = Interval::unit();
        assert!(rk4_integrate(&PolynomialS::one(), &[], zero_forcing, i, 0.1).is_err());
        let f = PolynomialS::monomial(1);
        assert!(rk4_integrate(&f, &[re(0.0)], zero_forcing, i, 0.0).is_err());
        assert!(rk4_integrate(&f, &[], zero_forcing, i, 0.1).is_err());
    }

    #[test]
    fn sample_points_off_the_step_grid() {
        let f = PolynomialS::from_real(&[-2.0, 1.0]);
        let pts = [-0.9, -0.33, 0.0, 0.123, 0.77];
        let traj = rk4_sample(&f, &[re(1.0)], zero_forcing, &pts, 1e-3).unwrap();
        assert!(traj.max_deviation(|x| re((2.0 * x).exp())) < 1e-10);
    }

    #[test]
    fn simpson_quadrature() {
        assert!((quad_j(|_| re(1.0), 0.7, 2) - re(0.7)).norm() < 1e-15);
        assert!((quad_j(|x| re(x.cos()), 1.0, 1000) - re(1f64.sin())).norm() < 1e-10);
        assert_eq!(quad_j(|x| re(x.cos()), 0.0, 10), re(0.0));
        // negative upper limit
        assert!((quad_j(re, -2.0, 4) - re(2.0)).norm() < 1e-14);
    }

    #[test]
    fn closed_forms() {
        assert_eq!(
            closed_form_reference(&ClosedForm::Exp(re(0.0)), 0.37),
            re(1.0)
        );
        assert_eq!(closed_form_reference(&ClosedForm::Sin, 0.0), re(0.0));
        assert!((closed_form_reference(&ClosedForm::Exp(re(1.0)), 1.0) - re(E)).norm() < 1e-15);
        let p = ClosedForm::Poly(vec![re(1.0), re(0.0), re(2.0)]);
        assert_eq!(p.eval(3.0), re(19.0));
    }

    #[test]
    fn trajectory_validation() {
        assert!(SampledTrajectory::new(vec![0.0, 0.0], vec![re(0.0); 2]).is_err());
        assert!(SampledTrajectory::new(vec![0.0], vec![]).is_err());
    }
}
