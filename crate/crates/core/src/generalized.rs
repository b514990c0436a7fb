//! Generalized functions: Mikusinski functions modulo
//! `N(I) = { f·𝟏 : f ∈ s·ℂ[s] }`, the derivatives of constants.
//!
//! Membership in `N(I)` is decided on the representative `sᵐv`:
//! `sᵐv = f(s)𝟏` with `f ∈ sℂ[s]` holds exactly when `v` is a polynomial of
//! degree at most `m − 1` (and `v = 0` when `m = 0`). Polynomials of bounded
//! degree form the same subspace in the Chebyshev and the monomial basis, so
//! the test reads the Chebyshev coefficients of index `≥ m` directly.

use crate::funcrep::{ChebFunction, Interval, Precision};
use crate::mikusinski::MikusinskiFunction;
use crate::series::LaurentSeries;
use crate::{Error, Result, C64};

/// Relative tolerance for membership in `N(I)`.
pub const MEMBERSHIP_TOL: f64 = 1e-8;

/// `w ∈ N(I)` at [`MEMBERSHIP_TOL`], relative to the body's own size.
pub fn n_membership(w: &MikusinskiFunction) -> bool {
    n_membership_tol(w, MEMBERSHIP_TOL, 0.0)
}

/// `w = sᵐv ∈ N(I)`: the Chebyshev coefficients of `v` from index `m` on
/// sum to at most `tol · max(‖v‖∞, reference)`.
///
/// `reference` lets callers that built `v` as a difference measure the
/// residual against the size of the operands rather than the residual itself.
pub fn n_membership_tol(w: &MikusinskiFunction, tol: f64, reference: f64) -> bool {
    let body = w.body();
    let tail: f64 = body.coeffs().iter().skip(w.order()).map(|c| c.norm()).sum();
    if tail == 0.0 {
        return true;
    }
    tail <= tol * body.sup_norm().max(reference)
}

/// A coset `w + N(I)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneralizedFunction {
    rep: MikusinskiFunction,
}

impl GeneralizedFunction {
    pub fn from_mikusinski(rep: MikusinskiFunction) -> Self {
        GeneralizedFunction { rep }
    }

    /// The class of a continuous function; injective by `C(I) ∩ N(I) = {0}`.
    pub fn from_continuous(u: ChebFunction) -> Self {
        Self::from_mikusinski(MikusinskiFunction::from_continuous(u))
    }

    pub fn zero(interval: Interval) -> Self {
        Self::from_mikusinski(MikusinskiFunction::zero(interval))
    }

    pub fn rep(&self) -> &MikusinskiFunction {
        &self.rep
    }

    pub fn into_rep(self) -> MikusinskiFunction {
        self.rep
    }

    pub fn interval(&self) -> Interval {
        self.rep.interval()
    }

    pub fn precision(&self) -> Precision {
        self.rep.precision()
    }

    /// Coset equality at [`MEMBERSHIP_TOL`].
    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.equals_tol(other, MEMBERSHIP_TOL)
    }

    /// `rep₁ − rep₂ ∈ N(I)`, with the residual measured against the larger
    /// of the two aligned bodies.
    pub fn equals_tol(&self, other: &Self, tol: f64) -> Result<bool> {
        let (n, u1, u2) = self.rep.aligned(&other.rep)?;
        let reference = u1.sup_norm().max(u2.sup_norm());
        let diff = MikusinskiFunction::new(n, u1.sub(&u2)?);
        Ok(n_membership_tol(&diff, tol, reference))
    }

    pub fn is_zero(&self) -> bool {
        n_membership(&self.rep)
    }

    pub fn linear_combination(&self, c1: C64, other: &Self, c2: C64) -> Result<Self> {
        Ok(Self::from_mikusinski(
            self.rep.linear_combination(c1, &other.rep, c2)?,
        ))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Self::from_mikusinski(self.rep.add(&other.rep)?))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Ok(Self::from_mikusinski(self.rep.sub(&other.rep)?))
    }

    pub fn scale(&self, c: C64) -> Self {
        Self::from_mikusinski(self.rep.scale(c))
    }

    /// `Dᵏξ = sᵏξ`.
    pub fn derivative(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        let s_k = LaurentSeries::t_power(-(k as i64), 1);
        Self::from_mikusinski(self.rep.scalar_mul(&s_k))
    }

    /// `J` applied to the representative.
    ///
    /// `D∘J` is the identity on classes and `J∘D` on representatives; `J`
    /// itself does not respect the quotient, since `J(s·1) = 1 ∉ N(I)`.
    pub fn integrate(&self) -> Self {
        Self::from_mikusinski(self.rep.integrate())
    }

    /// The continuous function in this class, if there is one.
    ///
    /// With representative `sᵐv` the candidate is `v⁽ᵐ⁾`; it is returned only
    /// when its class equals `self`.
    pub fn materialize(&self) -> Option<ChebFunction> {
        let candidate = self.rep.body().derivative_n(self.rep.order());
        let class = Self::from_continuous(candidate.clone());
        match self.equals(&class) {
            Ok(true) => Some(candidate),
            _ => None,
        }
    }

    /// [`GeneralizedFunction::materialize`] as a `Result`.
    pub fn to_continuous(&self) -> Result<ChebFunction> {
        self.materialize().ok_or(Error::NotMaterializable)
    }
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

    fn mono(k: usize) -> ChebFunction {
        let mut p = vec![re(0.0); k + 1];
        p[k] = re(1.0);
        ChebFunction::from_power_basis(unit(), &p)
    }

    fn exp() -> ChebFunction {
        ChebFunction::from_real_fn(f64::exp, unit())
    }

    #[test]
    fn membership_examples() {
        let one = ChebFunction::one(unit());
        assert!(n_membership(&MikusinskiFunction::new(1, one.clone())));
        assert!(!n_membership(&MikusinskiFunction::new(0, one)));
        assert!(n_membership(&MikusinskiFunction::new(2, mono(1))));
        assert!(!n_membership(&MikusinskiFunction::new(2, mono(2))));
        assert!(n_membership(&MikusinskiFunction::zero(unit())));
    }

    #[test]
    fn continuous_classes_are_distinct() {
        let a = GeneralizedFunction::from_continuous(exp());
        let b = GeneralizedFunction::from_continuous(ChebFunction::one(unit()));
        assert!(!a.equals(&b).unwrap());
        assert!(a.equals(&a).unwrap());
        assert!(GeneralizedFunction::from_continuous(ChebFunction::zero(unit())).is_zero());
        assert!(!b.is_zero());
    }

    #[test]
    fn s_one_is_zero_class() {
        let s1 = GeneralizedFunction::from_mikusinski(MikusinskiFunction::new(
            1,
            ChebFunction::one(unit()),
        ));
        assert!(s1.equals(&GeneralizedFunction::zero(unit())).unwrap());
    }

    #[test]
    fn interval_mismatch() {
        let a = GeneralizedFunction::zero(unit());
        let b = GeneralizedFunction::zero(Interval::new(-2.0, 1.0).unwrap());
        assert_eq!(a.equals(&b), Err(Error::IntervalMismatch));
    }

    #[test]
    fn derivative_examples() {
        let x = GeneralizedFunction::from_continuous(mono(1));
        let one = GeneralizedFunction::from_continuous(ChebFunction::one(unit()));
        assert!(x.derivative(1).equals(&one).unwrap());
        assert!(one.derivative(1).is_zero());
        assert_eq!(one.derivative(0), one);

        let e = GeneralizedFunction::from_continuous(exp());
        let de = GeneralizedFunction::from_continuous(exp().derivative());
        assert!(e.derivative(1).equals(&de).unwrap());
    }

    #[test]
    fn materialize_examples() {
        let u = ChebFunction::from_real_fn(|x| (2.0 * x).sin() + x * x, unit());
        let c = GeneralizedFunction::from_continuous(u.clone());
        assert!(c.materialize().unwrap().max_diff(&u).unwrap() < 1e-14);

        // s²(J²u + x): the x term is a derivative-of-constant remainder
        let body = u.integral_n(2).add(&mono(1)).unwrap();
        let w = GeneralizedFunction::from_mikusinski(MikusinskiFunction::new(2, body));
        let m = w.materialize().unwrap();
        assert!(m.max_diff(&u).unwrap() < 1e-10);

        let e = GeneralizedFunction::from_mikusinski(MikusinskiFunction::new(1, exp()));
        let m = e.materialize().unwrap();
        assert!(m.max_deviation_from(|x| re(x.exp()), 500) < 1e-10);
    }

    #[test]
    fn smoothed_delta_materializes_to_its_proxy() {
        // s·H for a smoothed Heaviside H is a narrow bump, not a true delta.
        let h = |x: f64| 0.5 * (1.0 + (20.0 * x).tanh());
        let step = ChebFunction::from_real_fn(h, unit());
        let delta = GeneralizedFunction::from_mikusinski(MikusinskiFunction::new(1, step));
        let bump = delta.materialize().unwrap();
        let err = bump.max_deviation_from(|x| re(10.0 / (20.0 * x).cosh().powi(2)), 401);
        assert!(err < 1e-8, "{err:e}");
    }
}
