//! Linear constant-coefficient equations `f(D)ξ = ω` on `G(I)`.
//!
//! A particular solution is `(1/f)·ω`, computed by Laurent division. The
//! homogeneous solutions are `E(s·r/f)` for polynomials `r` of degree below
//! `deg f`; with the monomial basis `r = sʲ` the `k`-th derivative at the
//! origin of each basis element is the `k`-th series coefficient of
//! `s^{j+1}/f`, which makes initial value selection a triangular solve.

use nalgebra::{DMatrix, DVector};

use crate::funcrep::{e_transform, ChebFunction, Interval};
use crate::generalized::GeneralizedFunction;
use crate::mikusinski::MikusinskiFunction;
use crate::series::{
    laurent_ratio, poly_s_to_laurent, PolynomialS, PowerSeries, DEFAULT_ORDER, UNIT_TOL,
};
use crate::{Error, Result, C64};

/// Residual tolerance used by [`is_solution`].
pub const RESIDUAL_TOL: f64 = 1e-8;

/// `f(D)ξ = ω` on an interval, optionally with initial values
/// `ξ(0), ξ′(0), …, ξ^{(d−1)}(0)`.
#[derive(Clone, Debug)]
pub struct OdeProblem {
    pub f: PolynomialS,
    pub omega: GeneralizedFunction,
    pub interval: Interval,
    pub initial_values: Option<Vec<C64>>,
}

impl OdeProblem {
    pub fn new(
        f: PolynomialS,
        omega: GeneralizedFunction,
        initial_values: Option<Vec<C64>>,
    ) -> Result<Self> {
        let d = f.degree().ok_or(Error::ZeroPolynomial)?;
        if let Some(iv) = &initial_values {
            if iv.len() != d {
                return Err(Error::InvalidArgument(format!(
                    "expected {d} initial values, got {}",
                    iv.len()
                )));
            }
        }
        Ok(OdeProblem {
            interval: omega.interval(),
            f,
            omega,
            initial_values,
        })
    }

    /// The homogeneous problem `f(D)ξ = 0`.
    pub fn homogeneous(
        f: PolynomialS,
        interval: Interval,
        initial_values: Option<Vec<C64>>,
    ) -> Result<Self> {
        Self::new(f, GeneralizedFunction::zero(interval), initial_values)
    }
}

/// `f(D)ξ = Σ aⱼ Dʲξ`, computed as the scalar action of `f ∈ ℂ({t})`.
pub fn apply_poly_d(f: &PolynomialS, xi: &GeneralizedFunction) -> GeneralizedFunction {
    match poly_s_to_laurent(f, DEFAULT_ORDER.max(f.degree().unwrap_or(0) + 1)) {
        Ok(h) => GeneralizedFunction::from_mikusinski(xi.rep().scalar_mul(&h)),
        Err(_) => GeneralizedFunction::zero(xi.interval()),
    }
}

/// `ξ = (1/f)·ω`, a solution of `f(D)ξ = ω` for every `ω`.
pub fn solve_particular(
    f: &PolynomialS,
    omega: &GeneralizedFunction,
) -> Result<GeneralizedFunction> {
    let inv = laurent_ratio(&PolynomialS::one(), f, DEFAULT_ORDER)?;
    Ok(GeneralizedFunction::from_mikusinski(
        omega.rep().scalar_mul(&inv),
    ))
}

/// `f(D)ξ ≡ ω` modulo `N(I)` at [`RESIDUAL_TOL`].
pub fn is_solution(f: &PolynomialS, xi: &GeneralizedFunction, omega: &GeneralizedFunction) -> bool {
    is_solution_tol(f, xi, omega, RESIDUAL_TOL)
}

pub fn is_solution_tol(
    f: &PolynomialS,
    xi: &GeneralizedFunction,
    omega: &GeneralizedFunction,
    tol: f64,
) -> bool {
    apply_poly_d(f, xi).equals_tol(omega, tol).unwrap_or(false)
}

/// Basis `ξⱼ = E(s^{j+1}/f)`, `j = 0..d−1`, of the solutions of `f(D)ξ = 0`.
#[derive(Clone, Debug)]
pub struct HomogeneousBasis {
    /// The basis functions as classes of continuous functions.
    pub elements: Vec<GeneralizedFunction>,
    /// Power series `s^{j+1}/f ∈ ℂ{t}` whose transforms are the elements.
    pub series: Vec<PowerSeries>,
    /// Row `j` holds `ξⱼ^{(k)}(0)` for `k = 0..d−1`.
    pub initial_matrix: Vec<Vec<C64>>,
    /// 2-norm condition number of `initial_matrix` (1 for an empty basis).
    pub condition: f64,
}

impl HomogeneousBasis {
    pub fn dimension(&self) -> usize {
        self.elements.len()
    }

    /// The continuous representatives.
    pub fn functions(&self) -> Vec<&ChebFunction> {
        self.elements.iter().map(|e| e.rep().body()).collect()
    }

    /// `Σ cⱼ ξⱼ = E(s·r/f)` for `r = Σ cⱼ sʲ`.
    pub fn combine(&self, coefficients: &[C64], interval: Interval) -> Result<ChebFunction> {
        self.elements
            .iter()
            .zip(coefficients)
            .try_fold(ChebFunction::zero(interval), |acc, (e, c)| {
                acc.linear_combination(C64::new(1.0, 0.0), e.rep().body(), *c)
            })
    }
}

/// Solutions of `f(D)ξ = 0` on `interval`.
///
/// A nonzero constant `f` has only the zero solution and yields an empty
/// basis; the zero polynomial is rejected.
pub fn solve_homogeneous_basis(f: &PolynomialS, interval: Interval) -> Result<HomogeneousBasis> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    let mut basis = HomogeneousBasis {
        elements: Vec::with_capacity(d),
        series: Vec::with_capacity(d),
        initial_matrix: Vec::with_capacity(d),
        condition: 1.0,
    };
    for j in 0..d {
        let ratio = laurent_ratio(&PolynomialS::monomial(j + 1), f, DEFAULT_ORDER)?;
        // valuation of s^{j+1}/f is d − j − 1 ≥ 0
        let series = ratio.to_power_series()?;
        let e = e_transform(&series, interval);
        basis
            .initial_matrix
            .push((0..d).map(|k| series.coeff(k)).collect());
        basis.elements.push(GeneralizedFunction::from_continuous(e));
        basis.series.push(series);
    }
    if d > 0 {
        basis.condition = condition_number(&basis.initial_matrix);
    }
    Ok(basis)
}

fn condition_number(rows: &[Vec<C64>]) -> f64 {
    let n = rows.len();
    let m = DMatrix::from_fn(n, n, |i, j| rows[i][j]);
    let sv = m.singular_values();
    let max = sv.iter().cloned().fold(0.0, f64::max);
    let min = sv.iter().cloned().fold(f64::INFINITY, f64::min);
    if min == 0.0 {
        f64::INFINITY
    } else {
        max / min
    }
}

/// For a homogeneous solution `ξ`, the canonical `r` (`deg r < deg f`) with
/// `ξ ≡ E(s·r/f)`.
///
/// With `f(D)ξ` represented by `sᵐv`, `v` is a polynomial of degree below
/// `m` and `f(D)ξ = s·P(s)·𝟏` with `P(s) = Σₖ v⁽ᵏ⁾(0) s^{m−k−1}`. Then
/// `ξ ≡ s·P/f`, and Euclidean division `P = q·f + r` drops `s·q·𝟏 ∈ N(I)`.
pub fn homogeneous_numerator(f: &PolynomialS, xi: &GeneralizedFunction) -> Result<PolynomialS> {
    if f.degree().ok_or(Error::ZeroPolynomial)? == 0 {
        return Ok(PolynomialS::zero());
    }
    let image = apply_poly_d(f, xi);
    if !image.is_zero() {
        return Err(Error::InvalidArgument(
            "not a solution of the homogeneous equation".into(),
        ));
    }
    let m = image.rep().order();
    let mut p = vec![C64::new(0.0, 0.0); m];
    let mut v = image.rep().body().clone();
    for k in 0..m {
        p[m - k - 1] = v.eval(0.0)?;
        v = v.derivative();
    }
    let (_, r) = PolynomialS::new(p).divmod(f)?;
    Ok(r)
}

/// The solution of `f(D)ξ = ω` with prescribed `ξ^{(k)}(0)`, `k < deg f`.
///
/// `ξ = (1/f)ω + E(s·r/f)` where `r` matches the initial values left over
/// after the particular part.
pub fn initial_value_solve(problem: &OdeProblem) -> Result<GeneralizedFunction> {
    let f = &problem.f;
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    if d == 0 {
        return Err(Error::DegreeZero);
    }
    let iv = problem
        .initial_values
        .as_ref()
        .ok_or_else(|| Error::InvalidArgument("initial values are required".into()))?;
    if iv.len() != d {
        return Err(Error::InvalidArgument(format!(
            "expected {d} initial values, got {}",
            iv.len()
        )));
    }
    if f.leading().map(|a| a.norm()).unwrap_or(0.0) <= UNIT_TOL {
        return Err(Error::SingularSystem);
    }
    let interval = problem.interval;
    let forcing = problem.omega.to_continuous()?;
    let particular =
        solve_particular(f, &GeneralizedFunction::from_continuous(forcing))?.to_continuous()?;

    let mut rhs = Vec::with_capacity(d);
    let mut deriv = particular.clone();
    for value in iv {
        rhs.push(value - deriv.eval(0.0)?);
        deriv = deriv.derivative();
    }

    let basis = solve_homogeneous_basis(f, interval)?;
    // Σ_j c_j M[j][k] = rhs[k]
    let m = DMatrix::from_fn(d, d, |k, j| basis.initial_matrix[j][k]);
    let c = m
        .lu()
        .solve(&DVector::from_vec(rhs))
        .ok_or(Error::SingularSystem)?;
    let homogeneous = basis.combine(c.as_slice(), interval)?;
    Ok(GeneralizedFunction::from_mikusinski(
        MikusinskiFunction::from_continuous(particular.add(&homogeneous)?),
    ))
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

    fn class(f: impl Fn(f64) -> f64) -> GeneralizedFunction {
        GeneralizedFunction::from_continuous(ChebFunction::from_real_fn(f, unit()))
    }

    #[test]
    fn apply_poly_d_examples() {
        let x = class(|x| x);
        assert_eq!(apply_poly_d(&PolynomialS::one(), &x), x);
        let one = class(|_| 1.0);
        assert!(apply_poly_d(&PolynomialS::monomial(1), &x)
            .equals(&one)
            .unwrap());
        let sin = class(f64::sin);
        let f = PolynomialS::from_real(&[1.0, 0.0, 1.0]);
        assert!(apply_poly_d(&f, &sin).is_zero());
        assert!(apply_poly_d(&PolynomialS::zero(), &sin).is_zero());
    }

    #[test]
    fn particular_solutions() {
        let e = class(f64::exp);
        let xi = solve_particular(&PolynomialS::one(), &e).unwrap();
        assert!(xi.equals(&e).unwrap());

        let u = ChebFunction::from_real_fn(|x| (3.0 * x).cos(), unit());
        let xi = solve_particular(
            &PolynomialS::monomial(1),
            &GeneralizedFunction::from_continuous(u.clone()),
        )
        .unwrap();
        assert!(xi.rep().body().max_diff(&u.integral()).unwrap() < 1e-15);

        let f = PolynomialS::from_real(&[-1.0, 1.0]);
        let xi = solve_particular(&f, &e).unwrap();
        assert!(is_solution(&f, &xi, &e));

        assert_eq!(
            solve_particular(&PolynomialS::zero(), &e),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn first_order_basis_is_constant() {
        let b = solve_homogeneous_basis(&PolynomialS::monomial(1), unit()).unwrap();
        assert_eq!(b.dimension(), 1);
        assert!(b.functions()[0].max_deviation_from(|_| re(1.0), 11) < 1e-15);
    }

    #[test]
    fn harmonic_basis_is_sin_cos() {
        let f = PolynomialS::from_real(&[1.0, 0.0, 1.0]);
        let b = solve_homogeneous_basis(&f, unit()).unwrap();
        let fs = b.functions();
        assert!(fs[0].max_deviation_from(|x| re(x.sin()), 1000) < 1e-10);
        assert!(fs[1].max_deviation_from(|x| re(x.cos()), 1000) < 1e-10);
        assert_eq!(
            b.initial_matrix,
            vec![vec![re(0.0), re(1.0)], vec![re(1.0), re(0.0)]]
        );
        assert!((b.condition - 1.0).abs() < 1e-12);
        for e in &b.elements {
            assert!(is_solution(&f, e, &GeneralizedFunction::zero(unit())));
        }
    }

    #[test]
    fn repeated_root_contains_x_exp() {
        let f = PolynomialS::from_roots(&[re(1.0), re(1.0)]);
        let b = solve_homogeneous_basis(&f, unit()).unwrap();
        // t/(1 − t)² = Σ (n+1) t^{n+1}
        assert!(b.functions()[0].max_deviation_from(|x| re(x * x.exp()), 1000) < 1e-9);
    }

    #[test]
    fn constant_operator_has_trivial_basis() {
        let b = solve_homogeneous_basis(&PolynomialS::from_real(&[3.0]), unit()).unwrap();
        assert_eq!(b.dimension(), 0);
        assert!(matches!(
            solve_homogeneous_basis(&PolynomialS::zero(), unit()),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn initial_value_examples() {
        let p = OdeProblem::homogeneous(
            PolynomialS::from_real(&[-1.0, 1.0]),
            unit(),
            Some(vec![re(1.0)]),
        )
        .unwrap();
        let xi = initial_value_solve(&p).unwrap();
        assert!(xi.rep().body().max_deviation_from(|x| re(x.exp()), 1000) < 1e-10);

        let p = OdeProblem::homogeneous(
            PolynomialS::from_real(&[1.0, 0.0, 1.0]),
            unit(),
            Some(vec![re(0.0), re(1.0)]),
        )
        .unwrap();
        let xi = initial_value_solve(&p).unwrap();
        assert!(xi.rep().body().max_deviation_from(|x| re(x.sin()), 1000) < 1e-10);

        let p = OdeProblem::new(
            PolynomialS::monomial(1),
            class(|_| 1.0),
            Some(vec![re(0.0)]),
        )
        .unwrap();
        let xi = initial_value_solve(&p).unwrap();
        assert!(xi.rep().body().max_deviation_from(re, 1000) < 1e-14);
    }

    #[test]
    fn initial_values_must_match_degree() {
        let err = OdeProblem::homogeneous(PolynomialS::monomial(2), unit(), Some(vec![re(1.0)]));
        assert!(matches!(err, Err(Error::InvalidArgument(_))));
        let p = OdeProblem::homogeneous(PolynomialS::monomial(2), unit(), None).unwrap();
        assert!(matches!(
            initial_value_solve(&p),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn derivative_of_constant_forcing_acts_as_zero() {
        let delta = GeneralizedFunction::from_mikusinski(MikusinskiFunction::new(
            1,
            ChebFunction::one(unit()),
        ));
        let p = OdeProblem::new(
            PolynomialS::from_real(&[1.0, 1.0]),
            delta,
            Some(vec![re(0.0)]),
        )
        .unwrap();
        // s·𝟏 ≡ 0 materializes to the zero function
        let xi = initial_value_solve(&p).unwrap();
        assert!(xi.rep().body().max_deviation_from(|_| re(0.0), 11) < 1e-14);
    }

    #[test]
    fn constants_do_not_solve_growth_equation() {
        let f = PolynomialS::from_real(&[-1.0, 1.0]);
        assert!(!is_solution(
            &f,
            &class(|_| 1.0),
            &GeneralizedFunction::zero(unit())
        ));
    }

    #[test]
    fn numerator_recovery() {
        let f = PolynomialS::from_real(&[1.0, 0.0, 1.0]);
        let xi = class(|x| 2.0 * x.sin() - 3.0 * x.cos());
        let r = homogeneous_numerator(&f, &xi).unwrap();
        // sin = E(s/f), cos = E(s²/f): r = 2 − 3s
        assert!((r.coeff(0) - re(2.0)).norm() < 1e-10);
        assert!((r.coeff(1) - re(-3.0)).norm() < 1e-10);
    }
}
