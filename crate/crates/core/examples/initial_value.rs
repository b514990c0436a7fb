//! `ξ'' + ξ = eˣ`, `ξ(0) = ξ'(0) = 0` solved algebraically and checked
//! against RK4 and the closed form `(eˣ - cos x - sin x)/2`.

use opcalc::ode::{initial_value_solve, is_solution};
use opcalc::oracle::rk4_integrate;
use opcalc::{ChebFunction, GeneralizedFunction, Interval, OdeProblem, PolynomialS, Result, C64};

pub fn run_example() -> Result<f64> {
    let i = Interval::unit();
    let f = PolynomialS::from_real(&[1.0, 0.0, 1.0]);
    let omega = GeneralizedFunction::from_continuous(ChebFunction::from_real_fn(f64::exp, i));
    let zero = C64::new(0.0, 0.0);
    let problem = OdeProblem::new(f.clone(), omega.clone(), Some(vec![zero, zero]))?;
    let xi = initial_value_solve(&problem)?;
    assert!(is_solution(&f, &xi, &omega));
    let u = xi.to_continuous()?;

    let closed = |x: f64| C64::new(0.5 * (x.exp() - x.cos() - x.sin()), 0.0);
    let err_closed = u.max_deviation_from(closed, 400);

    let rk4 = rk4_integrate(&f, &[zero, zero], |x| C64::new(x.exp(), 0.0), i, 1e-3)?;
    let err_rk4 = rk4.max_deviation(|x| u.eval(x).unwrap_or_default());
    println!("max |xi - closed form| = {err_closed:e}");
    println!("max |xi - rk4| over {} points = {err_rk4:e}", rk4.len());
    Ok(err_closed.max(err_rk4))
}

fn main() -> Result<()> {
    run_example()?;
    Ok(())
}
