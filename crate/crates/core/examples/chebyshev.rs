//! Chebyshev proxies of continuous functions and the action of power series
//! through the integration operator `J`.

use opcalc::funcrep::{e_transform, module_mul, DEFAULT_TOL};
use opcalc::{ChebFunction, Interval, PowerSeries, Result, C64};

pub fn run_example() -> Result<f64> {
    let interval = Interval::new(-1.0, 2.0)?;
    let exp = ChebFunction::from_callable(|x| C64::new(x.exp(), 0.0), interval, DEFAULT_TOL);
    exp.require_converged()?;
    println!("exp on [-1, 2]: degree {}", exp.degree());

    // J(exp) = exp - 1 and D∘J = id
    let j = exp.integral();
    let err_j = j.max_deviation_from(|x| C64::new(x.exp() - 1.0, 0.0), 400);
    let err_dj = j.derivative().max_diff(&exp)?;
    println!("|J(exp) - (exp - 1)| = {err_j:e}, |D J exp - exp| = {err_dj:e}");

    // (1/(1 - t))·1 = Σ Jⁿ1 = Σ xⁿ/n! = eˣ
    let geometric = PowerSeries::geometric(C64::new(1.0, 0.0), 64);
    let via_j = module_mul(&geometric, &ChebFunction::one(interval));
    let via_e = e_transform(&geometric, interval);
    let err_action = via_j.max_deviation_from(|x| C64::new(x.exp(), 0.0), 400);
    let err_e = via_e.max_diff(&exp)?;
    println!("|g·1 - exp| = {err_action:e}, |E(g) - exp| = {err_e:e}");
    println!("precision flags: {:?}", via_j.precision());

    Ok(err_j.max(err_dj).max(err_action).max(err_e))
}

fn main() -> Result<()> {
    let err = run_example()?;
    println!("max error: {err:e}");
    Ok(())
}
