//! Truncated power series, Laurent series and polynomials in `s = 1/t`.
//!
//! Inverts `1 − t` back to the geometric series, expands `s/(s² + 1)` as a
//! Laurent series and divides polynomials in `s`.

use opcalc::series::{laurent_ratio, poly_s_to_laurent};
use opcalc::{PolynomialS, PowerSeries, Result, Valuation, C64};

pub fn run_example() -> Result<f64> {
    let order = 16;

    let a = PowerSeries::from_real(&[1.0, -1.0], order);
    let inv = a.invert()?;
    println!("1/(1 - t) = {inv}");
    let round_trip = (&(&a * &inv) - &PowerSeries::one(order)).max_abs();
    println!("|(1 - t)·(1/(1 - t)) - 1| = {round_trip:e}");

    let f = PolynomialS::from_real(&[1.0, 0.0, 1.0]);
    let embedded = poly_s_to_laurent(&f, order)?;
    println!(
        "s^2 + 1 = t^{} · ({})",
        embedded.valuation(),
        embedded.unit_part()
    );

    let ratio = laurent_ratio(&PolynomialS::monomial(1), &f, order)?;
    assert_eq!(ratio.valuation(), Valuation::Finite(1));
    println!("s/(s^2 + 1) = t - t^3 + t^5 - ...:");
    let mut err: f64 = round_trip;
    for k in 1..8 {
        let expect = match k % 4 {
            1 => 1.0,
            3 => -1.0,
            _ => 0.0,
        };
        let c = ratio.coeff(k);
        err = err.max((c - C64::new(expect, 0.0)).norm());
        println!("  [t^{k}] = {}", c.re);
    }

    let p = PolynomialS::from_real(&[-6.0, 11.0, -6.0, 1.0]);
    let q = PolynomialS::from_real(&[-1.0, 1.0]);
    let (quot, rem) = p.divmod(&q)?;
    println!("({p}) = ({quot})·({q}) + ({rem})");
    Ok(err)
}

fn main() -> Result<()> {
    let err = run_example()?;
    println!("max error against closed forms: {err:e}");
    Ok(())
}
