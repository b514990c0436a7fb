//! Solutions of `f(D)ξ = 0` as transforms `E(s^{j+1}/f)`, and recovery of
//! the numerator `r` of a given solution.

use opcalc::ode::{homogeneous_numerator, is_solution, solve_homogeneous_basis};
use opcalc::{ChebFunction, GeneralizedFunction, Interval, PolynomialS, Result, C64};

pub fn run_example() -> Result<f64> {
    let i = Interval::unit();
    // (s - 1)²: solutions eˣ and x·eˣ
    let f = PolynomialS::from_roots(&[C64::new(1.0, 0.0), C64::new(1.0, 0.0)]);
    let basis = solve_homogeneous_basis(&f, i)?;
    println!(
        "f = {f}, dimension {}, condition {:.3}",
        basis.dimension(),
        basis.condition
    );
    for (j, row) in basis.initial_matrix.iter().enumerate() {
        let re: Vec<f64> = row.iter().map(|c| c.re).collect();
        println!("  xi_{j}: derivatives at 0 = {re:?}");
    }

    // ξ₀ = E(s/(s-1)²) = x·eˣ, ξ₁ = E(s²/(s-1)²) = (1 + x)·eˣ
    let e0 = basis.elements[0]
        .rep()
        .body()
        .max_deviation_from(|x| C64::new(x * x.exp(), 0.0), 400);
    let e1 = basis.elements[1]
        .rep()
        .body()
        .max_deviation_from(|x| C64::new((1.0 + x) * x.exp(), 0.0), 400);
    println!("|xi_0 - x e^x| = {e0:e}, |xi_1 - (1 + x) e^x| = {e1:e}");

    let zero = GeneralizedFunction::zero(i);
    for e in &basis.elements {
        assert!(is_solution(&f, e, &zero));
    }

    // eˣ = ξ₁ - ξ₀ = E(s·(s - 1)/f), so r = s - 1
    let exp = GeneralizedFunction::from_continuous(ChebFunction::from_real_fn(f64::exp, i));
    let r = homogeneous_numerator(&f, &exp)?;
    println!("e^x = E(s·r/f) with r = {r}");
    let err_r = (r.coeff(0) + 1.0).norm().max((r.coeff(1) - 1.0).norm());
    Ok(e0.max(e1).max(err_r))
}

fn main() -> Result<()> {
    let err = run_example()?;
    println!("max error: {err:e}");
    Ok(())
}
