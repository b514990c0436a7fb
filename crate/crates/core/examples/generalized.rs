//! Generalized functions: classes of Mikusinski functions modulo the
//! derivatives of constants, on which `s` acts as differentiation.

use opcalc::generalized::n_membership;
use opcalc::{ChebFunction, GeneralizedFunction, Interval, MikusinskiFunction, Result, C64};

pub fn run_example() -> Result<f64> {
    let i = Interval::new(-0.5, 1.5)?;
    let cos = GeneralizedFunction::from_continuous(ChebFunction::from_real_fn(f64::cos, i));

    // D cos = -sin even though s·cos carries a cos(0)·s·1 term: s·1 ∈ N(I).
    let d = cos.derivative(1);
    let minus_sin = ChebFunction::from_real_fn(|x| -x.sin(), i);
    let got = d.to_continuous()?;
    let err = got.max_diff(&minus_sin)?;
    println!("|D cos + sin| = {err:e}");

    let delta = MikusinskiFunction::new(1, ChebFunction::one(i));
    println!("s·1 in N(I): {}", n_membership(&delta));
    let polynomial_derivative = MikusinskiFunction::new(
        3,
        ChebFunction::from_power_basis(
            i,
            &[C64::new(2.0, 0.0), C64::new(-1.0, 0.0), C64::new(0.5, 0.0)],
        ),
    );
    println!(
        "s³(2 - x + x²/2) in N(I): {}",
        n_membership(&polynomial_derivative)
    );
    let not_member = MikusinskiFunction::new(1, ChebFunction::from_real_fn(f64::exp, i));
    println!("s·eˣ in N(I): {}", n_membership(&not_member));

    // J and D are inverse on classes
    let jd = d.integrate();
    println!("J D cos == cos: {}", jd.equals(&cos)?);
    Ok(err)
}

fn main() -> Result<()> {
    run_example()?;
    Ok(())
}
