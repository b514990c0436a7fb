//! Mikusinski functions `sⁿu`: equality by integrating up, the scalar action
//! of Laurent series, and normalization.

use opcalc::series::laurent_ratio;
use opcalc::{ChebFunction, Interval, MikusinskiFunction, PolynomialS, Result, C64};

pub fn run_example() -> Result<f64> {
    let i = Interval::unit();
    let sin = ChebFunction::from_real_fn(f64::sin, i);
    let cos = ChebFunction::from_real_fn(f64::cos, i);

    // s·sin = cos since J(cos) = sin.
    let s_sin = MikusinskiFunction::new(1, sin.clone());
    let as_cos = MikusinskiFunction::from_continuous(cos.clone());
    println!("s·sin == cos: {}", s_sin.equals(&as_cos));

    // s·cos = -sin + s·1 is not continuous, so it stays at order 1.
    let s_cos = MikusinskiFunction::new(1, cos.clone());
    let normalized = s_cos.normalize();
    println!("s·cos normalizes to order {}", normalized.order());

    // (s² + 1)/s · sin = s·sin + J(sin) = cos + 1 - cos = 1
    let h = laurent_ratio(
        &PolynomialS::from_real(&[1.0, 0.0, 1.0]),
        &PolynomialS::monomial(1),
        32,
    )?;
    let image = MikusinskiFunction::from_continuous(sin)
        .scalar_mul(&h)
        .normalize();
    let one = ChebFunction::one(i);
    let err = image
        .body()
        .derivative_n(image.order())
        .max_deviation_from(|_| C64::new(1.0, 0.0), 200);
    println!("((s² + 1)/s)·sin = 1 with error {err:e}");
    assert!(image.equals(&MikusinskiFunction::from_continuous(one)));
    Ok(err)
}

fn main() -> Result<()> {
    run_example()?;
    Ok(())
}
