use super::{ChebFunction, Interval, Precision, TAIL_TOL};
use crate::series::PowerSeries;
use crate::C64;

/// Number of terms needed to sum `Σ bₙ Jⁿ(u)` on an interval of radius `radius`.
///
/// Returns the smallest `M` with `Σ_{n>M} |bₙ| radiusⁿ/n! < TAIL_TOL`
/// (coefficients past the truncation order count as zero), together with a
/// flag telling whether the last stored term was itself above tolerance,
/// in which case the neglected tail past the truncation is not controlled.
pub fn series_cutoff(g: &PowerSeries, radius: f64) -> (usize, bool) {
    let n = g.order();
    let mut weights = Vec::with_capacity(n);
    let mut scale = 1.0;
    for (k, b) in g.coeffs().iter().enumerate() {
        if k > 0 {
            scale *= radius / k as f64;
        }
        weights.push(b.norm() * scale);
    }
    let truncated = weights[n - 1] >= TAIL_TOL;
    let mut tail = 0.0;
    let mut cutoff = 0;
    for k in (1..n).rev() {
        tail += weights[k];
        if tail >= TAIL_TOL {
            cutoff = k;
            break;
        }
    }
    (cutoff, truncated)
}

/// The module action `g·u = Σ_{n=0..M} bₙ Jⁿ(u)`.
pub fn module_mul(g: &PowerSeries, u: &ChebFunction) -> ChebFunction {
    let interval = u.interval();
    let (cutoff, truncated) = series_cutoff(g, interval.radius());
    let b = g.coeffs();
    let mut acc: Vec<C64> = u.coeffs().iter().map(|c| c * b[0]).collect();
    let mut term = u.clone();
    for &bn in &b[1..=cutoff] {
        term = term.integral();
        if acc.len() < term.coeffs().len() {
            acc.resize(term.coeffs().len(), C64::new(0.0, 0.0));
        }
        for (a, c) in acc.iter_mut().zip(term.coeffs()) {
            *a += bn * c;
        }
    }
    let precision = u.precision()
        | Precision {
            truncated,
            ..Precision::exact()
        };
    ChebFunction::with_precision(interval, acc, precision)
}

/// `E(g) = g·𝟏 = Σ bₙ xⁿ/n!`, summed directly in the monomial basis.
pub fn e_transform(g: &PowerSeries, interval: Interval) -> ChebFunction {
    let (cutoff, truncated) = series_cutoff(g, interval.radius());
    let mut fact = 1.0;
    let taylor: Vec<C64> = g.coeffs()[..=cutoff]
        .iter()
        .enumerate()
        .map(|(n, b)| {
            if n > 0 {
                fact *= n as f64;
            }
            b / fact
        })
        .collect();
    let mut f = ChebFunction::from_power_basis(interval, &taylor);
    f.mark(Precision {
        truncated,
        ..Precision::exact()
    });
    f
}
