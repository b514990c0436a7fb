//! Truncated power series in `t`, Laurent series, and polynomials in `s = 1/t`.
//!
//! A [`PowerSeries`] stores exactly `trunc_order` coefficients; nothing beyond
//! that index is ever read. A [`LaurentSeries`] is `tᵛ · unit` with the unit
//! part's constant term bounded away from zero, and a [`PolynomialS`] embeds
//! into the Laurent series through `s = t⁻¹`.

mod laurent;
mod poly;
mod power;

pub use laurent::{laurent_ratio, laurent_ratio_default, poly_s_to_laurent, LaurentSeries};
pub use poly::PolynomialS;
pub use power::{PowerSeries, Valuation};

/// Default number of coefficients kept by a truncated series.
pub const DEFAULT_ORDER: usize = 64;

/// Absolute bound under which a constant term is not treated as a unit.
pub const UNIT_TOL: f64 = 1e-12;

/// Relative bound under which a coefficient is treated as zero when
/// computing valuations.
pub const ZERO_TOL: f64 = 1e-12;

/// Ring operation selector for [`PowerSeries::arith`] and
/// [`LaurentSeries::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Sub,
    Mul,
    /// Field division. Only meaningful for Laurent series.
    Div,
}

pub(crate) fn fmt_complex(z: crate::C64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.re == 0.0 {
        format!("{}i", z.im)
    } else {
        format!("({}{:+}i)", z.re, z.im)
    }
}
