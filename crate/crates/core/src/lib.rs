//! Operational calculus on an interval containing the origin.
//!
//! Continuous functions form a module over convergent power series in `t`,
//! where `t` acts as the integration operator `J(u)(x) = ∫₀ˣ u`. Inverting `t`
//! gives `s = 1/t` and the space of Mikusinski functions `sⁿu`; quotienting by
//! the derivatives of constants gives generalized functions, on which `s` is
//! differentiation. Linear constant-coefficient equations `f(D)ξ = ω` are then
//! solved by series division instead of classical integration.
//!
//! The crate is layered bottom-up:
//!
//! - [`series`]: truncated power series, Laurent series and polynomials in `s`.
//! - [`funcrep`]: Chebyshev proxies of continuous functions, `J`, the module
//!   action `g·u` and the transform `E(g) = g·𝟏`.
//! - [`mikusinski`]: the normal form `sⁿu`, equality of ratios, scalar action.
//! - [`generalized`]: classes modulo derivatives of constants, `D`.
//! - [`ode`]: particular and homogeneous solutions, initial value selection.
//! - [`oracle`]: classical RK4 and Simpson references sharing no code with the kernel.
//! - [`cli`]: problem documents, the expression grammar and the `opcalc` commands.

pub mod cli;
pub mod error;
pub mod funcrep;
pub mod generalized;
pub mod mikusinski;
pub mod ode;
pub mod oracle;
pub mod series;

pub use error::{Error, Result};
pub use funcrep::{ChebFunction, Interval, Precision};
pub use generalized::GeneralizedFunction;
pub use mikusinski::MikusinskiFunction;
pub use ode::{HomogeneousBasis, OdeProblem};

pub use series::{LaurentSeries, PolynomialS, PowerSeries, Valuation};

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;
