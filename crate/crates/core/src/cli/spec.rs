//! Problem documents.
//!
//! A document is TOML (or JSON when it starts with `{`). Complex numbers are
//! `[re, im]` pairs; a bare real number is also accepted.
//!
//! ```toml
//! operator = [[1, 0], [0, 0], [1, 0]]   # a₀ + a₁s + a₂s², here s² + 1
//! interval = [-1, 1]
//! initial_values = [[0, 0], [0, 0]]     # ξ(0), ξ′(0)
//! grid_points = 201
//! output = "solution.csv"               # omit for standard output
//!
//! [forcing]
//! kind = "expression"                   # or "none", or "samples"
//! expr = "exp(x)"                       # samples take `path = "file.csv"`
//!
//! [tolerances]
//! residual = 1e-8
//! ```

use std::path::{Path, PathBuf};

use nalgebra::{DMatrix, DVector};
use serde::Deserialize;

use super::expr::Expr;
use crate::funcrep::{ChebFunction, Interval, DEFAULT_TOL};
use crate::generalized::GeneralizedFunction;
use crate::ode::RESIDUAL_TOL;
use crate::series::PolynomialS;
use crate::{Error, Result, C64};

pub const DEFAULT_GRID_POINTS: usize = 201;
pub const DEFAULT_TERMS: usize = 16;

#[derive(Deserialize)]
#[serde(untagged)]
enum RawComplex {
    Pair([f64; 2]),
    Real(f64),
}

impl From<&RawComplex> for C64 {
    fn from(c: &RawComplex) -> C64 {
        match c {
            RawComplex::Pair([re, im]) => C64::new(*re, *im),
            RawComplex::Real(re) => C64::new(*re, 0.0),
        }
    }
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum RawForcing {
    None,
    Expression { expr: String },
    Samples { path: String },
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawTolerances {
    residual: Option<f64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    operator: Vec<RawComplex>,
    #[serde(default)]
    forcing: Option<RawForcing>,
    interval: Option<[f64; 2]>,
    initial_values: Option<Vec<RawComplex>>,
    #[serde(default)]
    tolerances: RawTolerances,
    output: Option<String>,
    grid_points: Option<usize>,
    numerator: Option<Vec<RawComplex>>,
    terms: Option<usize>,
}

/// Right-hand side of the equation.
#[derive(Clone, Debug)]
pub enum Forcing {
    None,
    Expression {
        source: String,
        expr: Expr,
    },
    /// Tabulated values, fitted by a Chebyshev least-squares polynomial.
    Samples {
        path: PathBuf,
        fit: ChebFunction,
    },
}

impl Forcing {
    /// The forcing as a class on `interval`; expressions that do not resolve
    /// to machine precision are rejected with `NoConvergence`.
    pub fn to_generalized(&self, interval: Interval) -> Result<GeneralizedFunction> {
        Ok(match self {
            Forcing::None => GeneralizedFunction::zero(interval),
            Forcing::Expression { expr, .. } => {
                let u = ChebFunction::from_callable(|x| expr.eval(x), interval, DEFAULT_TOL);
                u.require_converged()?;
                GeneralizedFunction::from_continuous(u)
            }
            Forcing::Samples { fit, .. } => GeneralizedFunction::from_continuous(fit.clone()),
        })
    }

    /// Pointwise evaluation for the classical oracle.
    pub fn eval(&self, x: f64) -> C64 {
        match self {
            Forcing::None => C64::new(0.0, 0.0),
            Forcing::Expression { expr, .. } => expr.eval(x),
            Forcing::Samples { fit, .. } => fit.eval(x).unwrap_or_default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// Tolerance of the residual checks in `verify`.
    pub residual: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            residual: RESIDUAL_TOL,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Output {
    Stdout,
    Csv(PathBuf),
}

/// A validated problem document.
#[derive(Clone, Debug)]
pub struct ProblemSpec {
    /// `f(s) = a₀ + a₁s + … + a_d s^d`.
    pub operator: PolynomialS,
    pub forcing: Forcing,
    pub interval: Interval,
    pub initial_values: Option<Vec<C64>>,
    pub tolerances: Tolerances,
    pub output: Output,
    pub grid_points: usize,
    /// Numerator `p` for `expand`, which prints `p/f` (default `p = 1`).
    pub numerator: Option<PolynomialS>,
    /// Number of Laurent coefficients printed by `expand`.
    pub terms: usize,
}

impl ProblemSpec {
    pub fn degree(&self) -> usize {
        self.operator.degree().unwrap_or(0)
    }
}

/// Parses a document; relative sample paths resolve against the working
/// directory.
pub fn parse_problem_spec(text: &str) -> Result<ProblemSpec> {
    parse_problem_spec_in(text, None)
}

/// Reads and parses a document; relative sample paths resolve against the
/// document's directory.
pub fn load_problem_spec(path: &Path) -> Result<ProblemSpec> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_problem_spec_in(&text, path.parent())
}

pub fn parse_problem_spec_in(text: &str, base_dir: Option<&Path>) -> Result<ProblemSpec> {
    let raw: RawSpec = if text.trim_start().starts_with('{') {
        serde_json::from_str(text).map_err(|e| Error::schema("<document>", e.to_string()))?
    } else {
        toml::from_str(text).map_err(|e| Error::schema("<document>", e.to_string()))?
    };

    if raw.operator.is_empty() {
        return Err(Error::schema(
            "operator",
            "must list at least one coefficient",
        ));
    }
    let operator = PolynomialS::new(raw.operator.iter().map(C64::from).collect::<Vec<_>>());
    if operator.is_zero() {
        return Err(Error::schema("operator", "operator polynomial is zero"));
    }

    let [a, b] = raw.interval.unwrap_or([-1.0, 1.0]);
    let interval = Interval::new(a, b).map_err(|_| {
        Error::schema(
            "interval",
            format!("[{a}, {b}] must satisfy a < b and a <= 0 <= b"),
        )
    })?;

    let d = operator.degree().unwrap_or(0);
    let initial_values = match raw.initial_values {
        None => None,
        Some(iv) if iv.len() != d => {
            return Err(Error::schema(
                "initial_values",
                format!(
                    "expected {d} values for an operator of degree {d}, got {}",
                    iv.len()
                ),
            ))
        }
        Some(_) if d == 0 => None,
        Some(iv) => Some(iv.iter().map(C64::from).collect()),
    };

    let forcing = match raw.forcing {
        None | Some(RawForcing::None) => Forcing::None,
        Some(RawForcing::Expression { expr }) => Forcing::Expression {
            expr: Expr::parse(&expr)?,
            source: expr,
        },
        Some(RawForcing::Samples { path }) => {
            let full = match base_dir {
                Some(dir) if Path::new(&path).is_relative() => dir.join(&path),
                _ => PathBuf::from(&path),
            };
            let fit = load_samples(&full, interval)?;
            Forcing::Samples { path: full, fit }
        }
    };

    let mut tolerances = Tolerances::default();
    if let Some(r) = raw.tolerances.residual {
        if r.is_nan() || r <= 0.0 {
            return Err(Error::schema("tolerances.residual", "must be positive"));
        }
        tolerances.residual = r;
    }

    let grid_points = raw.grid_points.unwrap_or(DEFAULT_GRID_POINTS);
    if grid_points < 2 {
        return Err(Error::schema("grid_points", "need at least 2 points"));
    }

    let numerator = raw
        .numerator
        .map(|p| PolynomialS::new(p.iter().map(C64::from).collect::<Vec<_>>()));
    let terms = raw.terms.unwrap_or(DEFAULT_TERMS);
    if terms == 0 {
        return Err(Error::schema("terms", "must be positive"));
    }

    Ok(ProblemSpec {
        operator,
        forcing,
        interval,
        initial_values,
        tolerances,
        output: raw
            .output
            .map(|p| Output::Csv(p.into()))
            .unwrap_or(Output::Stdout),
        grid_points,
        numerator,
        terms,
    })
}

/// Reads `x,value[,value_im]` samples (header row first) and fits them on
/// `interval`.
fn load_samples(path: &Path, interval: Interval) -> Result<ChebFunction> {
    let field = "forcing.path";
    let mut reader = csv::Reader::from_path(path)
        .map_err(|e| Error::schema(field, format!("{}: {e}", path.display())))?;
    let headers = reader
        .headers()
        .map_err(|e| Error::schema(field, e.to_string()))?
        .clone();
    if headers.len() < 2 {
        return Err(Error::schema(field, "need an x column and a value column"));
    }
    let has_im = headers.len() >= 3 && headers[2].ends_with("_im");
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for (row, record) in reader.records().enumerate() {
        let record = record.map_err(|e| Error::schema(field, e.to_string()))?;
        let num = |k: usize| -> Result<f64> {
            record
                .get(k)
                .and_then(|s| s.trim().parse::<f64>().ok())
                .ok_or_else(|| {
                    Error::schema(
                        field,
                        format!("row {}: column {k} is not a number", row + 1),
                    )
                })
        };
        xs.push(num(0)?);
        ys.push(C64::new(num(1)?, if has_im { num(2)? } else { 0.0 }));
    }
    if xs.len() < 2 {
        return Err(Error::schema(field, "need at least two samples"));
    }
    if xs.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::schema(field, "x values must be strictly increasing"));
    }
    let slack = 1e-9 * (interval.b() - interval.a());
    if xs[0] > interval.a() + slack || xs[xs.len() - 1] < interval.b() - slack {
        return Err(Error::schema(field, "samples do not cover the interval"));
    }
    chebyshev_least_squares(&xs, &ys, interval)
}

/// Least-squares Chebyshev fit of degree `min(n − 1, 2⌊√n⌋)`.
fn chebyshev_least_squares(xs: &[f64], ys: &[C64], interval: Interval) -> Result<ChebFunction> {
    let n = xs.len();
    let degree = (n - 1).min(2 * (n as f64).sqrt() as usize);
    let vander = DMatrix::from_fn(n, degree + 1, |i, k| {
        let y = interval.to_reference(xs[i]);
        C64::new((k as f64 * y.acos()).cos(), 0.0)
    });
    let rhs = DVector::from_column_slice(ys);
    let coeffs = vander
        .svd(true, true)
        .solve(&rhs, 1e-14)
        .map_err(|e| Error::schema("forcing.path", format!("sample fit failed: {e}")))?;
    Ok(ChebFunction::new(interval, coeffs.as_slice().to_vec()))
}
