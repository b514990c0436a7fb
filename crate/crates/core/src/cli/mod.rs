//! The `opcalc` command-line front end.
//!
//! ```text
//! opcalc <expand|homogeneous|solve|verify> --spec <path> [--out <path>] [--grid N] [--tol X]
//! ```
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error, 3 numeric
//! failure. Errors are reported on standard error as
//! `{"error": "<kind>", "message": "<text>"}`.

mod expr;
mod spec;

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

pub use expr::Expr;
pub use spec::{
    load_problem_spec, parse_problem_spec, parse_problem_spec_in, Forcing, Output, ProblemSpec,
    Tolerances, DEFAULT_GRID_POINTS, DEFAULT_TERMS,
};

use crate::funcrep::ChebFunction;
use crate::ode::{
    initial_value_solve, is_solution_tol, solve_homogeneous_basis, solve_particular, OdeProblem,
};
use crate::oracle::rk4_sample;
use crate::series::{laurent_ratio, PolynomialS, Valuation, DEFAULT_ORDER};
use crate::{Error, GeneralizedFunction, Result, C64};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

/// Largest step of the RK4 reference used by `solve`.
pub const ORACLE_STEP: f64 = 1e-3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Laurent coefficients of `p/f` (default `p = 1`) as JSON.
    Expand,
    /// The basis of `f(D)ξ = 0` sampled on the grid, as CSV.
    Homogeneous,
    /// A solution of `f(D)ξ = ω` sampled on the grid, as CSV.
    Solve,
    /// Residual checks of the computed solutions; exit 1 on failure.
    Verify,
}

#[derive(Parser, Debug)]
#[command(name = "opcalc", version, about = "Operational calculus ODE solver")]
struct Args {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand, Debug)]
enum Sub {
    Expand(Common),
    Homogeneous(Common),
    Solve(Common),
    Verify(Common),
}

#[derive(clap::Args, Debug)]
struct Common {
    /// Problem document (TOML, or JSON).
    #[arg(long)]
    spec: PathBuf,
    /// Output file, overriding the document's `output`.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Number of grid points, overriding `grid_points`.
    #[arg(long)]
    grid: Option<usize>,
    /// Residual tolerance, overriding `tolerances.residual`.
    #[arg(long)]
    tol: Option<f64>,
}

/// Maps an error to its exit code.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Schema { .. }
        | Error::Expression(_)
        | Error::Io(_)
        | Error::InvalidInterval { .. }
        | Error::InvalidArgument(_)
        | Error::ZeroPolynomial
        | Error::DegreeZero
        | Error::ZeroLeadingCoefficient => EXIT_INPUT,
        _ => EXIT_NUMERIC,
    }
}

pub fn error_json(err: &Error) -> String {
    json!({ "error": err.kind(), "message": err.to_string() }).to_string()
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run_cli<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = stdout.write_all(text.as_bytes());
            } else {
                let _ = stderr.write_all(text.as_bytes());
            }
            return code;
        }
    };
    let (cmd, common) = match args.command {
        Sub::Expand(c) => (Command::Expand, c),
        Sub::Homogeneous(c) => (Command::Homogeneous, c),
        Sub::Solve(c) => (Command::Solve, c),
        Sub::Verify(c) => (Command::Verify, c),
    };
    let result = load_problem_spec(&common.spec).and_then(|mut spec| {
        if let Some(out) = common.out {
            spec.output = Output::Csv(out);
        }
        if let Some(n) = common.grid {
            if n < 2 {
                return Err(Error::schema("--grid", "need at least 2 points"));
            }
            spec.grid_points = n;
        }
        if let Some(tol) = common.tol {
            if tol.is_nan() || tol <= 0.0 {
                return Err(Error::schema("--tol", "must be positive"));
            }
            spec.tolerances.residual = tol;
        }
        run_command(cmd, &spec, stdout, stderr)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "{}", error_json(&e));
            exit_code(&e)
        }
    }
}

/// Runs one command. Tabular results go to the spec's output (a file, or
/// `stdout`); summaries go to `stdout` when the table went to a file and to
/// `report` otherwise.
pub fn run_command(
    cmd: Command,
    spec: &ProblemSpec,
    stdout: &mut dyn Write,
    report: &mut dyn Write,
) -> Result<i32> {
    match cmd {
        Command::Expand => {
            let text = expand_json(spec)?;
            emit(spec, &format!("{text}\n"), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Homogeneous => {
            let csv = homogeneous_csv(spec)?;
            emit(spec, &csv, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Solve => {
            let solved = solve(spec)?;
            emit(spec, &solved.csv, stdout)?;
            if let Some(dev) = solved.oracle_deviation {
                let line = json!({ "max_abs_deviation_rk4": dev }).to_string();
                let sink: &mut dyn Write = match spec.output {
                    Output::Stdout => report,
                    Output::Csv(_) => stdout,
                };
                writeln!(sink, "{line}").map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify => {
            let checks = verify(spec)?;
            let ok = checks.iter().all(|c| c.passed);
            let doc = json!({
                "passed": ok,
                "tolerance": spec.tolerances.residual,
                "checks": checks
                    .iter()
                    .map(|c| json!({ "name": c.name, "passed": c.passed }))
                    .collect::<Vec<_>>(),
            });
            writeln!(stdout, "{doc}").map_err(io)?;
            Ok(if ok { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

fn emit(spec: &ProblemSpec, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match &spec.output {
        Output::Stdout => stdout.write_all(text.as_bytes()).map_err(io),
        Output::Csv(path) => {
            std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
        }
    }
}

/// JSON with the valuation and the first `spec.terms` coefficients of `p/f`,
/// starting at the valuation.
pub fn expand_json(spec: &ProblemSpec) -> Result<String> {
    let p = spec.numerator.clone().unwrap_or_else(PolynomialS::one);
    let order = DEFAULT_ORDER.max(spec.terms + spec.degree() + 1);
    let ratio = laurent_ratio(&p, &spec.operator, order)?;
    let doc = match ratio.valuation() {
        Valuation::Infinite => json!({ "valuation": null, "coefficients": [] }),
        Valuation::Finite(v) => {
            let n = spec.terms.min(ratio.unit_part().order());
            let coeffs: Vec<[f64; 2]> = ratio.unit_part().coeffs()[..n]
                .iter()
                .map(|c| [c.re, c.im])
                .collect();
            json!({ "valuation": v, "coefficients": coeffs })
        }
    };
    Ok(doc.to_string())
}

fn push_complex(line: &mut String, z: C64) {
    let _ = write!(line, ",{:.16e},{:.16e}", z.re, z.im);
}

fn sample(u: &ChebFunction, x: f64) -> Result<C64> {
    u.eval(x)
}

/// CSV `x,xi_0_re,xi_0_im,…` of the homogeneous basis on the grid.
pub fn homogeneous_csv(spec: &ProblemSpec) -> Result<String> {
    let basis = solve_homogeneous_basis(&spec.operator, spec.interval)?;
    let funcs = basis.functions();
    let mut out = String::from("x");
    for j in 0..funcs.len() {
        let _ = write!(out, ",xi_{j}_re,xi_{j}_im");
    }
    out.push('\n');
    for x in spec.interval.grid(spec.grid_points) {
        let mut line = format!("{x:.16e}");
        for u in &funcs {
            push_complex(&mut line, sample(u, x)?);
        }
        out.push_str(&line);
        out.push('\n');
    }
    Ok(out)
}

/// Output of `solve`.
#[derive(Clone, Debug)]
pub struct Solved {
    pub solution: ChebFunction,
    pub csv: String,
    /// `max |ξ − ξ_rk4|` over the grid, when initial values were given.
    pub oracle_deviation: Option<f64>,
}

/// The particular solution `(1/f)ω`, or the initial value solution when the
/// document lists initial values.
pub fn solve_solution(spec: &ProblemSpec) -> Result<ChebFunction> {
    let omega = spec.forcing.to_generalized(spec.interval)?;
    match &spec.initial_values {
        Some(iv) => {
            let problem = OdeProblem::new(spec.operator.clone(), omega, Some(iv.clone()))?;
            initial_value_solve(&problem)?.to_continuous()
        }
        None => solve_particular(&spec.operator, &omega)?.to_continuous(),
    }
}

pub fn solve(spec: &ProblemSpec) -> Result<Solved> {
    let solution = solve_solution(spec)?;
    let grid = spec.interval.grid(spec.grid_points);
    let oracle = match &spec.initial_values {
        Some(iv) => Some(rk4_sample(
            &spec.operator,
            iv,
            |x| spec.forcing.eval(x),
            &grid,
            ORACLE_STEP,
        )?),
        None => None,
    };
    let mut csv = String::from("x,xi_re,xi_im");
    if oracle.is_some() {
        csv.push_str(",rk4_re,rk4_im");
    }
    csv.push('\n');
    let mut deviation: f64 = 0.0;
    for (i, &x) in grid.iter().enumerate() {
        let y = sample(&solution, x)?;
        let mut line = format!("{x:.16e}");
        push_complex(&mut line, y);
        if let Some(traj) = &oracle {
            push_complex(&mut line, traj.ys[i]);
            deviation = deviation.max((y - traj.ys[i]).norm());
        }
        csv.push_str(&line);
        csv.push('\n');
    }
    Ok(Solved {
        solution,
        csv,
        oracle_deviation: oracle.map(|_| deviation),
    })
}

/// One residual check of `verify`.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

/// Residual checks at `spec.tolerances.residual`:
/// `f(D)ξ ≡ ω` for the solution of `solve`, `f(D)ξⱼ ≡ 0` for each basis
/// element, and agreement with the initial values when present.
pub fn verify(spec: &ProblemSpec) -> Result<Vec<Check>> {
    let tol = spec.tolerances.residual;
    let f = &spec.operator;
    let omega = spec.forcing.to_generalized(spec.interval)?;
    let mut checks = Vec::new();

    let xi = solve_solution(spec)?;
    checks.push(Check {
        name: "solution".into(),
        passed: is_solution_tol(
            f,
            &GeneralizedFunction::from_continuous(xi.clone()),
            &omega,
            tol,
        ),
    });

    let zero = GeneralizedFunction::zero(spec.interval);
    let basis = solve_homogeneous_basis(f, spec.interval)?;
    for (j, e) in basis.elements.iter().enumerate() {
        checks.push(Check {
            name: format!("homogeneous_{j}"),
            passed: is_solution_tol(f, e, &zero, tol),
        });
    }

    if let Some(iv) = &spec.initial_values {
        let mut d = xi;
        for (k, want) in iv.iter().enumerate() {
            let got = d.eval(0.0)?;
            checks.push(Check {
                name: format!("initial_value_{k}"),
                passed: (got - want).norm() <= tol * (1.0 + want.norm()),
            });
            d = d.derivative();
        }
    }
    Ok(checks)
}
