//! Problem documents and the `opcalc` commands, driven in-process.
//!
//! The same documents work with the binary:
//! `opcalc solve --spec specs/forced_oscillator.toml`.

use opcalc::cli::{parse_problem_spec, run_command, Command};
use opcalc::Result;

const DOC: &str = r#"
operator = [[1, 0], [0, 0], [1, 0]]
interval = [-1, 1]
initial_values = [0, 0]
grid_points = 5

[forcing]
kind = "expression"
expr = "exp(x)"
"#;

pub fn run_example() -> Result<i32> {
    let spec = parse_problem_spec(DOC)?;
    let mut worst = 0;
    for cmd in [
        Command::Expand,
        Command::Homogeneous,
        Command::Solve,
        Command::Verify,
    ] {
        let mut out = Vec::new();
        let mut report = Vec::new();
        let code = run_command(cmd, &spec, &mut out, &mut report)?;
        println!("== {cmd:?} (exit {code})");
        print!("{}", String::from_utf8_lossy(&out));
        print!("{}", String::from_utf8_lossy(&report));
        worst = worst.max(code);
    }
    Ok(worst)
}

fn main() -> Result<()> {
    let code = run_example()?;
    std::process::exit(code);
}
