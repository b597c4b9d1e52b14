mod output;
mod torus_cmd;
mod verify;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use num_bigint::{BigInt, BigUint};
use serde_json::{json, Value};

use cyclotorus::cyclo::cyclotomic;
use cyclotorus::exactalg::resultant;
use cyclotorus::modinv::inverse_mod;
use cyclotorus::Error;

use output::{emit_envelope, emit_line, params};
use verify::Mode;

/// Largest cyclotomic index the single-value commands accept.
const MAX_INDEX: u64 = 10_000;

#[derive(Parser)]
#[command(
    name = "cyclotorus",
    version,
    about = "Exact cyclotomic arithmetic and torus decompositions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficients of Phi_N, constant term first
    Phi { n: u64 },
    /// Resultant Res(Phi_M, Phi_N)
    Res { m: u64, n: u64 },
    /// Inverse of Phi_M modulo Phi_N over Q
    Inv { m: u64, n: u64 },
    /// Value Phi_N(Q)
    Eval {
        n: u64,
        #[arg(allow_hyphen_values = true)]
        q: BigInt,
    },
    /// Sweep checks, one JSON line per instance then a summary envelope
    Verify {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        max: u64,
        #[arg(long, default_value_t = 31)]
        ceiling: u64,
    },
    /// Decomposition of F_{q^{pr}}^* and the theta parametrization
    Torus {
        #[command(subcommand)]
        action: TorusAction,
    },
}

#[derive(clap::Args, Clone)]
struct TorusArgs {
    /// Prime q; 0 keeps q symbolic (params only)
    #[arg(long)]
    q: BigUint,
    #[arg(long)]
    p: u64,
    #[arg(long)]
    r: u64,
}

#[derive(Subcommand)]
enum TorusAction {
    /// Bezout polynomials and their values at q
    Params(TorusArgs),
    /// Seeded checks of recombine(decompose(x)) = x^{pr}
    Roundtrip {
        #[command(flatten)]
        args: TorusArgs,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Seeded runs of theta and its reverse
    ThetaDemo {
        #[command(flatten)]
        args: TorusArgs,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Usage(String),
    Ceiling(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn check_index(k: u64) -> Result<(), Failure> {
    if k == 0 {
        return Err(Failure::Usage("indices must be positive".into()));
    }
    if k > MAX_INDEX {
        return Err(Failure::Ceiling(format!(
            "index {k} exceeds the ceiling {MAX_INDEX}"
        )));
    }
    Ok(())
}

fn torus_params(a: &TorusArgs) -> Vec<(&'static str, Value)> {
    vec![
        ("q", json!(a.q.to_string())),
        ("p", json!(a.p)),
        ("r", json!(a.r)),
    ]
}

/// Runs a command; `Ok(false)` means a mathematical check failed.
fn run(command: Command) -> Result<bool, Failure> {
    let start = Instant::now();
    match command {
        Command::Phi { n } => {
            check_index(n)?;
            let phi = cyclotomic(n);
            let result = json!({ "degree": phi.degree(), "coeffs": phi.as_ref() });
            emit_envelope("phi", params([("n", json!(n))]), result, start);
        }
        Command::Res { m, n } => {
            check_index(m)?;
            check_index(n)?;
            let res = resultant(&cyclotomic(m), &cyclotomic(n));
            emit_envelope(
                "res",
                params([("m", json!(m)), ("n", json!(n))]),
                json!(res.to_string()),
                start,
            );
        }
        Command::Inv { m, n } => {
            check_index(m)?;
            check_index(n)?;
            let inv = inverse_mod(m, n)?;
            emit_envelope(
                "inv",
                params([("m", json!(m)), ("n", json!(n))]),
                json!(inv),
                start,
            );
        }
        Command::Eval { n, q } => {
            check_index(n)?;
            let value = cyclotomic(n).eval(&q);
            let p = params([("n", json!(n)), ("q", json!(q.to_string()))]);
            emit_envelope("eval", p, json!(value.to_string()), start);
        }
        Command::Verify { mode, max, ceiling } => {
            if max < 2 {
                return Err(Failure::Usage(format!(
                    "--max must be at least 2, got {max}"
                )));
            }
            if max > ceiling {
                return Err(Failure::Usage(format!(
                    "--max {max} exceeds the ceiling {ceiling}"
                )));
            }
            let lines = verify::run(mode, max)?;
            let failed = lines.iter().filter(|(_, ok)| !ok).count();
            for (line, _) in &lines {
                emit_line(line);
            }
            let p = params([
                ("mode", json!(mode.name())),
                ("max", json!(max)),
                ("ceiling", json!(ceiling)),
            ]);
            let summary =
                json!({ "checked": lines.len(), "passed": lines.len() - failed, "failed": failed });
            emit_envelope("verify", p, summary, start);
            return Ok(failed == 0);
        }
        Command::Torus { action } => {
            let (name, args, result, ok) = match action {
                TorusAction::Params(a) => {
                    let res = torus_cmd::params(&a.q, a.p, a.r)?;
                    ("torus params", torus_params(&a), res, true)
                }
                TorusAction::Roundtrip { args, count, seed } => {
                    let (res, ok) = torus_cmd::roundtrip(&args.q, args.p, args.r, count, seed)?;
                    let mut p = torus_params(&args);
                    p.extend([("count", json!(count)), ("seed", json!(seed))]);
                    ("torus roundtrip", p, res, ok)
                }
                TorusAction::ThetaDemo { args, count, seed } => {
                    let (res, ok) = torus_cmd::theta_demo(&args.q, args.p, args.r, count, seed)?;
                    let mut p = torus_params(&args);
                    p.extend([("count", json!(count)), ("seed", json!(seed))]);
                    ("torus theta-demo", p, res, ok)
                }
            };
            let p = args.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
            emit_envelope(name, p, result, start);
            return Ok(ok);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(failure) => {
            let (code, msg) = match failure {
                Failure::Usage(m) => (2, m),
                Failure::Ceiling(m) => (3, m),
                Failure::Lib(e) => (if e.is_precondition() { 3 } else { 2 }, e.to_string()),
            };
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
