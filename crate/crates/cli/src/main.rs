//! `qorth`: verification front end for the SO_q(3) engine.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{builder::PossibleValuesParser, Args, Parser, Subcommand, ValueEnum};
use qorth_core::linalg::ScalarMatrix;
use qorth_core::parse::{parse_poly, parse_with};
use qorth_core::report::{self, Status};
use qorth_core::suites::{self, Config, SUITES};
use qorth_core::{rmatrix, soq3, systems, Alphabet, NcPoly};

#[derive(Parser)]
#[command(name = "qorth", version, about = "Exact verification of the SO_q(3) identities")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run check suites.
    Verify(VerifyArgs),
    /// Print the normal form of an expression.
    Reduce(ReduceArgs),
    /// Print the R-matrix, its projectors and the relations they generate.
    Rmatrix(RmatrixArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite to run; repeatable.
    #[arg(long = "suite", value_parser = PossibleValuesParser::new(SUITES), required_unless_present = "all", conflicts_with = "all")]
    suites: Vec<String>,
    /// Run every suite.
    #[arg(long)]
    all: bool,
    /// Largest |n| for the line bundles.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(i32).range(0..=4))]
    max_n: i32,
    /// Largest J for the Casimir eigenvalue checks.
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(0..=8))]
    max_j: u32,
    /// Degree bound for ideal membership certificates.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(2..=4))]
    degree_bound: u32,
    /// Worker threads (suites run concurrently).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Write the JSON report here.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Seed for the randomized property samples.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Include wall times in the JSON report (breaks byte-for-byte reproducibility).
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct ReduceArgs {
    /// sl2, c3, lambda, uq, so2, or soq3 (printed as its image in O(SL_s(2))).
    #[arg(long, default_value = "sl2")]
    algebra: String,
    expr: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Text,
    Json,
}

#[derive(Args)]
struct RmatrixArgs {
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(2..=6))]
    n: u32,
    #[arg(long, value_enum, default_value_t = Emit::Text)]
    emit: Emit,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.cmd {
        Command::Verify(a) => verify(a),
        Command::Reduce(a) => reduce(a),
        Command::Rmatrix(a) => rmatrix_cmd(a),
    };
    match res {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn verify(a: VerifyArgs) -> Result<ExitCode> {
    let names: Vec<String> = if a.all { SUITES.iter().map(|s| s.to_string()).collect() } else { a.suites.clone() };
    let cfg = Config { max_n: a.max_n, max_j: a.max_j as usize, degree_bound: a.degree_bound as usize, seed: a.seed, ..Config::default() };
    let jobs = if a.jobs == 0 { std::thread::available_parallelism().map_or(1, |n| n.get()) } else { a.jobs };
    let reports = suites::run(&names, &cfg, jobs);

    for r in &reports {
        let c = r.counts();
        println!("{:<16} {:>4} pass {:>3} fail {:>3} inconclusive {:>8} ms", r.suite, c.pass, c.fail, c.inconclusive, r.ms);
        for k in r.checks.iter().filter(|k| k.status != Status::Pass) {
            let res: String = k.residual.chars().take(160).collect();
            println!("    {:?} {}: {} | {}", k.status, k.check_id, k.detail, res);
        }
    }
    let t = report::total(&reports);
    println!("total: {} pass, {} fail, {} inconclusive", t.pass, t.fail, t.inconclusive);

    if let Some(path) = &a.json {
        let mut config = serde_json::to_value(&cfg)?;
        config["suites"] = serde_json::to_value(&names)?;
        let text = report::to_json(&reports, &config, a.timings);
        std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(if t.ok() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn reduce(a: ReduceArgs) -> Result<ExitCode> {
    let out = if matches!(a.algebra.as_str(), "soq3" | "u") {
        let p = parse_with(&a.expr, &systems::u_context()).map_err(|e| anyhow::anyhow!("{e}"))?;
        soq3::cover(&p).render()
    } else {
        let Some(rs) = systems::by_name(&a.algebra) else {
            bail!("unknown algebra {:?}; expected sl2, c3, lambda, uq, so2 or soq3", a.algebra);
        };
        let p = parse_poly(&a.expr, rs.alphabet()).map_err(|e| anyhow::anyhow!("{e}"))?;
        rs.normal_form(&p).render()
    };
    println!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn matrix_rows(m: &ScalarMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect()).collect()
}

fn rmatrix_cmd(a: RmatrixArgs) -> Result<ExitCode> {
    let n = a.n as usize;
    let r = rmatrix::build_r(n)?;
    let rhat = rmatrix::r_hat(&r, n);
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let x = Alphabet::new("x", &names.iter().map(String::as_str).collect::<Vec<_>>());
    let enames: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    let e = Alphabet::new("e", &enames.iter().map(String::as_str).collect::<Vec<_>>());
    let proj = if n > 2 { Some(rmatrix::spectral_projectors(&rhat, n)?) } else { None };
    let render = |ps: Vec<NcPoly>| ps.iter().map(NcPoly::render).collect::<Vec<_>>();
    let (sym, ext) = match &proj {
        Some(p) => {
            let mut ext = rmatrix::projector_rows(&p.plus, &e);
            ext.extend(rmatrix::projector_rows(&p.zero, &e));
            (render(rmatrix::relations_from_projector(&p.minus, &x)), render(rmatrix::canonical_span(&ext)))
        }
        None => (Vec::new(), Vec::new()),
    };
    match a.emit {
        Emit::Json => {
            let doc = serde_json::json!({
                "n": n,
                "R": matrix_rows(&r),
                "ybe_zero": rmatrix::ybe_residual(&r, n).is_zero(),
                "projectors": proj.as_ref().map(|p| serde_json::json!({
                    "plus": matrix_rows(&p.plus),
                    "minus": matrix_rows(&p.minus),
                    "zero": matrix_rows(&p.zero),
                })),
                "quantum_space_relations": sym,
                "exterior_relations": ext,
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
        Emit::Text => {
            println!("R ({0}x{0}), nonzero entries:", n * n);
            for i in 0..r.rows() {
                for j in 0..r.cols() {
                    if !r.get(i, j).is_zero() {
                        println!("  R[{},{}] = {}", i + 1, j + 1, r.get(i, j));
                    }
                }
            }
            println!("Yang-Baxter residual zero: {}", rmatrix::ybe_residual(&r, n).is_zero());
            if let Some(p) = &proj {
                println!("ranks: P+ {}, P- {}, P0 {}", p.plus.rank(), p.minus.rank(), p.zero.rank());
                println!("quantum space relations:");
                sym.iter().for_each(|s| println!("  {s}"));
                println!("exterior relations:");
                ext.iter().for_each(|s| println!("  {s}"));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
