use clap::{Parser, Subcommand};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use tfnorm_core::{stft, windows, SampledFunction};
use tfnorm_harness::eval::evaluate;
use tfnorm_harness::io::{read_function, tf_to_json, write_text};
use tfnorm_harness::report::{Format, Report};
use tfnorm_harness::{run_convergence, run_verification, HarnessError, LocalKind, Result, VerifyConfig};
use tfnorm_identify::{explain, normalize, parse, trace_json};

#[derive(Parser)]
#[command(name = "tfnorm", version, about = "Time-frequency norms, verification suites and space identification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Norm of a sampled function in a space given by an expression.
    Norm {
        #[arg(long)]
        space: String,
        #[arg(long)]
        input: PathBuf,
    },
    /// Short-time Fourier transform of a sampled function.
    Stft {
        /// Window: gaussian or bump.
        #[arg(long, default_value = "gaussian")]
        window: String,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Runs a verification suite.
    Verify {
        theorem_id: String,
        #[arg(long, value_parser = parse_exponent)]
        p1: Option<f64>,
        #[arg(long, value_parser = parse_exponent)]
        p2: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        s1: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        s2: Option<f64>,
        #[arg(long = "N", default_value_t = 1024)]
        n: usize,
        #[arg(long = "L", default_value_t = 16.0)]
        l: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Local component for suites that take one: L, FL or C0.
        #[arg(long)]
        local: Option<LocalKind>,
        #[arg(long, default_value_t = tfnorm_core::tensor::DEFAULT_DUAL_COUNT)]
        duals: usize,
        #[arg(long, default_value_t = 10.0)]
        spread_bound: f64,
        #[arg(long, default_value_t = 100.0)]
        eps_spread_bound: f64,
        #[arg(long, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Rerun at N = 256, 512, 1024 and check that spreads do not grow.
        #[arg(long)]
        converge: bool,
    },
    /// Normalizes a space expression.
    Identify {
        expr: String,
        /// Print the derivation.
        #[arg(long)]
        trace: bool,
        /// Print the derivation as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Summarizes the JSON reports in a directory.
    Report {
        #[arg(long)]
        dir: PathBuf,
    },
}

fn parse_exponent(s: &str) -> std::result::Result<f64, String> {
    match s {
        "inf" => Ok(f64::INFINITY),
        _ => s.parse::<f64>().map_err(|e| e.to_string()),
    }
}

fn output(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => write_text(p, text),
        None => {
            println!("{}", text.trim_end());
            Ok(())
        }
    }
}

fn window(name: &str, f: &SampledFunction) -> Result<SampledFunction> {
    match name {
        "gaussian" => Ok(windows::normalized_gaussian(f.grid)),
        "bump" => {
            let b = windows::tensorized(f.grid, windows::bump);
            let n = b.l2();
            Ok(b.scale_re(1.0 / n))
        }
        _ => Err(HarnessError::Config(format!("unknown window `{name}`; use gaussian or bump"))),
    }
}

/// Rules whose identities are backed by a numeric suite.
const RULE_HOOKS: &[(&str, &str)] = &[
    ("R_L34", "lemma3.4"),
    ("R_C61a", "cor6.1a"),
    ("R_C61b", "cor6.1b"),
    ("R_R62", "rem6.2"),
    ("R_Q", "cor6.7"),
];

fn summarize_dir(dir: &Path) -> Result<bool> {
    let io = |source| HarnessError::Io { path: dir.display().to_string(), source };
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(io)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    let mut reports = Vec::new();
    for p in &paths {
        let text = std::fs::read_to_string(p).map_err(|source| HarnessError::Io { path: p.display().to_string(), source })?;
        match Report::from_json(&text) {
            Ok(r) => reports.push(r),
            Err(_) => eprintln!("skipping {}: not a verification report", p.display()),
        }
    }
    if reports.is_empty() {
        return Err(HarnessError::Config(format!("no verification reports in {}", dir.display())));
    }
    println!("{:<18} {:<26} {:>7} {:>12}  result", "suite", "location", "groups", "max spread");
    for r in &reports {
        let worst = r.groups.iter().filter(|g| g.spread.is_finite()).map(|g| g.spread).fold(1.0, f64::max);
        let status = if r.pass { "PASS" } else { "FAIL" };
        println!("{:<18} {:<26} {:>7} {:>12.4}  {status}", r.suite, truncate(&r.location, 26), r.groups.len(), worst);
    }
    println!();
    for (rule, suite) in RULE_HOOKS {
        let state = match reports.iter().find(|r| r.suite == *suite) {
            Some(r) if r.pass => "verified",
            Some(_) => "numeric check failed",
            None => "not run",
        };
        println!("{rule:<8} {suite:<10} {state}");
    }
    Ok(reports.iter().all(|r| r.pass))
}

fn truncate(s: &str, n: usize) -> String {
    if s.chars().count() <= n {
        s.to_string()
    } else {
        s.chars().take(n - 1).chain(std::iter::once('…')).collect()
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Norm { space, input } => {
            let e = parse(&space)?;
            let f = read_function(&input)?;
            let r = evaluate(&e, &f)?;
            println!("{}", serde_json::to_string_pretty(&r)?);
            Ok(true)
        }
        Command::Stft { window: name, input, out } => {
            let f = read_function(&input)?;
            let g = window(&name, &f)?;
            let v = stft(&f, &g)?;
            write_text(&out, &serde_json::to_string(&tf_to_json(&v))?)?;
            Ok(true)
        }
        Command::Verify {
            theorem_id,
            p1,
            p2,
            s1,
            s2,
            n,
            l,
            seed,
            local,
            duals,
            spread_bound,
            eps_spread_bound,
            format,
            out,
            converge,
        } => {
            let cfg = VerifyConfig { p1, p2, s1, s2, local, l, n, seed, dual_count: duals, spread_bound, eps_spread_bound };
            if converge {
                let r = run_convergence(&theorem_id, &cfg)?;
                output(&serde_json::to_string_pretty(&r)?, out.as_deref())?;
                return Ok(r.pass);
            }
            let r = run_verification(&theorem_id, &cfg)?;
            eprintln!(
                "{}: {} in {:.2} s",
                r.suite,
                if r.pass { "PASS" } else { "FAIL" },
                r.runtime_secs
            );
            output(&r.emit(format), out.as_deref())?;
            Ok(r.pass)
        }
        Command::Identify { expr, trace, json } => {
            let e = parse(&expr)?;
            let n = normalize(&e);
            println!("{}", n.normal_form);
            if trace {
                println!("{}", explain(&n.trace));
                for r in &n.rejections {
                    println!("rejected {} ({}) at {}: requires {}", r.rule_id, r.paper_location, r.at, r.hypothesis);
                }
            }
            if json {
                println!("{}", trace_json(&n.trace));
            }
            Ok(true)
        }
        Command::Report { dir } => summarize_dir(&dir),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
