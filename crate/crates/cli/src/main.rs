//! Command-line surface: `verify` runs the theorem registry over generated
//! fixtures, `run` executes a construction script, `list-checks` prints the
//! registry catalog.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use homolog_cli::registry;
use homolog_cli::runner::{run_suite, SuiteConfig};
use homolog_cli::script::run_script;
use homolog_cli::svg::{render_svg, SvgOptions};
use homolog_core::scalar::Backend;
use serde::Deserialize;

#[derive(Parser)]
#[command(
    name = "homolog",
    about = "Exact-arithmetic triangle geometry theorem verifier"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run registry checks over seeded fixtures and report verdicts.
    Verify(VerifyArgs),
    /// Execute a construction script and report its assertions.
    Run(RunArgs),
    /// List every registered check with its backend and statement.
    ListChecks,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check ids to run (repeatable); all checks when omitted.
    #[arg(long = "check")]
    checks: Vec<String>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Fixture count; sets both the exact and float counts.
    #[arg(long)]
    n: Option<usize>,
    /// Exact-backend fixture count (default 500).
    #[arg(long)]
    n_exact: Option<usize>,
    /// Float-backend fixture count (default 1000).
    #[arg(long)]
    n_float: Option<usize>,
    #[arg(long, default_value_t = 200)]
    max_side: i64,
    /// Restrict to one backend.
    #[arg(long, value_parser = ["exact", "float"])]
    backend: Option<String>,
    /// Relative tolerance for float comparisons.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Minimum angle/area separation for float fixtures.
    #[arg(long, default_value_t = 0.15)]
    separation: f64,
    /// Write the JSON report here.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Write witness SVGs for failing checks into this directory.
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Include real timings in the JSON report (non-deterministic output).
    #[arg(long)]
    timings: bool,
    /// JSON config file mirroring these flags; explicit flags win.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct RunArgs {
    /// Script path (see the README for the language).
    script: PathBuf,
    /// Render the resolved scene to this SVG file.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Deserialize, Default)]
struct ConfigFile {
    seed: Option<u64>,
    n_exact: Option<usize>,
    n_float: Option<usize>,
    max_side: Option<i64>,
    separation: Option<f64>,
    tol: Option<f64>,
    backend: Option<String>,
    timings: Option<bool>,
    checks: Option<Vec<String>>,
}

fn parse_backend(s: &str) -> Option<Backend> {
    match s {
        "exact" => Some(Backend::Exact),
        "float" => Some(Backend::Float),
        _ => None,
    }
}

fn verify(args: VerifyArgs) -> ExitCode {
    let file: ConfigFile = match &args.config {
        Some(path) => match std::fs::read_to_string(path) {
            Ok(text) => match serde_json::from_str(&text) {
                Ok(cfg) => cfg,
                Err(e) => {
                    eprintln!("error: bad config file {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            },
            Err(e) => {
                eprintln!("error: cannot read config {}: {e}", path.display());
                return ExitCode::from(2);
            }
        },
        None => ConfigFile::default(),
    };

    let defaults = SuiteConfig::default();
    let mut config = SuiteConfig {
        seed: file.seed.unwrap_or(defaults.seed),
        n_exact: file.n_exact.unwrap_or(defaults.n_exact),
        n_float: file.n_float.unwrap_or(defaults.n_float),
        max_side: file.max_side.unwrap_or(defaults.max_side),
        separation: file.separation.unwrap_or(defaults.separation),
        tol: file.tol.unwrap_or(defaults.tol),
        checks: file.checks.unwrap_or_default(),
        backend: file.backend.as_deref().and_then(parse_backend),
        timings: file.timings.unwrap_or(false),
    };
    // flags override the file
    if args.seed != 42 || file.seed.is_none() {
        config.seed = args.seed;
    }
    if let Some(n) = args.n {
        config.n_exact = n;
        config.n_float = n;
    }
    if let Some(n) = args.n_exact {
        config.n_exact = n;
    }
    if let Some(n) = args.n_float {
        config.n_float = n;
    }
    if args.max_side != 200 || file.max_side.is_none() {
        config.max_side = args.max_side;
    }
    if args.tol != 1e-9 || file.tol.is_none() {
        config.tol = args.tol;
    }
    if args.separation != 0.15 || file.separation.is_none() {
        config.separation = args.separation;
    }
    if !args.checks.is_empty() {
        config.checks = args.checks.clone();
    }
    if let Some(b) = args.backend.as_deref().and_then(parse_backend) {
        config.backend = Some(b);
    }
    if args.timings {
        config.timings = true;
    }

    let started = std::time::Instant::now();
    let report = run_suite(&config);
    for check in &report.checks {
        let extra = match check.verdict.as_str() {
            "FAIL" => check
                .fixture
                .detail
                .clone()
                .map(|d| format!("  ({d})"))
                .unwrap_or_default(),
            "SKIPPED" => check
                .fixture
                .detail
                .clone()
                .map(|d| format!("  ({d})"))
                .unwrap_or_default(),
            _ => String::new(),
        };
        println!(
            "{:<5} {:<6} {:<8} residual {:.3e}{extra}",
            check.id, check.backend, check.verdict, check.residual
        );
    }
    println!(
        "totals: {} pass, {} fail, {} skipped in {:.2?}",
        report.totals.pass,
        report.totals.fail,
        report.totals.skipped,
        started.elapsed()
    );

    if let Some(path) = &args.report {
        if let Err(e) = std::fs::write(path, report.to_json()) {
            eprintln!("error: cannot write report {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if let Some(dir) = &args.svg {
        if let Err(e) = std::fs::create_dir_all(dir) {
            eprintln!("error: cannot create svg dir {}: {e}", dir.display());
            return ExitCode::from(2);
        }
        for check in &report.checks {
            let Some(vertices) = &check.fixture.vertices else {
                continue;
            };
            let mut scene = homolog_core::scene::Scene::new();
            let parse = |s: &str| {
                if let Some((n, d)) = s.split_once('/') {
                    homolog_core::scalar::Scalar::ratio(
                        n.parse().unwrap_or(0),
                        d.parse().unwrap_or(1),
                    )
                } else {
                    homolog_core::scalar::Scalar::float(s.parse().unwrap_or(0.0))
                }
            };
            let pts: Vec<homolog_core::projective::PPoint> = vertices
                .iter()
                .map(|[x, y]| homolog_core::projective::PPoint::from_cartesian(parse(x), parse(y)))
                .collect();
            if let Ok(t) = homolog_core::triangle::Triangle::new(
                pts[0].clone(),
                pts[1].clone(),
                pts[2].clone(),
            ) {
                scene
                    .insert("witness", homolog_core::scene::Element::Triangle(t))
                    .expect("fresh scene");
                if let Ok(svg) = render_svg(&scene, &SvgOptions::default()) {
                    let path = dir.join(format!("{}-{}.svg", check.id, check.backend));
                    if let Err(e) = std::fs::write(&path, svg) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                    }
                }
            }
        }
    }
    if report.has_failures() {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}

fn run(args: RunArgs) -> ExitCode {
    let text = match std::fs::read_to_string(&args.script) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", args.script.display());
            return ExitCode::from(2);
        }
    };
    let run = match run_script(&text) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    for a in &run.asserts {
        println!(
            "line {:<4} {:<6} {}",
            a.line,
            if a.pass { "PASS" } else { "FAIL" },
            a.text
        );
    }
    println!(
        "{} element(s), {}/{} assertion(s) hold",
        run.scene.len(),
        run.asserts.iter().filter(|a| a.pass).count(),
        run.asserts.len()
    );
    if let Some(path) = &args.svg {
        match render_svg(&run.scene, &SvgOptions::default()) {
            Ok(svg) => {
                if let Err(e) = std::fs::write(path, svg) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            Err(e) => {
                eprintln!("error: cannot render scene: {e}");
                return ExitCode::from(2);
            }
        }
    }
    if run.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn list_checks() -> ExitCode {
    for check in registry::all_checks() {
        let backend = match check.backend {
            homolog_cli::checks::BackendReq::Exact => "exact",
            homolog_cli::checks::BackendReq::Float => "float",
            homolog_cli::checks::BackendReq::Both => "both",
        };
        println!(
            "{:<5} [{:<5}] {} — {}",
            check.id, backend, check.title, check.statement
        );
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Verify(args) => verify(args),
        Command::Run(args) => run(args),
        Command::ListChecks => list_checks(),
    }
}
