//! Suite runner: fans every registry check out over its fixture class,
//! reduces the per-fixture outcomes deterministically, and assembles the
//! JSON report.

use std::time::Instant;

use homolog_core::scalar::Backend;
use homolog_core::triangle::Triangle;
use rayon::prelude::*;

use crate::checks::{CheckOutcome, CheckSpec};
use crate::fixtures::{heronian_sample, random_triangle_float};
use crate::registry;
use crate::report::{CheckReport, FixtureDescriptor, Report, Totals};

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    pub n_exact: usize,
    pub n_float: usize,
    pub max_side: i64,
    pub separation: f64,
    pub tol: f64,
    /// Restrict to these check ids (all when empty).
    pub checks: Vec<String>,
    /// Restrict to one backend.
    pub backend: Option<Backend>,
    /// Emit real per-check timings (breaks byte-for-byte determinism).
    pub timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 42,
            n_exact: 500,
            n_float: 1000,
            max_side: 200,
            separation: 0.15,
            tol: 1e-9,
            checks: Vec::new(),
            backend: None,
            timings: false,
        }
    }
}

/// Run one registered check against one fixture.
pub fn run_check(
    id: &str,
    triangle: Triangle,
    backend: Backend,
    seed: u64,
    index: usize,
) -> Option<CheckOutcome> {
    let spec = registry::find(id)?;
    Some(spec.execute(triangle, backend, seed, index))
}

fn fixture_vertices(t: &Triangle) -> [[String; 2]; 3] {
    let fmt = |p: &homolog_core::projective::PPoint| {
        let (x, y) = p.xy().expect("finite fixture vertex");
        [x.to_string(), y.to_string()]
    };
    [fmt(t.a()), fmt(t.b()), fmt(t.c())]
}

fn run_spec_on(
    spec: &CheckSpec,
    backend: Backend,
    fixtures: &[Triangle],
    seed: u64,
    timings: bool,
) -> CheckReport {
    let start = Instant::now();
    let outcomes: Vec<(usize, CheckOutcome, &Triangle)> = fixtures
        .par_iter()
        .enumerate()
        .map(|(i, t)| (i, spec.execute(t.clone(), backend, seed, i), t))
        .collect();

    let mut verdict = "SKIPPED".to_string();
    let mut max_residual = 0.0f64;
    let mut skip_reason: Option<String> = None;
    let mut witness: Option<(usize, &Triangle, String)> = None;
    let mut passes = 0usize;
    for (i, outcome, t) in &outcomes {
        match outcome {
            CheckOutcome::Pass { residual } => {
                passes += 1;
                max_residual = max_residual.max(*residual);
            }
            CheckOutcome::Skip { reason } => {
                if skip_reason.is_none() {
                    skip_reason = Some(reason.clone());
                }
            }
            CheckOutcome::Fail { residual, detail } => {
                max_residual = max_residual.max(*residual);
                if witness.as_ref().map(|(w, _, _)| *w > *i).unwrap_or(true) {
                    witness = Some((*i, t, detail.clone()));
                }
            }
        }
    }
    if let Some((_, _, _)) = witness {
        verdict = "FAIL".to_string();
    } else if passes > 0 {
        verdict = "PASS".to_string();
    }

    let fixture = match &witness {
        Some((i, t, detail)) => FixtureDescriptor {
            seed,
            index: Some(*i),
            vertices: Some(fixture_vertices(t)),
            detail: Some(detail.clone()),
        },
        None => FixtureDescriptor {
            seed,
            index: None,
            vertices: None,
            detail: if verdict == "SKIPPED" {
                skip_reason
            } else {
                None
            },
        },
    };
    CheckReport {
        id: spec.id.to_string(),
        backend: match backend {
            Backend::Exact => "exact".to_string(),
            Backend::Float => "float".to_string(),
        },
        verdict,
        residual: max_residual,
        fixture,
        elapsed_ms: if timings {
            start.elapsed().as_millis() as u64
        } else {
            0
        },
    }
}

pub fn run_suite(config: &SuiteConfig) -> Report {
    let start = Instant::now();
    let specs: Vec<CheckSpec> = registry::all_checks()
        .into_iter()
        .filter(|c| config.checks.is_empty() || config.checks.iter().any(|id| id == c.id))
        .collect();

    let exact_fixtures = heronian_sample(config.seed, config.n_exact, config.max_side);
    let float_fixtures =
        random_triangle_float(config.seed, config.n_float, config.separation, config.tol);

    let mut checks = Vec::new();
    for spec in &specs {
        for backend in [Backend::Exact, Backend::Float] {
            if !spec.backend.runs_on(backend) {
                continue;
            }
            if let Some(filter) = config.backend {
                if filter != backend {
                    continue;
                }
            }
            let fixtures = match backend {
                Backend::Exact => &exact_fixtures,
                Backend::Float => &float_fixtures,
            };
            checks.push(run_spec_on(
                spec,
                backend,
                fixtures,
                config.seed,
                config.timings,
            ));
        }
    }
    checks
        .sort_by(|a, b| (a.id.clone(), a.backend.clone()).cmp(&(b.id.clone(), b.backend.clone())));

    let totals = Totals {
        pass: checks.iter().filter(|c| c.verdict == "PASS").count(),
        fail: checks.iter().filter(|c| c.verdict == "FAIL").count(),
        skipped: checks.iter().filter(|c| c.verdict == "SKIPPED").count(),
        wall_ms: if config.timings {
            start.elapsed().as_millis() as u64
        } else {
            0
        },
    };
    Report {
        suite: "registry".to_string(),
        seed: config.seed,
        backend: match config.backend {
            None => "both".to_string(),
            Some(Backend::Exact) => "exact".to_string(),
            Some(Backend::Float) => "float".to_string(),
        },
        checks,
        totals,
    }
}
