//! Check harness: the registry entry type, per-fixture context, and the
//! assertion recorder that turns kernel predicates into pass/fail verdicts
//! with residual tracking.

use homolog_core::error::Result as GeomResult;
use homolog_core::metric::Circle;
use homolog_core::projective::{is_collinear, is_concurrent, PLine, PPoint};
use homolog_core::scalar::{Backend, Scalar};
use homolog_core::triangle::Triangle;
use rand_chacha::ChaCha8Rng;

/// Which backend(s) a check runs under.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BackendReq {
    Exact,
    Float,
    Both,
}

impl BackendReq {
    pub fn runs_on(&self, backend: Backend) -> bool {
        matches!(
            (self, backend),
            (BackendReq::Exact, Backend::Exact)
                | (BackendReq::Float, Backend::Float)
                | (BackendReq::Both, _)
        )
    }
}

/// Fixture class a check consumes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureClass {
    /// Heronian triangles (exact) or guarded random triangles (float).
    Triangles,
    /// The check builds its own configuration from the per-fixture RNG
    /// (usually anchored on the fixture triangle).
    Constructed(&'static str),
}

/// One registry entry.
pub struct CheckSpec {
    pub id: &'static str,
    pub title: &'static str,
    /// One-line statement of the verified claim, with classical attribution.
    pub statement: &'static str,
    pub backend: BackendReq,
    pub fixture: FixtureClass,
    pub run: fn(&mut Ctx) -> (),
}

impl CheckSpec {
    pub fn execute(
        &self,
        triangle: Triangle,
        backend: Backend,
        seed: u64,
        index: usize,
    ) -> CheckOutcome {
        let mut ctx = Ctx {
            t: triangle,
            backend,
            rng: crate::fixtures::rng_for(seed, self.id, index),
            state: OutcomeState::Pass,
            max_residual: 0.0,
        };
        (self.run)(&mut ctx);
        match ctx.state {
            OutcomeState::Pass => CheckOutcome::Pass {
                residual: ctx.max_residual,
            },
            OutcomeState::Skip(reason) => CheckOutcome::Skip { reason },
            OutcomeState::Fail(detail) => CheckOutcome::Fail {
                residual: ctx.max_residual,
                detail,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum CheckOutcome {
    Pass { residual: f64 },
    Fail { residual: f64, detail: String },
    Skip { reason: String },
}

enum OutcomeState {
    Pass,
    Skip(String),
    Fail(String),
}

/// Per-fixture execution context and assertion recorder. The first failure
/// or skip wins; later assertions are still evaluated but cannot override a
/// failure.
pub struct Ctx {
    t: Triangle,
    pub backend: Backend,
    pub rng: ChaCha8Rng,
    state: OutcomeState,
    max_residual: f64,
}

impl Ctx {
    pub fn triangle(&self) -> &Triangle {
        &self.t
    }

    pub fn done(&self) -> bool {
        !matches!(self.state, OutcomeState::Pass)
    }

    pub fn skip(&mut self, reason: impl Into<String>) {
        if matches!(self.state, OutcomeState::Pass) {
            self.state = OutcomeState::Skip(reason.into());
        }
    }

    pub fn fail(&mut self, detail: impl Into<String>) {
        match self.state {
            OutcomeState::Fail(_) => {}
            _ => self.state = OutcomeState::Fail(detail.into()),
        }
    }

    /// Record a residual that should be zero under the backend policy.
    pub fn residual(&mut self, r: &Scalar, what: &str) {
        let mag = r.to_f64().abs();
        self.max_residual = self.max_residual.max(mag);
        if !r.is_zero() {
            self.fail(format!("{what}: residual {mag:e}"));
        }
    }

    pub fn require(&mut self, cond: bool, what: &str) {
        if !cond {
            self.fail(what.to_string());
        }
    }

    pub fn require_not(&mut self, cond: bool, what: &str) {
        self.require(!cond, what);
    }

    pub fn require_eq_scalars(&mut self, a: &Scalar, b: &Scalar, what: &str) {
        let diff = a - b;
        self.residual(&diff, what);
    }

    pub fn require_eq_points(&mut self, a: &PPoint, b: &PPoint, what: &str) {
        if a != b {
            self.fail(format!("{what}: points differ"));
        }
    }

    pub fn require_eq_lines(&mut self, a: &PLine, b: &PLine, what: &str) {
        if a != b {
            self.fail(format!("{what}: lines differ"));
        }
    }

    pub fn require_collinear(&mut self, a: &PPoint, b: &PPoint, c: &PPoint, what: &str) {
        if !is_collinear(a, b, c) {
            self.fail(format!("{what}: not collinear"));
        }
    }

    pub fn require_concurrent(&mut self, a: &PLine, b: &PLine, c: &PLine, what: &str) {
        if !is_concurrent(a, b, c) {
            self.fail(format!("{what}: not concurrent"));
        }
    }

    pub fn require_on_line(&mut self, p: &PPoint, l: &PLine, what: &str) {
        if !l.contains(p) {
            self.fail(format!("{what}: point off line"));
        }
    }

    pub fn require_on_circle(&mut self, p: &PPoint, c: &Circle, what: &str) {
        match c.eval(p) {
            Ok(r) => self.residual(&r, what),
            Err(_) => self.fail(format!("{what}: point at infinity")),
        }
    }

    /// Unwrap a kernel result or fail the check.
    pub fn try_geom<T>(&mut self, r: GeomResult<T>, what: &str) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.fail(format!("{what}: {e}"));
                None
            }
        }
    }

    /// Unwrap a kernel result whose failure is a legitimate skip (a
    /// precondition violation on this fixture).
    pub fn try_or_skip<T>(&mut self, r: GeomResult<T>, reason: &str) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.skip(format!("{reason}: {e}"));
                None
            }
        }
    }

    // -- fixture-class guards ------------------------------------------------

    pub fn need_scalene(&mut self) -> bool {
        if self.t.metrics().is_isosceles() {
            self.skip("isosceles fixture");
            false
        } else {
            true
        }
    }

    pub fn need_non_right(&mut self) -> bool {
        if self.t.metrics().is_right() {
            self.skip("right-angled fixture");
            false
        } else {
            true
        }
    }
}
