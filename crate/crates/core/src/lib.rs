//! Exact-rational plane geometry kernel for triangle geometry.
//!
//! The kernel works over homogeneous coordinates with two number backends:
//! exact rationals (decidable predicates, bit-exact canonical forms) and
//! `f64` with a relative tolerance policy. Everything here is an immutable
//! value and every operation is a pure function, so the whole API is safe to
//! share across threads.
//!
//! Layers, bottom up:
//!
//! * [`scalar`] — the dual-backend number.
//! * [`projective`] — points/lines, incidence, cross-ratio, harmonic
//!   conjugation.
//! * [`construct`] — rational straightedge constructions (midpoints,
//!   perpendiculars, reflections).
//! * [`metric`] — circles, power of a point, radical axes, signed area.
//! * [`triangle`] — triangle metrics, named centers, cevian machinery,
//!   Brocard geometry, and the distance-identity table.
//! * [`derived`] — the remarkable triangles derived from a reference
//!   triangle.
//! * [`homology`] — perspectivity (center/axis) analysis for triangle pairs
//!   and triplets.
//! * [`transform`] — homothety, circle inversion, pole–polar duality.
//! * [`scene`] — named element collections with incidence assertions.

pub mod construct;
pub mod derived;
pub mod error;
pub mod homology;
pub mod metric;
pub mod projective;
pub mod scalar;
pub mod scene;
pub mod transform;
pub mod triangle;

pub use error::{GeomError, Result};
pub use projective::{PLine, PPoint};
pub use scalar::{Backend, Scalar};
