//! Verification surface over the geometry kernel: deterministic fixtures,
//! the theorem-check registry, the suite runner with JSON reports, the
//! construction-script language, and SVG emission.

pub mod checks;
pub mod fixtures;
pub mod registry;
pub mod report;
pub mod runner;
pub mod script;
pub mod svg;
