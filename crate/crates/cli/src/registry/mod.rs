//! The theorem registry: every check the suite runner executes, with stable
//! ids. Entries are grouped by subject area.

mod circles;
mod crosscut;
mod notes;
mod pairs;
mod problems;
pub mod support;
mod triplets;

use crate::checks::CheckSpec;

/// All registry entries in id order.
pub fn all_checks() -> Vec<CheckSpec> {
    let mut out = Vec::new();
    out.extend(pairs::entries());
    out.extend(triplets::entries());
    out.extend(crosscut::entries());
    out.extend(circles::entries());
    out.extend(notes::entries());
    out.extend(problems::entries());
    out.sort_by(|a, b| a.id.cmp(b.id));
    out
}

pub fn find(id: &str) -> Option<CheckSpec> {
    all_checks().into_iter().find(|c| c.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// The ids the scope pins: R01–R78 for the theorem chapters (R79 is
    /// unassigned) and R80–R93 for the fourteen curated problems.
    fn expected_ids() -> Vec<String> {
        let mut ids: Vec<String> = (1..=78).map(|i| format!("R{i:02}")).collect();
        ids.extend((80..=93).map(|i| format!("R{i:02}")));
        ids
    }

    #[test]
    fn registry_covers_the_scoped_id_list() {
        let have: HashSet<String> = all_checks().iter().map(|c| c.id.to_string()).collect();
        for id in expected_ids() {
            assert!(have.contains(&id), "missing registry check {id}");
        }
        assert_eq!(have.len(), expected_ids().len(), "unexpected extra checks");
    }

    #[test]
    fn ids_are_unique_and_titled() {
        let checks = all_checks();
        let mut seen = HashSet::new();
        for c in &checks {
            assert!(seen.insert(c.id), "duplicate id {}", c.id);
            assert!(!c.title.is_empty());
            assert!(!c.statement.is_empty());
        }
    }
}
