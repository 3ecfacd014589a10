//! JSON report schema for suite runs. Field order is fixed by declaration
//! order, so identical configurations serialize byte-identically (timings
//! are zeroed unless explicitly requested — see the runner).

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub backend: String,
    pub checks: Vec<CheckReport>,
    pub totals: Totals,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub backend: String,
    pub verdict: String,
    pub residual: f64,
    pub fixture: FixtureDescriptor,
    pub elapsed_ms: u64,
}

/// Enough to replay the run: the generator inputs plus, on failure, the
/// witness triangle in full.
#[derive(Debug, Clone, Serialize)]
pub struct FixtureDescriptor {
    pub seed: u64,
    pub index: Option<usize>,
    pub vertices: Option<[[String; 2]; 3]>,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Serialize, Default)]
pub struct Totals {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub wall_ms: u64,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn has_failures(&self) -> bool {
        self.totals.fail > 0
    }
}

/// JSON form of a pair-analysis verdict, with fixed field names.
pub fn homology_report_to_json(
    report: &homolog_core::homology::HomologyReport,
) -> serde_json::Value {
    let point = |p: &homolog_core::projective::PPoint| {
        let c = p.coords();
        serde_json::json!([c[0].to_string(), c[1].to_string(), c[2].to_string()])
    };
    let line = |l: &homolog_core::projective::PLine| {
        let c = l.coeffs();
        serde_json::json!([c[0].to_string(), c[1].to_string(), c[2].to_string()])
    };
    serde_json::json!({
        "homological": report.homological,
        "center": report.center.as_ref().map(point),
        "axis": report.axis.as_ref().map(line),
        "degeneracies": report
            .degeneracies
            .iter()
            .map(|d| format!("{d:?}"))
            .collect::<Vec<_>>(),
        "pairing": report.pairing.iter().map(|v| format!("{v:?}")).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use homolog_core::homology::analyze;
    use homolog_core::triangle::Triangle;

    #[test]
    fn homology_report_schema_field_names() {
        let t1 = Triangle::from_coords([(0, 3), (0, 0), (4, 0)]).unwrap();
        let t2 = Triangle::from_coords([(-1, 5), (-2, -2), (13, -3)]).unwrap();
        let value = homology_report_to_json(&analyze(&t1, &t2));
        let obj = value.as_object().unwrap();
        for field in ["homological", "center", "axis", "degeneracies", "pairing"] {
            assert!(obj.contains_key(field), "missing field {field}");
        }
        assert_eq!(obj["homological"], serde_json::json!(true));
        assert_eq!(obj["center"], serde_json::json!(["1", "1", "1"]));
    }
}
