//! The analysis report in its JSON and plain-text forms.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use sqcomm_core::sqcomm::AnalysisReport;
use sqcomm_core::CayleyGroup;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriterionDoc {
    pub name: String,
    pub holds: bool,
    pub witness: Option<Vec<String>>,
}

/// Wall-clock milliseconds per phase.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub build_ms: f64,
    pub analysis_ms: f64,
}

/// One report per invocation. Field order is the serialized key order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub subject: String,
    pub order: usize,
    pub is_square_commutative: bool,
    pub witness: Option<[String; 2]>,
    pub center_size: usize,
    pub z2_size: usize,
    pub hat_order: usize,
    pub hat_abelian: bool,
    pub squares_central: bool,
    pub g_mod_z_abelian: bool,
    pub criteria: Vec<CriterionDoc>,
    pub coverage_ok: Option<bool>,
    pub consistent: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

impl ReportDocument {
    pub fn new(subject: &str, group: &CayleyGroup, r: &AnalysisReport) -> Self {
        let label = |x| group.label(x).to_string();
        let criteria = r
            .criteria
            .iter()
            .flat_map(|c| &c.relations)
            .map(|v| CriterionDoc {
                name: v.name.clone(),
                holds: v.holds,
                witness: v.witness.as_ref().map(|w| w.iter().map(|&x| label(x)).collect()),
            })
            .collect();
        ReportDocument {
            schema_version: SCHEMA_VERSION.into(),
            subject: subject.into(),
            order: r.order,
            is_square_commutative: r.is_square_commutative,
            witness: r.witness.map(|(x, y)| [label(x), label(y)]),
            center_size: r.center_size,
            z2_size: r.z2_size,
            hat_order: r.hat_order,
            hat_abelian: r.hat_abelian,
            squares_central: r.squares_central,
            g_mod_z_abelian: r.g_mod_z_abelian,
            criteria,
            coverage_ok: r.coverage_ok,
            consistent: r.consistent,
            timings: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let yes = |b: bool| if b { "yes" } else { "no" };
        let mut out = String::new();
        let mut line = |key: &str, value: &str| {
            let _ = writeln!(out, "{:<20}{value}", format!("{key}:"));
        };
        line("subject", &self.subject);
        line("order", &self.order.to_string());
        line("square commutative", yes(self.is_square_commutative));
        if let Some([x, y]) = &self.witness {
            line("witness", &format!("(xy)^2 != (yx)^2 for x = {x}, y = {y}"));
        }
        line("center", &self.center_size.to_string());
        line("Z2", &self.z2_size.to_string());
        line("G/Z2", &format!("order {}, abelian {}", self.hat_order, yes(self.hat_abelian)));
        line("squares central", yes(self.squares_central));
        line("G/Z abelian", yes(self.g_mod_z_abelian));
        if let Some(c) = self.coverage_ok {
            line("coverage C_n Z = G", yes(c));
        }
        line("consistent", yes(self.consistent));
        if !self.criteria.is_empty() {
            out.push_str("criteria:\n");
            for c in &self.criteria {
                let verdict = match &c.witness {
                    None => "holds".to_string(),
                    Some(w) => format!("fails for ({})", w.join(", ")),
                };
                let _ = writeln!(out, "  {:<30}{verdict}", c.name);
            }
        }
        if let Some(t) = &self.timings {
            let _ = writeln!(out, "timings:            build {:.3} ms, analysis {:.3} ms", t.build_ms, t.analysis_ms);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use sqcomm_core::{catalog, sqcomm};

    fn d6_doc() -> ReportDocument {
        let e = catalog::dihedral(3).unwrap();
        let r = sqcomm::analyze(&e.group, Some(&e.canonical_generators)).unwrap();
        ReportDocument::new("dihedral:3", &e.group, &r)
    }

    #[test]
    fn key_order_is_stable() {
        let json = d6_doc().to_json();
        let keys = [
            "schema_version",
            "subject",
            "order",
            "is_square_commutative",
            "witness",
            "center_size",
            "z2_size",
            "hat_order",
            "hat_abelian",
            "squares_central",
            "g_mod_z_abelian",
            "criteria",
            "coverage_ok",
            "consistent",
        ];
        let positions: Vec<usize> = keys.iter().map(|k| json.find(&format!("\"{k}\"")).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
        assert!(!json.contains("timings"));
    }

    #[test]
    fn json_round_trip() {
        let mut doc = d6_doc();
        let back: ReportDocument = serde_json::from_str(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        doc.timings = Some(Timings { build_ms: 1.5, analysis_ms: 0.25 });
        let back: ReportDocument = serde_json::from_str(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
    }

    #[test]
    fn text_mentions_witness() {
        let text = d6_doc().to_text();
        assert!(text.contains("square commutative: no"));
        assert!(text.contains("witness:            (xy)^2 != (yx)^2 for x = "));
    }
}
