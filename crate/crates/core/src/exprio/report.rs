//! Verification reports as JSON or an aligned text table.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::calculus::VerifyResult;
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportEntry {
    pub id: String,
    pub paper_anchor: String,
    pub status: String,
    pub residual: String,
    pub elapsed_millis: u64,
    pub known_discrepancy: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    #[serde(rename = "type")]
    pub calculus_type: String,
    /// Parameter values as exact rational strings; `null` when generic.
    pub param_assignment: Option<BTreeMap<String, String>>,
    pub results: Vec<ReportEntry>,
}

impl Report {
    /// Entries keep the order of `results`.
    pub fn new(type_label: &str, assignment: &BTreeMap<String, Rational>, results: &[VerifyResult]) -> Self {
        Report {
            calculus_type: type_label.to_owned(),
            param_assignment: (!assignment.is_empty())
                .then(|| assignment.iter().map(|(k, v)| (k.clone(), v.to_string())).collect()),
            results: results
                .iter()
                .map(|r| ReportEntry {
                    id: r.id.clone(),
                    paper_anchor: r.anchor.clone(),
                    status: r.status.label().to_owned(),
                    residual: r.residual.clone(),
                    elapsed_millis: r.elapsed_millis,
                    known_discrepancy: r.known_discrepancy,
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// One row per entry; known discrepancies are marked `FAIL*`/`PASS*`.
    pub fn to_text(&self) -> String {
        let status = |e: &ReportEntry| {
            if e.known_discrepancy {
                format!("{}*", e.status)
            } else {
                e.status.clone()
            }
        };
        let id_w = self.results.iter().map(|e| e.id.len()).max().unwrap_or(2).max(2);
        let anchor_w = self.results.iter().map(|e| e.paper_anchor.len()).max().unwrap_or(6).max(6);
        let mut out = format!("type {}", self.calculus_type);
        if let Some(a) = &self.param_assignment {
            let parts: Vec<String> = a.iter().map(|(k, v)| format!("{k}={v}")).collect();
            out.push_str(&format!(" at {}", parts.join(", ")));
        }
        out.push('\n');
        out.push_str(&format!("{:id_w$}  {:anchor_w$}  {:6}  {:>8}  residual\n", "id", "anchor", "status", "ms"));
        for e in &self.results {
            out.push_str(&format!(
                "{:id_w$}  {:anchor_w$}  {:6}  {:>8}  {}\n",
                e.id,
                e.paper_anchor,
                status(e),
                e.elapsed_millis,
                e.residual
            ));
        }
        out
    }

    pub fn emit(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Text => self.to_text(),
            ReportFormat::Json => self.to_json(),
        }
    }

    /// Whether an identity outside the known-discrepancy ledger failed.
    pub fn has_unexpected_failure(&self) -> bool {
        self.results.iter().any(|e| e.status == "FAIL" && !e.known_discrepancy)
    }
}

pub fn emit_report(
    type_label: &str,
    assignment: &BTreeMap<String, Rational>,
    results: &[VerifyResult],
    format: ReportFormat,
) -> String {
    Report::new(type_label, assignment, results).emit(format)
}
