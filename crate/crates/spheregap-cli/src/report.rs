//! Machine-readable sweep reports: versioned JSON schema and CSV with the same
//! row data.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "spheregap/1";

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Row {
    pub inequality: String,
    pub ell: u32,
    pub d: u32,
    pub verdict: String,
    /// Wall time for this row in milliseconds. Excluded from determinism
    /// comparisons; everything else in a report is reproducible byte for byte.
    pub ms: f64,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepReport {
    pub schema: String,
    pub tool_version: String,
    pub command: String,
    pub parameters: BTreeMap<String, serde_json::Value>,
    pub rows: Vec<Row>,
    pub summary: Summary,
}

impl SweepReport {
    pub fn new(
        command: &str,
        parameters: BTreeMap<String, serde_json::Value>,
        rows: Vec<Row>,
    ) -> Self {
        let passed = rows
            .iter()
            .filter(|r| r.verdict == "certified_nonneg" || r.verdict == "degenerate_zero")
            .count();
        let total = rows.len();
        Self {
            schema: SCHEMA.to_string(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            parameters,
            rows,
            summary: Summary {
                total,
                passed,
                failed: total - passed,
            },
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("inequality,ell,d,verdict,ms\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                r.inequality, r.ell, r.d, r.verdict, r.ms
            ));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{:<10} {:>4} {:>4}  {:<18} {:>10}\n",
            "inequality", "ell", "d", "verdict", "ms"
        ));
        for r in &self.rows {
            out.push_str(&format!(
                "{:<10} {:>4} {:>4}  {:<18} {:>10.3}\n",
                r.inequality, r.ell, r.d, r.verdict, r.ms
            ));
        }
        out.push_str(&format!(
            "summary: total {} passed {} failed {}\n",
            self.summary.total, self.summary.passed, self.summary.failed
        ));
        out
    }
}
