//! Claim records and run reports.
//!
//! A run produces one record per verified claim.  JSON output is stable:
//! with the same inputs and seed, two runs differ at most in the
//! `elapsed_ms` fields.  Text output presents coordinates 1-based and says
//! so; JSON keeps everything 0-based.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

pub const REPORT_SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One verified claim: a stable id, what was checked, the pinned
/// mathematical identity it rests on, the outcome, and a witness value.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub id: String,
    pub description: String,
    pub anchor: String,
    pub status: Status,
    pub witness: Value,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunMeta {
    pub seed: u64,
    pub samples: usize,
    pub fixed_coord: usize,
    pub version: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub meta: RunMeta,
    pub claims: Vec<ClaimRecord>,
    pub overall: Status,
}

impl VerificationReport {
    /// Assembles a report; claim ids must be unique.
    pub fn new(meta: RunMeta, claims: Vec<ClaimRecord>) -> Result<Self> {
        let mut ids: Vec<&str> = claims.iter().map(|c| c.id.as_str()).collect();
        ids.sort_unstable();
        if let Some(dup) = ids.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(format!(
                "duplicate claim id {:?}",
                dup[0]
            )));
        }
        let overall = if claims.iter().all(|c| c.status == Status::Pass) {
            Status::Pass
        } else {
            Status::Fail
        };
        Ok(VerificationReport {
            schema: REPORT_SCHEMA,
            meta,
            claims,
            overall,
        })
    }

    pub fn all_pass(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Plain-text rendering.  Coordinate data in witnesses is shifted to
    /// 1-based and marked as such; everything else prints as stored.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("verification report - fvoa v{}\n", self.meta.version));
        out.push_str(&format!(
            "seed 0x{:x} | samples {} | fixed coordinate {} (1-based)\n\n",
            self.meta.seed,
            self.meta.samples,
            self.meta.fixed_coord + 1
        ));
        for claim in &self.claims {
            let tag = match claim.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            out.push_str(&format!("{tag}  {}  ({} ms)\n", claim.id, claim.elapsed_ms));
            out.push_str(&format!("      {}  [{}]\n", claim.description, claim.anchor));
            if !claim.witness.is_null() {
                out.push_str(&format!("      witness: {}\n", render_witness(&claim.witness)));
            }
        }
        let passed = self
            .claims
            .iter()
            .filter(|c| c.status == Status::Pass)
            .count();
        out.push_str(&format!(
            "\noverall: {} ({} of {} claims passed)\n",
            match self.overall {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            },
            passed,
            self.claims.len()
        ));
        out
    }
}

/// Witness keys holding coordinate data, bumped to 1-based in text output.
fn is_coordinate_key(key: &str) -> bool {
    key == "support" || key == "triple" || key == "coords" || key.ends_with("_coords")
}

fn is_scalar_coordinate_key(key: &str) -> bool {
    key == "coordinate" || key.ends_with("_coord")
}

fn render_witness(v: &Value) -> String {
    let mut out = String::new();
    render_value(v, None, &mut out);
    out
}

fn render_value(v: &Value, key: Option<&str>, out: &mut String) {
    match v {
        Value::Object(map) => {
            out.push('{');
            for (i, (k, val)) in map.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                out.push_str(k);
                out.push_str(": ");
                render_value(val, Some(k), out);
            }
            out.push('}');
        }
        Value::Array(items) => {
            let bump = key.is_some_and(is_coordinate_key);
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                match (bump, item.as_u64()) {
                    (true, Some(n)) => out.push_str(&(n + 1).to_string()),
                    _ => render_value(item, None, out),
                }
            }
            out.push(']');
            if bump && !items.is_empty() {
                out.push_str(" (1-based)");
            }
        }
        Value::Number(n) => {
            if key.is_some_and(is_scalar_coordinate_key) {
                match n.as_u64() {
                    Some(u) => {
                        out.push_str(&(u + 1).to_string());
                        out.push_str(" (1-based)");
                    }
                    None => out.push_str(&n.to_string()),
                }
            } else {
                out.push_str(&n.to_string());
            }
        }
        other => out.push_str(&other.to_string()),
    }
}
