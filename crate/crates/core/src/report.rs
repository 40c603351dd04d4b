//! Machine-readable verification reports.
//!
//! The serialized schema is fixed:
//!
//! ```json
//! {
//!   "claim": "...",
//!   "instances": [
//!     {"groups": [...], "element": "..."|null, "verdict": true|false|null,
//!      "witnesses": [...], "flags": {"solvable": bool, "metabelian": bool}}
//!   ],
//!   "summary": {"checked": n, "held": n, "failed": n},
//!   "tool_version": "..."
//! }
//! ```
//!
//! `element` is null for instances that quantify over every element, and
//! `verdict` is null for instances that were skipped (e.g. a product over
//! the order cap); skipped instances carry the reason in `witnesses` and do
//! not count toward the summary. Reports contain no timing data, so
//! identical runs serialize to identical bytes.

use std::time::Duration;

use serde::Serialize;

/// Structural flags recorded with every instance.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct InstanceFlags {
    pub solvable: bool,
    pub metabelian: bool,
}

/// One checked (group(s), element) instance.
#[derive(Clone, Debug, Serialize)]
pub struct InstanceRecord {
    pub groups: Vec<String>,
    pub element: Option<String>,
    pub verdict: Option<bool>,
    pub witnesses: Vec<String>,
    pub flags: InstanceFlags,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Summary {
    pub checked: usize,
    pub held: usize,
    pub failed: usize,
}

/// Outcome of running one claim over a set of instances.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub instances: Vec<InstanceRecord>,
    pub summary: Summary,
    pub tool_version: String,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerificationReport {
    pub(crate) fn new(claim: String, instances: Vec<InstanceRecord>, wall_time: Duration) -> Self {
        debug_assert!(
            instances
                .iter()
                .all(|i| i.verdict != Some(false) || !i.witnesses.is_empty()),
            "failure records must carry a witness"
        );
        let checked = instances.iter().filter(|i| i.verdict.is_some()).count();
        let held = instances.iter().filter(|i| i.verdict == Some(true)).count();
        VerificationReport {
            claim,
            instances,
            summary: Summary {
                checked,
                held,
                failed: checked - held,
            },
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            wall_time,
        }
    }

    /// True when no checked instance failed.
    pub fn all_held(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization is infallible")
    }

    /// Stable line-oriented rendering of the same data as the JSON schema.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("claim: {}\n", self.claim));
        for record in &self.instances {
            let verdict = match record.verdict {
                Some(true) => "held",
                Some(false) => "FAILED",
                None => "skipped",
            };
            out.push_str(&format!(
                "  groups={} element={} verdict={} solvable={} metabelian={}\n",
                record.groups.join(","),
                record.element.as_deref().unwrap_or("*"),
                verdict,
                record.flags.solvable,
                record.flags.metabelian,
            ));
            for witness in &record.witnesses {
                out.push_str(&format!("    witness: {witness}\n"));
            }
        }
        out.push_str(&format!(
            "summary: checked={} held={} failed={}\n",
            self.summary.checked, self.summary.held, self.summary.failed
        ));
        out.push_str(&format!("tool_version: {}\n", self.tool_version));
        out
    }
}
