//! Verification reports shared by every validator.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::exactlin::LinMap;

/// Evidence for a failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Two maps differ at the basis tuple `domain`, coordinate `codomain`.
    Map { domain: Vec<usize>, codomain: Vec<usize>, lhs: String, rhs: String },
    /// A tuple of table elements violating an identity.
    Elements { elements: Vec<usize>, detail: String },
    Note { detail: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One evaluated axiom instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    /// Stable axiom identifier such as `GHQ-3.1-coassoc`.
    pub id: String,
    /// Grade tuple or other instance data; empty for single-instance axioms.
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub instance: String,
    pub status: Status,
    /// Informational checks (e.g. associativity of a quasigroup) never fail a report.
    pub required: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Check {
    pub fn pass(id: impl Into<String>, instance: impl Into<String>) -> Self {
        Self { id: id.into(), instance: instance.into(), status: Status::Pass, required: true, witness: None }
    }

    pub fn fail(id: impl Into<String>, instance: impl Into<String>, witness: Witness) -> Self {
        Self {
            id: id.into(),
            instance: instance.into(),
            status: Status::Fail,
            required: true,
            witness: Some(witness),
        }
    }

    pub fn from_bool(id: impl Into<String>, instance: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        if ok {
            Self::pass(id, instance)
        } else {
            Self::fail(id, instance, Witness::Note { detail: detail.into() })
        }
    }

    /// Compares two maps exactly; on mismatch the witness names the first differing entry.
    pub fn maps(id: impl Into<String>, instance: impl Into<String>, lhs: &LinMap, rhs: &LinMap) -> Self {
        let (id, instance) = (id.into(), instance.into());
        if lhs.domain().dim() != rhs.domain().dim() || lhs.codomain().dim() != rhs.codomain().dim() {
            let detail = format!(
                "shape mismatch: {}×{} vs {}×{}",
                lhs.rows(),
                lhs.cols(),
                rhs.rows(),
                rhs.cols()
            );
            return Self::fail(id, instance, Witness::Note { detail });
        }
        match lhs.first_difference(rhs) {
            None => Self::pass(id, instance),
            Some((r, c, a, b)) => Self::fail(
                id,
                instance,
                Witness::Map {
                    domain: lhs.domain().split_index(c),
                    codomain: lhs.codomain().split_index(r),
                    lhs: a.to_string(),
                    rhs: b.to_string(),
                },
            ),
        }
    }

    pub fn informational(mut self) -> Self {
        self.required = false;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// An ordered list of checks about one subject.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
    /// Wall-clock time, only recorded on request so that reports stay byte-stable.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Self { subject: subject.into(), checks: Vec::new(), elapsed_ms: None }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn extend_checks(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    /// True iff every required check passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed() || !c.required)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn required_failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed() && c.required)
    }

    /// All checks with the given axiom id.
    pub fn by_id<'a>(&'a self, id: &'a str) -> impl Iterator<Item = &'a Check> + 'a {
        self.checks.iter().filter(move |c| c.id == id)
    }

    /// True iff at least one check with this id exists and all of them passed.
    pub fn id_passed(&self, id: &str) -> bool {
        let mut any = false;
        for c in self.by_id(id) {
            any = true;
            if !c.passed() {
                return false;
            }
        }
        any
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Human-readable rendering, one line per check.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "subject: {}", self.subject);
        for c in &self.checks {
            let status = match (c.status, c.required) {
                (Status::Pass, _) => "PASS",
                (Status::Fail, true) => "FAIL",
                (Status::Fail, false) => "INFO-FAIL",
            };
            let _ = write!(out, "{status:<9} {}", c.id);
            if !c.instance.is_empty() {
                let _ = write!(out, " [{}]", c.instance);
            }
            match &c.witness {
                Some(Witness::Map { domain, codomain, lhs, rhs }) => {
                    let _ = write!(out, "  at input {domain:?}, output {codomain:?}: {lhs} != {rhs}");
                }
                Some(Witness::Elements { elements, detail }) => {
                    let _ = write!(out, "  witness {elements:?}: {detail}");
                }
                Some(Witness::Note { detail }) => {
                    let _ = write!(out, "  {detail}");
                }
                None => {}
            }
            out.push('\n');
        }
        let failed = self.required_failures().count();
        let _ = writeln!(
            out,
            "result: {} ({} checks, {} failed)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.checks.len(),
            failed
        );
        if let Some(ms) = self.elapsed_ms {
            let _ = writeln!(out, "elapsed: {ms} ms");
        }
        out
    }
}
