use std::fmt::Write as _;

use serde::Serialize;

use super::grid::GridCertificate;
use crate::exactpoly::PositivityCertificate;
use crate::interval::Enclosure;

/// Outcome of a single step. Ordered `Fail < Inconclusive < Pass` so the
/// overall verdict is the minimum over steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Fail,
    Inconclusive,
    Pass,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    /// Process exit code: 0 pass, 1 fail, 3 inconclusive.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Inconclusive => 3,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
        }
    }

    /// Worst of a collection; empty collections pass.
    pub fn meet<I: IntoIterator<Item = Status>>(statuses: I) -> Status {
        statuses.into_iter().min().unwrap_or(Status::Pass)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TheoremId {
    #[serde(rename = "lemma2")]
    Lemma2,
    #[serde(rename = "theorem1")]
    Theorem1,
    #[serde(rename = "theorem2")]
    Theorem2,
    #[serde(rename = "remark1")]
    Remark1,
    #[serde(rename = "remark2-conjecture")]
    Remark2Conjecture,
}

impl TheoremId {
    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Lemma2 => "lemma2",
            TheoremId::Theorem1 => "theorem1",
            TheoremId::Theorem2 => "theorem2",
            TheoremId::Remark1 => "remark1",
            TheoremId::Remark2Conjecture => "remark2-conjecture",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProofStep {
    pub id: String,
    pub description: String,
    pub status: Status,
    pub computed: Option<Enclosure>,
    /// Anchor value with its provenance, e.g. `"3.468 (published anchor)"`.
    pub expected: Option<String>,
    pub tolerance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<PositivityCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridCertificate>,
}

impl ProofStep {
    pub fn new(id: impl Into<String>, description: impl Into<String>, status: Status) -> Self {
        Self {
            id: id.into(),
            description: description.into(),
            status,
            computed: None,
            expected: None,
            tolerance: 0.0,
            certificate: None,
            grid: None,
        }
    }

    pub fn computed(mut self, e: Enclosure) -> Self {
        self.computed = Some(e);
        self
    }

    pub fn expected(mut self, s: impl Into<String>, tolerance: f64) -> Self {
        self.expected = Some(s.into());
        self.tolerance = tolerance;
        self
    }

    pub fn certificate(mut self, c: PositivityCertificate) -> Self {
        self.certificate = Some(c);
        self
    }

    pub fn grid(mut self, g: GridCertificate) -> Self {
        self.grid = Some(g);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub overall: Status,
    pub steps: Vec<ProofStep>,
}

impl VerificationReport {
    /// Sorts steps by id and derives the overall verdict.
    pub fn new(theorem: TheoremId, mut steps: Vec<ProofStep>) -> Self {
        steps.sort_by(|a, b| a.id.cmp(&b.id));
        let overall = Status::meet(steps.iter().map(|s| s.status));
        Self {
            theorem,
            overall,
            steps,
        }
    }

    pub fn step(&self, id: &str) -> Option<&ProofStep> {
        self.steps.iter().find(|s| s.id == id)
    }

    pub fn failing_steps(&self) -> Vec<&str> {
        self.steps
            .iter()
            .filter(|s| s.status != Status::Pass)
            .map(|s| s.id.as_str())
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}: {}", self.theorem.name(), self.overall.label());
        for s in &self.steps {
            let _ = write!(out, "  [{}] {}: {}", s.status.label(), s.id, s.description);
            if let Some(c) = &s.computed {
                let _ = write!(out, " computed={c}");
            }
            if let Some(e) = &s.expected {
                let _ = write!(out, " expected={e} tol={}", s.tolerance);
            }
            out.push('\n');
        }
        out
    }
}
