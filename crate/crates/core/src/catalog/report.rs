use serde::{Deserialize, Serialize};

use crate::laurent::Mismatch;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Failed,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Failed => "failed",
            Status::Error => "error",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchReport {
    pub monomial: String,
    pub lhs: String,
    pub rhs: String,
}

impl From<&Mismatch> for MismatchReport {
    fn from(m: &Mismatch) -> Self {
        Self {
            monomial: m.monomial.to_string(),
            lhs: m.left.to_string(),
            rhs: m.right.to_string(),
        }
    }
}

/// Outcome of verifying one identity. Field names are the machine-readable schema.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub name: String,
    #[serde(rename = "paper_ref")]
    pub reference: String,
    pub degree: i64,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub first_mismatch: Option<MismatchReport>,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    pub millis: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub verified: usize,
    pub failed: usize,
    pub error: usize,
}

impl Summary {
    pub fn of(reports: &[Report]) -> Self {
        let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
        Self {
            total: reports.len(),
            verified: count(Status::Verified),
            failed: count(Status::Failed),
            error: count(Status::Error),
        }
    }
}

/// One run: every per-identity report plus the aggregate counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunDocument {
    pub reports: Vec<Report>,
    pub summary: Summary,
}

impl RunDocument {
    pub fn new(reports: Vec<Report>) -> Self {
        let summary = Summary::of(&reports);
        Self { reports, summary }
    }
}
