//! Verification outcomes and their JSON form.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::coeff::RationalFunction;
use crate::series::{GridSeries, TruncatedSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Mismatch,
    Unsupported,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Mismatch => "mismatch",
            Status::Unsupported => "unsupported",
        })
    }
}

/// Position of a coefficient: a power of one variable or a bidegree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Degree {
    Single(usize),
    Pair([usize; 2]),
}

impl std::fmt::Display for Degree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Degree::Single(d) => write!(f, "{d}"),
            Degree::Pair([i, j]) => write!(f, "({i},{j})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub degree: Degree,
    pub lhs: String,
    pub rhs: String,
    pub diff: String,
}

impl Mismatch {
    pub fn new(degree: Degree, lhs: &RationalFunction, rhs: &RationalFunction) -> Self {
        let diff = lhs.sub(rhs);
        debug_assert!(!diff.is_zero());
        Mismatch {
            degree,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            diff: diff.to_string(),
        }
    }
}

/// A pass report carries no mismatch; a mismatch report always does.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    pub status: Status,
    pub order: usize,
    pub meta: BTreeMap<String, i64>,
    pub first_mismatch: Option<Mismatch>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl VerificationReport {
    pub fn from_comparison(id: &str, order: usize, meta: BTreeMap<String, i64>, mismatch: Option<Mismatch>) -> Self {
        let status = if mismatch.is_some() { Status::Mismatch } else { Status::Pass };
        VerificationReport {
            id: id.to_string(),
            status,
            order,
            meta,
            first_mismatch: mismatch,
            reason: None,
        }
    }

    pub fn unsupported(id: &str, order: usize, meta: BTreeMap<String, i64>, reason: impl Into<String>) -> Self {
        VerificationReport {
            id: id.to_string(),
            status: Status::Unsupported,
            order,
            meta,
            first_mismatch: None,
            reason: Some(reason.into()),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }
}

pub fn compare_series(lhs: &TruncatedSeries, rhs: &TruncatedSeries) -> Option<Mismatch> {
    lhs.first_difference(rhs)
        .map(|(j, l, r)| Mismatch::new(Degree::Single(j), &l, &r))
}

pub fn compare_grids(lhs: &GridSeries, rhs: &GridSeries) -> Option<Mismatch> {
    lhs.first_difference(rhs)
        .map(|((i, j), l, r)| Mismatch::new(Degree::Pair([i, j]), &l, &r))
}

pub fn compare_values(lhs: &RationalFunction, rhs: &RationalFunction) -> Option<Mismatch> {
    (lhs != rhs).then(|| Mismatch::new(Degree::Single(0), lhs, rhs))
}
