//! Five-state answers with the bound that produced them.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Status {
    CertifiedTrue,
    CertifiedFalse,
    EvidenceTrue,
    EvidenceFalse,
    Inconclusive,
}

impl Status {
    pub fn is_true(self) -> bool {
        matches!(self, Status::CertifiedTrue | Status::EvidenceTrue)
    }

    pub fn is_false(self) -> bool {
        matches!(self, Status::CertifiedFalse | Status::EvidenceFalse)
    }

    pub fn is_certified(self) -> bool {
        matches!(self, Status::CertifiedTrue | Status::CertifiedFalse)
    }

    fn weakened(self) -> Status {
        match self {
            Status::CertifiedTrue => Status::EvidenceTrue,
            Status::CertifiedFalse => Status::EvidenceFalse,
            s => s,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::CertifiedTrue => "CertifiedTrue",
            Status::CertifiedFalse => "CertifiedFalse",
            Status::EvidenceTrue => "EvidenceTrue",
            Status::EvidenceFalse => "EvidenceFalse",
            Status::Inconclusive => "Inconclusive",
        };
        f.write_str(s)
    }
}

/// Named exhausted bounds, e.g. `{"e_max": 2}` or `{"window_lo": 0, "window_hi": 10}`.
pub type Bound = BTreeMap<String, i64>;

pub fn bound(pairs: &[(&str, i64)]) -> Bound {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub claim: String,
    pub status: Status,
    pub bound: Bound,
    pub witness: Map<String, Value>,
    pub assumptions: Vec<String>,
}

impl Verdict {
    pub fn new(claim: impl Into<String>, status: Status, bound: Bound) -> Self {
        Self {
            claim: claim.into(),
            status,
            bound,
            witness: Map::new(),
            assumptions: Vec::new(),
        }
    }

    pub fn certified(claim: impl Into<String>, holds: bool) -> Self {
        let status = if holds { Status::CertifiedTrue } else { Status::CertifiedFalse };
        Self::new(claim, status, Bound::new())
    }

    pub fn inconclusive(claim: impl Into<String>, reason: impl Into<String>) -> Self {
        Self::new(claim, Status::Inconclusive, Bound::new()).with_witness("reason", reason.into())
    }

    pub fn with_witness(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.witness.insert(key.to_string(), value.into());
        self
    }

    /// Attach an unverified assumption. A certified status cannot carry one,
    /// so it is weakened to the matching evidence status.
    pub fn with_assumption(mut self, a: impl Into<String>) -> Self {
        let a = a.into();
        if !self.assumptions.contains(&a) {
            self.assumptions.push(a);
        }
        self.status = self.status.weakened();
        self
    }

    pub fn with_assumptions(mut self, list: &[String]) -> Self {
        for a in list {
            self = self.with_assumption(a.clone());
        }
        self
    }

    pub fn with_bound(mut self, key: &str, v: i64) -> Self {
        self.bound.insert(key.to_string(), v);
        self
    }

    pub fn holds(&self) -> bool {
        self.status.is_true()
    }
}

/// Conjunction of sub-verdicts: any false wins, then inconclusive, then
/// evidence; certified only if every part is certified true.
pub fn combine(claim: impl Into<String>, parts: &[Verdict], bound: Bound) -> Verdict {
    let mut status = Status::CertifiedTrue;
    for v in parts {
        status = match (status, v.status) {
            (Status::CertifiedFalse, _) | (_, Status::CertifiedFalse) => Status::CertifiedFalse,
            (Status::EvidenceFalse, _) | (_, Status::EvidenceFalse) => Status::EvidenceFalse,
            (Status::Inconclusive, _) | (_, Status::Inconclusive) => Status::Inconclusive,
            (Status::EvidenceTrue, _) | (_, Status::EvidenceTrue) => Status::EvidenceTrue,
            _ => Status::CertifiedTrue,
        };
    }
    let mut out = Verdict::new(claim, status, bound);
    if let Some(first_bad) = parts.iter().find(|v| v.status.is_false()).or_else(|| parts.iter().find(|v| v.status == Status::Inconclusive)) {
        out = out.with_witness("first_failure", first_bad.claim.clone());
        for (k, v) in &first_bad.witness {
            out.witness.entry(k.clone()).or_insert(v.clone());
        }
    }
    let mut assumptions: Vec<String> = Vec::new();
    for v in parts {
        for a in &v.assumptions {
            if !assumptions.contains(a) {
                assumptions.push(a.clone());
            }
        }
    }
    out.with_assumptions(&assumptions)
}
