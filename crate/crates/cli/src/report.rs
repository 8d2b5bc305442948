//! JSON and text reports, and the exit-code rule.

use serde::Serialize;
use serde_json::{json, Value};
use tclab::closure::Bounds;
use tclab::{GradedRing, Status, Verdict};

#[derive(Clone, Debug, Serialize)]
pub struct RingInfo {
    #[serde(rename = "char")]
    pub characteristic: u32,
    pub vars: Vec<Value>,
    pub dim: usize,
    pub provenance: String,
}

impl RingInfo {
    pub fn of(r: &GradedRing) -> Self {
        let ring = r.poly_ring();
        Self {
            characteristic: r.field().p(),
            vars: ring.names().iter().zip(ring.weights()).map(|(n, w)| json!({"name": n, "weight": w})).collect(),
            dim: r.dim(),
            provenance: r.dim_provenance().to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WindowInfo {
    pub lo: i64,
    pub hi: i64,
    pub s_max: u32,
    pub e_max: u32,
    pub k_max: u32,
    pub m_max: u32,
    pub l_max: u32,
    pub powers: Vec<u32>,
    pub degree_cap: i64,
}

impl WindowInfo {
    pub fn new(lo: i64, hi: i64, b: &Bounds) -> Self {
        Self {
            lo,
            hi,
            s_max: b.s_max,
            e_max: b.e_max,
            k_max: b.k_max,
            m_max: b.m_max,
            l_max: b.l_max,
            powers: b.ladder.clone(),
            degree_cap: b.degree_cap,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Table {
    pub name: String,
    pub rows: Vec<Value>,
}

impl Table {
    pub fn new(name: impl Into<String>) -> Self {
        Self { name: name.into(), rows: vec![] }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub ring: RingInfo,
    pub window: WindowInfo,
    pub verdicts: Vec<Verdict>,
    pub tables: Vec<Table>,
    pub seed: u64,
}

/// 1 if anything is false, else 2 if anything is inconclusive, else 0.
pub fn exit_code(verdicts: &[Verdict]) -> i32 {
    if verdicts.iter().any(|v| v.status.is_false()) {
        1
    } else if verdicts.iter().any(|v| v.status == Status::Inconclusive) {
        2
    } else {
        0
    }
}

fn compact(v: &impl Serialize) -> String {
    serde_json::to_string(v).expect("serializable")
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let r = &self.ring;
        let vars: Vec<String> = r.vars.iter().map(|v| format!("{}:{}", v["name"].as_str().unwrap_or("?"), v["weight"])).collect();
        out += &format!("{}  F_{}[{}]  dim {} ({})  seed {}\n", self.command, r.characteristic, vars.join(", "), r.dim, r.provenance, self.seed);
        out += &format!("window {}..{}  {}\n", self.window.lo, self.window.hi, compact(&self.window));
        for v in &self.verdicts {
            out += &format!("{:<14} {}  bound={}", v.status.to_string(), v.claim, compact(&v.bound));
            if !v.assumptions.is_empty() {
                out += &format!("  assumptions={}", compact(&v.assumptions));
            }
            if !v.witness.is_empty() {
                out += &format!("  witness={}", compact(&v.witness));
            }
            out.push('\n');
        }
        for t in &self.tables {
            out += &format!("table {} ({} rows)\n", t.name, t.rows.len());
            for row in &t.rows {
                out += &format!("  {}\n", compact(row));
            }
        }
        out
    }
}

pub fn error_json(kind: &str, message: &str, extra: Value) -> String {
    let mut err = json!({"kind": kind, "message": message});
    if let (Some(map), Value::Object(more)) = (err.as_object_mut(), extra) {
        map.extend(more);
    }
    serde_json::to_string_pretty(&json!({ "error": err })).expect("serializable") + "\n"
}
