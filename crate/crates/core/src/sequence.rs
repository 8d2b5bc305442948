//! Bounded checks of d-sequence, USD and standard-sop conditions.

use rayon::prelude::*;
use serde_json::json;

use crate::closure::{nf_pow, schenzel_spaces};
use crate::ideal::{colon_piece, seq_ideal, SopData};
use crate::poly::Polynomial;
use crate::ring::{DimProvenance, GradedRing};
use crate::verdict::{bound, Status, Verdict};

fn names(xs: &[Polynomial]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

/// `(x_1..x_i) : x_{i+1} x_k = (x_1..x_i) : x_k` for all `i` and `k > i`
/// (1-based), degree by degree over the window.
pub fn is_d_sequence(r: &GradedRing, xs: &[Polynomial], lo: i64, hi: i64) -> Verdict {
    let claim = format!("({}) is a d-sequence", names(xs));
    for i in 0..xs.len() {
        let ideal = seq_ideal(r, &xs[..i]);
        for k in i..xs.len() {
            let prod = r.nf(&xs[i].mul(&xs[k]));
            for n in lo.max(0)..=hi {
                let wide = colon_piece(r, &ideal, &prod, n).expect("homogeneous");
                let narrow = colon_piece(r, &ideal, &xs[k], n).expect("homogeneous");
                if wide != narrow {
                    let extra = wide.quotient_representatives(&narrow).expect("same ambient");
                    return Verdict::certified(claim, false)
                        .with_witness("i", i as u64 + 1)
                        .with_witness("k", k as u64 + 1)
                        .with_witness("degree", n)
                        .with_witness("element", r.element(n, &extra[0]).to_string());
                }
            }
        }
    }
    Verdict::new(claim, Status::EvidenceTrue, bound(&[("window_lo", lo), ("window_hi", hi)]))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

fn exponent_tuples(n: usize, m_max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                (1..=m_max.max(1)).map(move |m| {
                    let mut t = t.clone();
                    t.push(m);
                    t
                })
            })
            .collect();
    }
    out
}

/// Every permutation of every power tuple `x^m`, `m_j <= m_max`, is a
/// d-sequence on the window.
pub fn is_usd(r: &GradedRing, xs: &[Polynomial], m_max: u32, lo: i64, hi: i64) -> Verdict {
    let claim = format!("({}) is a USD-sequence", names(xs));
    let cells: Vec<(Vec<usize>, Vec<u32>)> = permutations(xs.len())
        .into_iter()
        .flat_map(|p| exponent_tuples(xs.len(), m_max).into_iter().map(move |m| (p.clone(), m)))
        .collect();
    let results: Vec<Verdict> = cells
        .par_iter()
        .map(|(perm, exps)| {
            let seq: Vec<Polynomial> = perm.iter().zip(exps).map(|(&j, &m)| nf_pow(r, &xs[j], m as u64)).collect();
            is_d_sequence(r, &seq, lo, hi)
        })
        .collect();
    for ((perm, exps), v) in cells.iter().zip(&results) {
        if v.status.is_false() {
            let mut out = Verdict::new(claim, v.status, v.bound.clone())
                .with_witness("permutation", json!(perm.iter().map(|j| j + 1).collect::<Vec<_>>()))
                .with_witness("exponents", json!(exps));
            for (k, w) in &v.witness {
                out.witness.insert(k.clone(), w.clone());
            }
            return out;
        }
    }
    Verdict::new(claim, Status::EvidenceTrue, bound(&[("m_max", m_max as i64), ("window_lo", lo), ("window_hi", hi)]))
        .with_witness("cells", cells.len() as u64)
}

/// Smallest `k <= 2 deg(x) + 2` with `x^k = 0`, if any.
fn nilpotency(r: &GradedRing, x: &Polynomial) -> Option<u64> {
    let mut acc = r.nf(x);
    let top = 2 * x.degree().unwrap_or(1) as u64 + 2;
    for k in 1..=top.max(4) {
        if acc.is_zero() {
            return Some(k);
        }
        acc = r.nf(&acc.mul(x));
    }
    None
}

/// `(x_1..x_d) H^j(R/(x_1..x_{i-1})) = 0` for `i >= 1`, `i + j <= d`,
/// with each cohomology module in its colon representation and checked on
/// representatives over the window.
pub fn is_standard(r: &GradedRing, sop: &SopData, lo: i64, hi: i64) -> Verdict {
    let xs = &sop.elements;
    let d = xs.len();
    let claim = format!("({}) is a standard system of parameters", names(xs));
    for x in xs {
        if let Some(k) = nilpotency(r, x) {
            return Verdict::certified(claim, false)
                .with_witness("nilpotent", x.to_string())
                .with_witness("power", k);
        }
    }
    for i in 1..=d {
        let ri = if i == 1 {
            None
        } else {
            Some(r.quotient_raw(&xs[..i - 1], d - i + 1, DimProvenance::GenericallyEstimated))
        };
        let ring = ri.as_ref().unwrap_or(r);
        let tail: Vec<Polynomial> = xs[i - 1..].iter().map(|x| ring.nf(x)).collect();
        for j in 0..=(d - i) {
            if j >= tail.len() {
                continue;
            }
            let shift: i64 = tail[..j].iter().filter_map(|x| x.degree()).map(|a| a as i64).sum();
            for n in lo..=hi {
                let m = n + shift;
                let (a, b) = schenzel_spaces(ring, &tail, j, m);
                let common = a.intersection(&b).expect("same ambient");
                let reps = a.quotient_representatives(&common).expect("same ambient");
                for rep in &reps {
                    let f = ring.element(m, rep);
                    for x in xs {
                        let Some(e) = x.degree() else { continue };
                        let target = m + e as i64;
                        let (_, b_up) = schenzel_spaces(ring, &tail, j, target);
                        let prod = ring.coords(&f.mul(x), target);
                        if !b_up.contains(&prod).expect("same ambient") {
                            return Verdict::certified(claim, false)
                                .with_witness("i", i as u64)
                                .with_witness("j", j as u64)
                                .with_witness("degree", n)
                                .with_witness("representative", f.to_string())
                                .with_witness("multiplier", x.to_string());
                        }
                    }
                }
            }
        }
    }
    Verdict::new(claim, Status::EvidenceTrue, bound(&[("window_lo", lo), ("window_hi", hi)]))
}

/// Smallest `N <= n_max` for which the `N`-th powers pass [`is_usd`].
pub fn usd_power_search(r: &GradedRing, xs: &[Polynomial], n_max: u32, m_max: u32, lo: i64, hi: i64) -> (Option<u32>, Verdict) {
    let claim = format!("some power of ({}) up to {n_max} is a USD-sequence", names(xs));
    for n in 1..=n_max {
        let ys: Vec<Polynomial> = xs.iter().map(|x| nf_pow(r, x, n as u64)).collect();
        let v = is_usd(r, &ys, m_max, lo, hi);
        if v.status.is_true() {
            let out = Verdict::new(claim, v.status, v.bound.clone()).with_witness("power", n as u64).with_bound("n_max", n_max as i64);
            return (Some(n), out);
        }
    }
    (None, Verdict::inconclusive(claim, "no power up to n_max passed").with_bound("n_max", n_max as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfp::PrimeField;
    use crate::poly::PolyRing;
    use crate::ring::RingPresentation;
    use std::sync::Arc;

    fn quotient(p: u64, names: &[&str], rels: &[&str], dim: Option<usize>) -> GradedRing {
        let f = PrimeField::new(p).unwrap();
        let ring = Arc::new(PolyRing::standard(f, names).unwrap());
        let rels = rels.iter().map(|s| Polynomial::parse(s, &ring).unwrap()).collect();
        GradedRing::new(RingPresentation::new(ring, rels, dim).unwrap()).unwrap()
    }

    fn polys(r: &GradedRing, xs: &[&str]) -> Vec<Polynomial> {
        xs.iter().map(|s| r.parse(s).unwrap()).collect()
    }

    #[test]
    fn d_sequence_examples() {
        let plane = quotient(5, &["x", "y"], &[], None);
        assert_eq!(is_d_sequence(&plane, &polys(&plane, &["x", "y"]), 0, 6).status, Status::EvidenceTrue);
        let nodal = quotient(5, &["x", "y"], &["x*y"], Some(1));
        assert_eq!(is_d_sequence(&nodal, &polys(&nodal, &["x"]), 0, 6).status, Status::EvidenceTrue);
        let fat = quotient(5, &["x", "y"], &["x^2"], Some(1));
        let v = is_d_sequence(&fat, &polys(&fat, &["x"]), 0, 6);
        assert_eq!(v.status, Status::CertifiedFalse);
        assert_eq!(v.witness["degree"], 0);
    }

    #[test]
    fn counting_helpers() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(exponent_tuples(2, 3).len(), 9);
        assert_eq!(exponent_tuples(0, 3), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn usd_and_standard_on_the_curve() {
        let r = quotient(7, &["a", "b", "c", "d"], &["a*d-b*c", "b^3-a^2*c", "c^3-b*d^2", "a*c^2-b^2*d"], Some(2));
        let xs = polys(&r, &["a", "d"]);
        assert_eq!(is_usd(&r, &xs, 2, 0, 6).status, Status::EvidenceTrue);
        let sop = SopData::new(xs.clone()).unwrap();
        assert_eq!(is_standard(&r, &sop, -2, 6).status, Status::EvidenceTrue);
        let (n, v) = usd_power_search(&r, &xs, 2, 2, 0, 6);
        assert_eq!(n, Some(1));
        assert!(v.status.is_true());
    }

    #[test]
    fn nilpotent_sequence_fails_both() {
        let fat = quotient(5, &["x", "y"], &["x^2"], Some(1));
        let xs = polys(&fat, &["x"]);
        assert_eq!(is_usd(&fat, &xs, 2, 0, 10).status, Status::CertifiedFalse);
        assert_eq!(is_standard(&fat, &SopData::new(xs).unwrap(), 0, 10).status, Status::CertifiedFalse);
    }

    #[test]
    fn scalar_multiples_do_not_change_the_verdict() {
        let r = quotient(7, &["x", "y", "z"], &["x^3+y^3+z^3"], Some(2));
        let a = is_d_sequence(&r, &polys(&r, &["x", "y"]), 0, 6);
        let b = is_d_sequence(&r, &polys(&r, &["3*x", "5*y"]), 0, 6);
        assert_eq!(a.status, b.status);
    }
}
