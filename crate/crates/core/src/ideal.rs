//! Homogeneous ideals by graded pieces: membership, colons, Frobenius
//! powers, and systems of parameters.

use std::fmt;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;
use thiserror::Error;

use crate::gfp::{Matrix, SparseEchelon, Subspace};
use crate::poly::Polynomial;
use crate::ring::{artinian_horizon, artinian_window_check, DimProvenance, GradedRing, RingError};
use crate::verdict::{bound, Status, Verdict};

/// Homogeneous generators kept in normal form; zero generators are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealHandle {
    gens: Vec<Polynomial>,
    label: String,
    key: String,
}

impl IdealHandle {
    pub fn new(r: &GradedRing, gens: Vec<Polynomial>, label: impl Into<String>) -> Result<Self, RingError> {
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            if !g.is_homogeneous() {
                return Err(RingError::NotHomogeneous(g.to_string()));
            }
            let g = r.nf(&g);
            if !g.is_zero() {
                kept.push(g);
            }
        }
        let key = kept.iter().map(|g| g.to_string()).collect::<Vec<_>>().join("; ");
        Ok(Self {
            gens: kept,
            label: label.into(),
            key,
        })
    }

    pub fn zero(label: impl Into<String>) -> Self {
        Self {
            gens: vec![],
            label: label.into(),
            key: String::new(),
        }
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Canonical text of the generators, used as a cache key.
    pub fn key(&self) -> &str {
        &self.key
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Re-normalize the generators in another ring on the same variables.
    pub fn in_ring(&self, r: &GradedRing) -> IdealHandle {
        IdealHandle::new(r, self.gens.clone(), self.label.clone()).expect("generators stay homogeneous")
    }
}

impl fmt::Display for IdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", "))
    }
}

/// Ideal generated by a sequence of elements.
pub fn seq_ideal(r: &GradedRing, xs: &[Polynomial]) -> IdealHandle {
    let label = format!("({})", xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "));
    IdealHandle::new(r, xs.to_vec(), label).expect("homogeneous sequence")
}

/// Semi-echelon basis of `I_n` inside `R_n`, cached per ring.
pub fn ideal_echelon(r: &GradedRing, ideal: &IdealHandle, n: i64) -> Arc<SparseEchelon> {
    let key = (ideal.key().to_string(), n);
    if let Some(e) = r.echelons.read().expect("lock").get(&key) {
        return e.clone();
    }
    let dim = r.piece_dim(n);
    let mut ech = SparseEchelon::new(r.field(), dim);
    if dim > 0 {
        let jobs: Vec<(&Polynomial, i64)> = ideal
            .gens()
            .iter()
            .filter_map(|g| {
                let d = g.degree()? as i64;
                (d <= n).then_some((g, n - d))
            })
            .collect();
        'outer: for (g, m) in jobs {
            let mult = r.basis(m);
            let vectors: Vec<Vec<u32>> = mult
                .monomials()
                .par_iter()
                .map(|b| r.coords(&g.mul_monomial(b, 1), n))
                .collect();
            for v in vectors {
                ech.insert_dense(v);
                if ech.rank() == dim {
                    break 'outer;
                }
            }
        }
    }
    let ech = Arc::new(ech);
    r.echelons.write().expect("lock").entry(key).or_insert(ech).clone()
}

/// `I_n` as a reduced row-echelon subspace of `R_n`.
pub fn ideal_piece(r: &GradedRing, ideal: &IdealHandle, n: i64) -> Arc<Subspace> {
    let key = (ideal.key().to_string(), n);
    if let Some(s) = r.pieces.read().expect("lock").get(&key) {
        return s.clone();
    }
    let s = Arc::new(ideal_echelon(r, ideal, n).to_subspace());
    r.pieces.write().expect("lock").entry(key).or_insert(s).clone()
}

/// Certified membership of a homogeneous element.
pub fn ideal_member(r: &GradedRing, z: &Polynomial, ideal: &IdealHandle) -> Verdict {
    let claim = format!("{z} in {ideal}");
    let z = r.nf(z);
    let Some(n) = z.degree() else {
        return Verdict::certified(claim, true).with_witness("reason", "zero element");
    };
    let holds = ideal_echelon(r, ideal, n as i64).contains(&r.coords(&z, n as i64));
    Verdict::certified(claim, holds).with_witness("degree", n as u64)
}

/// Kernel of a linear map given by its image rows: all coefficient vectors
/// `a` with `Σ a_j rows[j] = 0`.
pub(crate) fn left_kernel(r: &GradedRing, rows: &[Vec<u32>], cols: usize) -> Vec<Vec<u32>> {
    if rows.is_empty() {
        return vec![];
    }
    Matrix::from_rows(r.field(), cols, rows).expect("consistent lengths").left_kernel()
}

/// `{v in R_n : v f in I_{n + deg f}}`.
pub fn colon_piece(r: &GradedRing, ideal: &IdealHandle, f: &Polynomial, n: i64) -> Result<Subspace, RingError> {
    if !f.is_homogeneous() {
        return Err(RingError::NotHomogeneous(f.to_string()));
    }
    let f = r.nf(f);
    let field = r.field();
    let b = r.basis(n);
    let Some(a) = f.degree() else {
        return Ok(Subspace::full(field, b.dim()));
    };
    let target = n + a as i64;
    let ech = ideal_echelon(r, ideal, target);
    let tdim = r.piece_dim(target);
    let images: Vec<Vec<u32>> = b
        .monomials()
        .par_iter()
        .map(|m| {
            let mut w = r.coords(&f.mul_monomial(m, 1), target);
            ech.reduce_in_place(&mut w);
            w
        })
        .collect();
    let kernel = left_kernel(r, &images, tdim);
    Ok(Subspace::span(field, b.dim(), &kernel).expect("kernel vectors have piece length"))
}

/// `I^[p^e]`: generators replaced by their `p^e`-th powers.
pub fn frobenius_power_ideal(r: &GradedRing, ideal: &IdealHandle, e: u32) -> IdealHandle {
    if e == 0 {
        return ideal.clone();
    }
    let q = (r.field().p() as u64).pow(e);
    let gens = ideal.gens().iter().map(|g| g.frobenius_pow(e)).collect();
    IdealHandle::new(r, gens, format!("{}^[{q}]", ideal.label())).expect("powers of homogeneous elements")
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SopError {
    #[error("{got} elements given but the ring has dimension {dim}")]
    TooMany { got: usize, dim: usize },
    #[error("expected {expected} degrees (the ring dimension), got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("no system of parameters found after {attempts} attempts")]
    Exhausted { attempts: usize, last: Box<Verdict> },
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// A homogeneous sequence `x_1..x_d` with its degree sums and evidence.
#[derive(Clone, Debug)]
pub struct SopData {
    pub elements: Vec<Polynomial>,
    pub degrees: Vec<u32>,
    pub sop: Option<Verdict>,
    pub usd: Option<Verdict>,
    pub standard: Option<Verdict>,
}

impl SopData {
    pub fn new(elements: Vec<Polynomial>) -> Result<Self, RingError> {
        let mut degrees = Vec::with_capacity(elements.len());
        for x in &elements {
            match x.degree() {
                Some(d) if d > 0 => degrees.push(d),
                _ => return Err(RingError::NotHomogeneous(x.to_string())),
            }
        }
        Ok(Self {
            elements,
            degrees,
            sop: None,
            usd: None,
            standard: None,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `δ_i = Σ_{j <= i} deg x_j`, with `δ_0 = 0`.
    pub fn delta(&self, i: usize) -> i64 {
        self.degrees[..i].iter().map(|&d| d as i64).sum()
    }

    /// The sequence of `N`-th powers (evidence flags are not carried over).
    pub fn power(&self, n: u32) -> SopData {
        if n == 1 {
            return self.clone();
        }
        SopData::new(self.elements.iter().map(|x| x.pow(n as u64)).collect()).expect("powers stay homogeneous")
    }

    pub fn names(&self) -> Vec<String> {
        self.elements.iter().map(|x| x.to_string()).collect()
    }

    /// Unverified assumptions that results built on this sequence inherit.
    pub fn assumptions(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.sop.as_ref().is_some_and(|v| v.status.is_true()) {
            out.push("sequence is a system of parameters (unchecked)".to_string());
        }
        if !self.standard.as_ref().is_some_and(|v| v.status.is_true()) && !self.usd.as_ref().is_some_and(|v| v.status.is_true()) {
            out.push("sequence is standard (USD) at the powers used".to_string());
        }
        out
    }
}

const COMPLETION_ATTEMPTS: usize = 3;

/// Is `x_1..x_i` part of a system of parameters? The sequence is completed by
/// `d - i` random forms of degree `lcm(weights)` and tested for an artinian
/// quotient.
pub fn sop_check(r: &GradedRing, xs: &[Polynomial], lo: i64, hi: i64, seed: u64) -> Result<Verdict, SopError> {
    let d = r.dim();
    if xs.len() > d {
        return Err(SopError::TooMany { got: xs.len(), dim: d });
    }
    for x in xs {
        if !x.is_homogeneous() {
            return Err(RingError::NotHomogeneous(x.to_string()).into());
        }
    }
    let claim = format!("({}) is part of a system of parameters", xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "));
    let w = r.weight_lcm();
    let missing = d - xs.len();
    let attempts = if missing == 0 { 1 } else { COMPLETION_ATTEMPTS };
    let deg_sum: u32 = xs.iter().filter_map(|x| x.degree()).sum::<u32>() + missing as u32 * w;
    let hi = hi.max(artinian_horizon(r, deg_sum));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last = None;
    for attempt in 0..attempts {
        let mut gens = xs.to_vec();
        for _ in 0..missing {
            gens.push(r.random_form(w as i64, &mut rng));
        }
        let v = artinian_window_check(r, &gens, lo.max(0), hi)?;
        if v.status.is_true() {
            let status = match r.dim_provenance() {
                DimProvenance::UserDeclared | DimProvenance::Exact => Status::CertifiedTrue,
                DimProvenance::GenericallyEstimated => Status::EvidenceTrue,
            };
            let mut out = Verdict::new(claim, status, if status.is_certified() { bound(&[]) } else { bound(&[("completion_attempts", attempts as i64)]) })
                .with_witness("attempt", attempt as u64)
                .with_witness("completion", json!(gens[xs.len()..].iter().map(|g| g.to_string()).collect::<Vec<_>>()));
            if let Some(v) = v.witness.get("vanishing_from_degree") {
                out = out.with_witness("vanishing_from_degree", v.clone());
            }
            return Ok(out);
        }
        last = Some(v);
    }
    let mut out = Verdict::new(claim, Status::EvidenceFalse, bound(&[("completion_attempts", attempts as i64), ("window_hi", hi)]));
    if let Some(v) = last.and_then(|v| v.witness.get("nonvanishing_degree").cloned()) {
        out = out.with_witness("nonvanishing_degree", v);
    }
    Ok(out)
}

/// Random homogeneous elements of the given degrees forming a system of
/// parameters.
pub fn sop_suggest(r: &GradedRing, degrees: &[u32], seed: u64, attempts: usize) -> Result<SopData, SopError> {
    if degrees.len() != r.dim() {
        return Err(SopError::WrongLength {
            expected: r.dim(),
            got: degrees.len(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last = Verdict::inconclusive("system of parameters", "no attempts made");
    for _ in 0..attempts.max(1) {
        let xs: Vec<Polynomial> = degrees.iter().map(|&d| r.random_form(d as i64, &mut rng)).collect();
        if xs.iter().any(|x| x.is_zero()) {
            continue;
        }
        let v = sop_check(r, &xs, 0, 0, seed)?;
        if v.status.is_true() {
            let mut sop = SopData::new(xs)?;
            sop.sop = Some(v);
            return Ok(sop);
        }
        last = v;
    }
    Err(SopError::Exhausted {
        attempts,
        last: Box::new(last),
    })
}

/// A system of parameters drawn from an ideal: generic combinations of a
/// basis of the ideal's lowest nonzero positive-degree piece.
pub fn sop_from_ideal(r: &GradedRing, ideal: &IdealHandle, seed: u64, attempts: usize) -> Result<SopData, SopError> {
    let d = r.dim();
    let top = artinian_horizon(r, 0).max(8);
    let deg = (1..=top).find(|&n| ideal_piece(r, ideal, n).dim() > 0).ok_or(SopError::Exhausted {
        attempts: 0,
        last: Box::new(Verdict::inconclusive("system of parameters from ideal", "ideal has no nonzero positive-degree piece")),
    })?;
    let piece = ideal_piece(r, ideal, deg);
    let gens: Vec<Polynomial> = piece.basis_vectors().iter().map(|v| r.element(deg, v)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last = Verdict::inconclusive("system of parameters from ideal", "no attempts made");
    for _ in 0..attempts.max(1) {
        let mut xs = Vec::with_capacity(d);
        for _ in 0..d {
            xs.push(crate::ring::generic_combination_rng(r, &gens, &mut rng)?);
        }
        let v = sop_check(r, &xs, 0, 0, seed)?;
        if v.status.is_true() {
            let mut sop = SopData::new(xs)?;
            sop.sop = Some(v);
            return Ok(sop);
        }
        last = v;
    }
    Err(SopError::Exhausted {
        attempts,
        last: Box::new(last),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfp::PrimeField;
    use crate::poly::PolyRing;
    use crate::ring::RingPresentation;

    fn quotient(p: u64, names: &[&str], rels: &[&str]) -> GradedRing {
        let f = PrimeField::new(p).unwrap();
        let ring = Arc::new(PolyRing::standard(f, names).unwrap());
        let rels = rels.iter().map(|s| Polynomial::parse(s, &ring).unwrap()).collect();
        GradedRing::new(RingPresentation::new(ring, rels, None).unwrap()).unwrap()
    }

    fn ideal(r: &GradedRing, gens: &[&str]) -> IdealHandle {
        IdealHandle::new(r, gens.iter().map(|s| r.parse(s).unwrap()).collect(), gens.join(",")).unwrap()
    }

    #[test]
    fn zero_ideal_pieces_vanish() {
        let r = quotient(7, &["x", "y"], &[]);
        let z = IdealHandle::zero("0");
        for n in 0..5 {
            assert_eq!(ideal_piece(&r, &z, n).dim(), 0);
        }
    }

    #[test]
    fn principal_ideal_piece() {
        let r = quotient(3, &["x", "y"], &[]);
        let s = ideal_piece(&r, &ideal(&r, &["x"]), 2);
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&r.coords(&r.parse("x^2").unwrap(), 2)).unwrap());
        assert!(s.contains(&r.coords(&r.parse("x*y").unwrap(), 2)).unwrap());
        assert!(!s.contains(&r.coords(&r.parse("y^2").unwrap(), 2)).unwrap());
    }

    #[test]
    fn cubic_degree_three_piece_against_multiples() {
        let r = quotient(7, &["x", "y", "z"], &["x^3+y^3+z^3"]);
        let i = ideal(&r, &["x", "y"]);
        let s = ideal_piece(&r, &i, 3);
        // oracle: span of every monomial multiple of x and y of degree 3
        let mut rows = Vec::new();
        for g in ["x", "y"] {
            for m in ["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"] {
                let prod = r.parse(g).unwrap().mul(&r.parse(m).unwrap());
                rows.push(r.coords(&prod, 3));
            }
        }
        let oracle = Subspace::span(r.field(), 9, &rows).unwrap();
        assert_eq!(*s, oracle);
        // z^3 = -(x^3 + y^3) lies in (x, y), so the piece is everything
        assert_eq!(s.dim(), 9);
    }

    #[test]
    fn colon_examples() {
        let r = quotient(3, &["x", "y"], &[]);
        let x = r.parse("x").unwrap();
        let c = colon_piece(&r, &ideal(&r, &["x^2"]), &x, 1).unwrap();
        assert_eq!(c, Subspace::span(r.field(), 2, &[r.coords(&x, 1)]).unwrap());
        let full = colon_piece(&r, &ideal(&r, &["x"]), &r.parse("x*y").unwrap(), 2).unwrap();
        assert!(full.is_full());

        let nod = quotient(5, &["x", "y"], &["x*y"]);
        let ann = colon_piece(&nod, &IdealHandle::zero("0"), &nod.parse("x").unwrap(), 1).unwrap();
        assert_eq!(ann, Subspace::span(nod.field(), 2, &[nod.coords(&nod.parse("y").unwrap(), 1)]).unwrap());
    }

    #[test]
    fn colon_matches_brute_force_enumeration() {
        let r = quotient(3, &["x", "y", "z"], &["x*y - z^2"]);
        let i = ideal(&r, &["x^2", "y*z"]);
        let f = r.parse("x + z").unwrap();
        for n in 0..4 {
            let c = colon_piece(&r, &i, &f, n).unwrap();
            let b = r.basis(n);
            let target = ideal_piece(&r, &i, n + 1);
            // enumerate all of R_n over F_3
            let dim = b.dim() as u32;
            let mut count = 0usize;
            for code in 0..3u64.pow(dim) {
                let v: Vec<u32> = (0..dim).map(|k| ((code / 3u64.pow(k)) % 3) as u32).collect();
                let prod = r.element(n, &v).mul(&f);
                let inside = target.contains(&r.coords(&prod, n + 1)).unwrap();
                assert_eq!(inside, c.contains(&v).unwrap());
                count += inside as usize;
            }
            assert_eq!(count, 3usize.pow(c.dim() as u32));
        }
    }

    #[test]
    fn frobenius_powers_of_ideals() {
        let r = quotient(3, &["x", "y"], &[]);
        let i = ideal(&r, &["x", "y"]);
        assert_eq!(frobenius_power_ideal(&r, &i, 1).key(), "x^3; y^3");
        assert_eq!(frobenius_power_ideal(&r, &i, 0), i);
        let r5 = quotient(5, &["x", "y"], &[]);
        assert_eq!(frobenius_power_ideal(&r5, &ideal(&r5, &["x + y"]), 1).key(), "x^5 + y^5");
    }

    #[test]
    fn ideal_pieces_are_monotone_and_frobenius_respects_sums() {
        let r = quotient(5, &["x", "y", "z"], &["x*z - y^2"]);
        let small = ideal(&r, &["x"]);
        let big = ideal(&r, &["x", "y + z"]);
        for n in 0..6 {
            assert!(ideal_piece(&r, &small, n).is_subspace_of(&ideal_piece(&r, &big, n)).unwrap());
        }
        let j = ideal(&r, &["y + z"]);
        let sum_q = frobenius_power_ideal(&r, &big, 1);
        for n in 4..12 {
            let lhs = ideal_piece(&r, &sum_q, n);
            let rhs = ideal_piece(&r, &frobenius_power_ideal(&r, &small, 1), n).sum(&ideal_piece(&r, &frobenius_power_ideal(&r, &j, 1), n)).unwrap();
            assert_eq!(*lhs, rhs);
        }
    }

    #[test]
    fn sop_examples() {
        let r = quotient(7, &["x", "y"], &[]);
        let x = r.parse("x").unwrap();
        let y = r.parse("y").unwrap();
        assert_eq!(sop_check(&r, &[x.clone(), y.clone()], 0, 8, 1).unwrap().status, Status::CertifiedTrue);
        assert_eq!(sop_check(&r, &[x.clone(), x.clone()], 0, 8, 1).unwrap().status, Status::EvidenceFalse);
        assert_eq!(sop_check(&r, &[y.clone(), x.clone()], 0, 8, 1).unwrap().status, sop_check(&r, &[x.clone(), y.clone()], 0, 8, 1).unwrap().status);
        assert!(matches!(sop_check(&r, &[x.clone(), y.clone(), x], 0, 8, 1), Err(SopError::TooMany { .. })));

        let s = sop_suggest(&r, &[1, 1], 5, 10).unwrap();
        assert_eq!(s.degrees, vec![1, 1]);
        assert!(matches!(sop_suggest(&r, &[1], 5, 10), Err(SopError::WrongLength { .. })));

        let fe = quotient(7, &["x", "y", "z"], &["x^3+y^3+z^3"]);
        let s = sop_suggest(&fe, &[1, 1], 3, 10).unwrap();
        assert_eq!(s.delta(0), 0);
        assert_eq!(s.delta(2), 2);
        assert!(s.sop.unwrap().status.is_true());
    }

    #[test]
    fn ideal_membership_is_certified() {
        let fe = quotient(7, &["x", "y", "z"], &["x^3+y^3+z^3"]);
        let i = ideal(&fe, &["x", "y"]);
        assert_eq!(ideal_member(&fe, &fe.parse("z^2").unwrap(), &i).status, Status::CertifiedFalse);
        assert_eq!(ideal_member(&fe, &fe.parse("z^3").unwrap(), &i).status, Status::CertifiedTrue);
    }
}
