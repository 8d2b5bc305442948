//! Limit, tight, germ and unmixed closures by graded pieces, the local
//! cohomology pieces they compute, and bounded checks of the vanishing and
//! nonvanishing statements built on them.
//!
//! Quantifiers over `s`, `q = p^e` and sop powers are realized by the
//! bounds in [`Bounds`]; every answer records which bound it exhausted.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::gfp::Subspace;
use crate::ideal::{colon_piece, frobenius_power_ideal, ideal_echelon, ideal_piece, left_kernel, seq_ideal, IdealHandle, SopData, SopError};
use crate::poly::Polynomial;
use crate::ring::{jacobian_and_isolated_check, section, GradedRing, RingError};
use crate::verdict::{bound, combine, Bound, Status, Verdict};

pub const TEST_ELEMENT_ASSUMPTION: &str = "c is a parameter test element";

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ClosureError {
    #[error("test element is zero in the ring")]
    ZeroTestElement,
    #[error("test element '{0}' failed the R° check: R/(c) does not drop in dimension")]
    NotInRo(String),
    #[error("no test element candidate: {0}")]
    NoTestElement(String),
    #[error("cohomological index {i} out of range for a sequence of length {len} in dimension {d}")]
    IndexOutOfRange { i: usize, len: usize, d: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Sop(#[from] SopError),
}

/// Exponent and degree bounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub s_max: u32,
    pub e_max: u32,
    pub k_max: u32,
    pub m_max: u32,
    pub l_max: u32,
    pub ladder: Vec<u32>,
    /// Largest degree `q n + deg c` a Frobenius check may visit.
    pub degree_cap: i64,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            s_max: 6,
            e_max: 2,
            k_max: 3,
            m_max: 2,
            l_max: 2,
            ladder: vec![1, 2, 4],
            degree_cap: 1200,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TestElementSource {
    Jacobian,
    User,
}

/// The element `c` used in every Frobenius check.
#[derive(Clone, Debug)]
pub struct TestElement {
    pub c: Polynomial,
    pub source: TestElementSource,
    /// True only when asserted by the user, or when `c` is a unit of a
    /// polynomial ring (where every element of R° is a test element).
    pub certified: bool,
    pub evidence: Verdict,
}

impl TestElement {
    /// Generic combination of the lowest-degree nonzero Jacobian minors.
    pub fn jacobian(r: &GradedRing, seed: u64) -> Result<Self, ClosureError> {
        let report = jacobian_and_isolated_check(r);
        let gens = report.ideal.gens();
        let low = gens
            .iter()
            .filter_map(|g| g.degree())
            .min()
            .ok_or_else(|| ClosureError::NoTestElement("every Jacobian minor vanishes in R".into()))?;
        let lowest: Vec<Polynomial> = gens.iter().filter(|g| g.degree() == Some(low)).cloned().collect();
        let c = crate::ring::generic_combination(r, &lowest, seed)?;
        let mut te = Self::checked(r, c, TestElementSource::Jacobian)?;
        if r.presentation().relations().is_empty() && low == 0 {
            te.certified = true;
        }
        Ok(te)
    }

    /// A user-supplied element; `asserted` marks it as a known test element.
    pub fn user(r: &GradedRing, c: Polynomial, asserted: bool) -> Result<Self, ClosureError> {
        let mut te = Self::checked(r, c, TestElementSource::User)?;
        te.certified = asserted;
        Ok(te)
    }

    fn checked(r: &GradedRing, c: Polynomial, source: TestElementSource) -> Result<Self, ClosureError> {
        if !c.is_homogeneous() {
            return Err(RingError::NotHomogeneous(c.to_string()).into());
        }
        let c = r.nf(&c);
        let Some(deg) = c.degree() else {
            return Err(ClosureError::ZeroTestElement);
        };
        let claim = format!("{c} lies outside every minimal prime");
        let evidence = if deg == 0 {
            Verdict::certified(claim, true).with_witness("reason", "unit")
        } else {
            let q = section(r, &c)?;
            if q.dim() >= r.dim() {
                return Err(ClosureError::NotInRo(c.to_string()));
            }
            Verdict::new(claim, Status::EvidenceTrue, bound(&[]))
                .with_witness("dim", r.dim() as u64)
                .with_witness("dim_mod_c", q.dim() as u64)
        };
        Ok(Self {
            c,
            source,
            certified: false,
            evidence,
        })
    }

    pub fn degree(&self) -> i64 {
        self.c.degree().unwrap_or(0) as i64
    }

    pub fn assumptions(&self) -> Vec<String> {
        if self.certified {
            vec![]
        } else {
            vec![TEST_ELEMENT_ASSUMPTION.to_string()]
        }
    }

    /// A Jacobian element of `r`, else a generic linear form, whichever first
    /// passes the R° check.
    fn fallback(r: &GradedRing) -> Result<TestElement, ClosureError> {
        match Self::jacobian(r, 0) {
            Ok(te) => return Ok(te),
            Err(ClosureError::NotInRo(_) | ClosureError::ZeroTestElement | ClosureError::NoTestElement(_)) => {}
            Err(e) => return Err(e),
        }
        let ring = r.poly_ring();
        let w = r.weight_lcm();
        let forms: Vec<Polynomial> = (0..ring.nvars())
            .map(|i| {
                let k = w / ring.weights()[i];
                Polynomial::var(ring, i).pow(k as u64)
            })
            .collect();
        for seed in 0..8 {
            let c = crate::ring::generic_combination(r, &forms, seed)?;
            if let Ok(te) = Self::checked(r, c, TestElementSource::Jacobian) {
                return Ok(te);
            }
        }
        Err(ClosureError::NoTestElement("no element of the quotient passed the R° check".into()))
    }

    /// The image of `c` in a quotient ring on the same variables, kept
    /// uncertified.
    /// The image of `c` in a quotient of its ring. When the image lands in a
    /// minimal prime of the quotient, a Jacobian element of the quotient is
    /// used instead.
    pub fn image_in(&self, r: &GradedRing) -> Result<TestElement, ClosureError> {
        let mut te = match Self::checked(r, self.c.clone(), self.source) {
            Ok(te) => te,
            Err(ClosureError::NotInRo(_) | ClosureError::ZeroTestElement) => Self::fallback(r)?,
            Err(e) => return Err(e),
        };
        te.certified = false;
        Ok(te)
    }
}

/// `f^k` with normal forms taken after every multiplication.
pub(crate) fn nf_pow(r: &GradedRing, f: &Polynomial, k: u64) -> Polynomial {
    let mut base = r.nf(f);
    let mut acc = Polynomial::one(f.ring());
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            acc = r.nf(&acc.mul(&base));
        }
        k >>= 1;
        if k > 0 {
            base = r.nf(&base.mul(&base));
        }
    }
    acc
}

fn product(r: &GradedRing, xs: &[Polynomial]) -> Polynomial {
    xs.iter().fold(Polynomial::one(r.poly_ring()), |acc, x| r.nf(&acc.mul(x)))
}

fn powers(r: &GradedRing, xs: &[Polynomial], s: u64) -> Vec<Polynomial> {
    xs.iter().map(|x| nf_pow(r, x, s)).collect()
}

fn elements(r: &GradedRing, n: i64, vs: &[Vec<u32>]) -> Vec<Polynomial> {
    vs.iter().map(|v| r.element(n, v)).collect()
}

fn sub(a: &Subspace, b: &Subspace) -> bool {
    a.is_subspace_of(b).expect("pieces of one degree")
}

fn plus(a: &Subspace, b: &Subspace) -> Subspace {
    a.sum(b).expect("pieces of one degree")
}

fn meet(a: &Subspace, b: &Subspace) -> Subspace {
    a.intersection(b).expect("pieces of one degree")
}

fn names(xs: &[Polynomial]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

// ---------------------------------------------------------------- limit

/// `z ∈ (x_1..x_i)^lim`: the first `s <= s_max` with
/// `(x_1 ⋯ x_i)^{s-1} z ∈ (x_1^s, …, x_i^s)` certifies membership.
pub fn limit_member(r: &GradedRing, z: &Polynomial, xs: &[Polynomial], s_max: u32) -> Verdict {
    let claim = format!("{z} in ({})^lim", names(xs));
    let z = r.nf(z);
    if z.is_zero() {
        return Verdict::certified(claim, true).with_witness("reason", "zero element");
    }
    if xs.is_empty() {
        return Verdict::certified(claim, false).with_witness("reason", "limit closure of the zero ideal is zero");
    }
    let prod = product(r, xs);
    let mut mult = Polynomial::one(r.poly_ring());
    for s in 1..=s_max.max(1) {
        let ideal = seq_ideal(r, &powers(r, xs, s as u64));
        let w = r.nf(&z.mul(&mult));
        if let Some(deg) = w.degree() {
            if ideal_echelon(r, &ideal, deg as i64).contains(&r.coords(&w, deg as i64)) {
                return Verdict::certified(claim, true).with_witness("s", s as u64);
            }
        } else {
            return Verdict::certified(claim, true).with_witness("s", s as u64);
        }
        mult = r.nf(&mult.mul(&prod));
    }
    Verdict::new(claim, Status::EvidenceFalse, bound(&[("s_max", s_max as i64)]))
}

#[derive(Clone, Debug)]
pub struct LimitPiece {
    pub space: Subspace,
    /// Smallest `s` from which no growth was seen up to `s_used`.
    pub stable_from: u32,
    pub s_used: u32,
}

/// `[(x_1..x_i)^lim]_n` as the union over `s <= s_max` of
/// `[(x_1^s..x_i^s) : (x_1 ⋯ x_i)^{s-1}]_n`. Stops early once the piece is full.
pub fn limit_piece(r: &GradedRing, xs: &[Polynomial], n: i64, s_max: u32) -> LimitPiece {
    let field = r.field();
    let dim = r.piece_dim(n);
    let mut space = Subspace::zero(field, dim);
    if xs.is_empty() || dim == 0 {
        return LimitPiece {
            space,
            stable_from: 1,
            s_used: 0,
        };
    }
    let prod = product(r, xs);
    let mut mult = Polynomial::one(r.poly_ring());
    let mut stable_from = 1;
    let mut s_used = 0;
    for s in 1..=s_max.max(1) {
        let ideal = seq_ideal(r, &powers(r, xs, s as u64));
        let piece = colon_piece(r, &ideal, &mult, n).expect("homogeneous product");
        let next = plus(&space, &piece);
        if next.dim() > space.dim() {
            stable_from = s;
        }
        space = next;
        s_used = s;
        if space.is_full() {
            break;
        }
        mult = r.nf(&mult.mul(&prod));
    }
    LimitPiece {
        space,
        stable_from,
        s_used,
    }
}

// ---------------------------------------------------------------- tight

#[derive(Clone, Debug)]
pub struct TightPiece {
    pub space: Subspace,
    pub verdict: Verdict,
    /// Dimension of the running intersection after each `e`.
    pub kernel_dims: Vec<usize>,
}

fn frob_image(r: &GradedRing, te: &TestElement, v: &Polynomial, e: u32, target: i64) -> Vec<u32> {
    let w = te.c.mul(&v.frobenius_pow(e));
    r.coords(&w, target)
}

/// Degree `q n + deg c`, or `None` past the cap.
fn frobenius_degree(p: u32, e: u32, n: i64, c_deg: i64, cap: i64) -> Option<i64> {
    let q = (p as i64).checked_pow(e)?;
    let d = q.checked_mul(n)?.checked_add(c_deg)?;
    (d <= cap).then_some(d)
}

/// `[I^*]_n` bounded above by `∩_{e <= e_max} ker(v ↦ c v^q mod I^[q])`.
/// Each map is linear on `R_n` because `(a v + w)^q = a v^q + w^q` over F_p.
/// Only a complement of `I_n` inside the running kernel is evaluated; once
/// the kernel equals `I_n` no later `e` can shrink it.
pub fn tight_piece(r: &GradedRing, ideal: &IdealHandle, n: i64, te: &TestElement, bounds: &Bounds) -> TightPiece {
    let claim = format!("[{}*]_{n} computed", ideal);
    let field = r.field();
    let dim = r.piece_dim(n);
    let base = ideal_piece(r, ideal, n);
    let assumptions = te.assumptions();
    if dim == 0 || base.is_full() {
        return TightPiece {
            space: Subspace::full(field, dim),
            verdict: Verdict::certified(claim, true).with_witness("reason", if dim == 0 { "zero piece" } else { "ideal piece is full" }),
            kernel_dims: vec![],
        };
    }
    let mut kernel = Subspace::full(field, dim);
    let mut kernel_dims = Vec::new();
    for e in 0..=bounds.e_max {
        let reps = kernel.quotient_representatives(&base).expect("same ambient");
        if reps.is_empty() {
            let verdict = Verdict::new(claim, Status::EvidenceTrue, bound(&[("e_max", bounds.e_max as i64)]))
                .with_witness("settled_at_e", e as u64)
                .with_witness("dim", kernel.dim() as u64)
                .with_assumptions(&assumptions);
            return TightPiece {
                space: kernel,
                verdict,
                kernel_dims,
            };
        }
        let Some(target) = frobenius_degree(field.p(), e, n, te.degree(), bounds.degree_cap) else {
            let verdict = Verdict::inconclusive(claim, "Frobenius degree exceeds the cap")
                .with_bound("degree_cap", bounds.degree_cap)
                .with_witness("e", e as u64)
                .with_assumptions(&assumptions);
            return TightPiece {
                space: kernel,
                verdict,
                kernel_dims,
            };
        };
        let frob = frobenius_power_ideal(r, ideal, e);
        let ech = ideal_echelon(r, &frob, target);
        let polys = elements(r, n, &reps);
        let images: Vec<Vec<u32>> = polys
            .par_iter()
            .map(|v| {
                let mut w = frob_image(r, te, v, e, target);
                ech.reduce_in_place(&mut w);
                w
            })
            .collect();
        let combos = left_kernel(r, &images, r.piece_dim(target));
        let mut vecs = base.basis_vectors();
        for a in &combos {
            let mut acc = vec![0u32; dim];
            for (coef, rep) in a.iter().zip(&reps) {
                field.axpy(&mut acc, *coef, rep);
            }
            vecs.push(acc);
        }
        kernel = Subspace::span(field, dim, &vecs).expect("piece vectors");
        kernel_dims.push(kernel.dim());
    }
    let k = kernel_dims.len();
    let stable = k >= 2 && kernel_dims[k - 1] == kernel_dims[k - 2];
    let verdict = if stable {
        Verdict::new(claim, Status::EvidenceTrue, bound(&[("e_max", bounds.e_max as i64)]))
    } else {
        Verdict::inconclusive(claim, "kernel chain still shrinking at e_max").with_bound("e_max", bounds.e_max as i64)
    }
    .with_witness("dim", kernel.dim() as u64)
    .with_witness("kernel_dims", json!(kernel_dims))
    .with_assumptions(&assumptions);
    TightPiece {
        space: kernel,
        verdict,
        kernel_dims,
    }
}

/// `z ∈ I^*`: a failure at any `e` is a non-membership certificate when `c`
/// is a test element; success through `e_max` is evidence.
pub fn tight_member(r: &GradedRing, z: &Polynomial, ideal: &IdealHandle, te: &TestElement, bounds: &Bounds) -> Verdict {
    let claim = format!("{z} in {ideal}*");
    let z = r.nf(z);
    let assumptions = te.assumptions();
    let Some(n) = z.degree() else {
        return Verdict::certified(claim, true).with_witness("reason", "zero element");
    };
    let p = r.field().p();
    for e in 0..=bounds.e_max {
        let Some(target) = frobenius_degree(p, e, n as i64, te.degree(), bounds.degree_cap) else {
            return Verdict::inconclusive(claim, "Frobenius degree exceeds the cap")
                .with_bound("degree_cap", bounds.degree_cap)
                .with_witness("e", e as u64)
                .with_assumptions(&assumptions);
        };
        let frob = frobenius_power_ideal(r, ideal, e);
        let w = frob_image(r, te, &z, e, target);
        if !ideal_echelon(r, &frob, target).contains(&w) {
            return Verdict::certified(claim, false)
                .with_witness("e", e as u64)
                .with_witness("degree", target)
                .with_assumptions(&assumptions);
        }
    }
    Verdict::new(claim, Status::EvidenceTrue, bound(&[("e_max", bounds.e_max as i64)])).with_assumptions(&assumptions)
}

/// `[(x_1..x_i)^germ]_n = Σ_j [(x_1..x̂_j..x_i)^*]_n`; `(0)^*` for one
/// element and zero for none.
pub fn germ_piece(r: &GradedRing, xs: &[Polynomial], n: i64, te: &TestElement, bounds: &Bounds) -> (Subspace, Verdict) {
    let claim = format!("[({})^germ]_{n} computed", names(xs));
    let dim = r.piece_dim(n);
    match xs.len() {
        0 => (Subspace::zero(r.field(), dim), Verdict::certified(claim, true)),
        1 => {
            let t = tight_piece(r, &IdealHandle::zero("(0)"), n, te, bounds);
            let v = combine(claim, &[t.verdict], bound(&[("e_max", bounds.e_max as i64)]));
            (t.space, v)
        }
        _ => {
            let mut space = Subspace::zero(r.field(), dim);
            let mut parts = Vec::new();
            for j in 0..xs.len() {
                let rest: Vec<Polynomial> = xs.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect();
                let t = tight_piece(r, &seq_ideal(r, &rest), n, te, bounds);
                space = plus(&space, &t.space);
                parts.push(t.verdict);
            }
            (space, combine(claim, &parts, bound(&[("e_max", bounds.e_max as i64)])))
        }
    }
}

pub const TEST_IDEAL_ASSUMPTION: &str = "parameters lie in the parameter test ideal";

/// `I^germ + I = I^lim` degree by degree over the window.
pub fn germ_limit_check(r: &GradedRing, xs: &[Polynomial], lo: i64, hi: i64, te: &TestElement, bounds: &Bounds) -> Verdict {
    let claim = format!("({0})^germ + ({0}) = ({0})^lim", names(xs));
    let ideal = seq_ideal(r, xs);
    let mut parts = Vec::new();
    for n in lo..=hi {
        let (germ, v) = germ_piece(r, xs, n, te, bounds);
        let lhs = plus(&germ, &ideal_piece(r, &ideal, n));
        let lim = limit_piece(r, xs, n, bounds.s_max).space;
        if lhs != lim {
            return Verdict::new(claim, Status::EvidenceFalse, bound(&[("e_max", bounds.e_max as i64), ("s_max", bounds.s_max as i64)]))
                .with_witness("degree", n)
                .with_witness("left_dim", lhs.dim() as u64)
                .with_witness("limit_dim", lim.dim() as u64)
                .with_assumption(TEST_IDEAL_ASSUMPTION);
        }
        parts.push(v);
    }
    let mut b = bound(&[("window_lo", lo), ("window_hi", hi), ("e_max", bounds.e_max as i64)]);
    b.insert("s_max".into(), bounds.s_max as i64);
    combine(claim, &parts, b).with_assumption(TEST_IDEAL_ASSUMPTION)
}

/// `[(x_1..x_i)^unm]_n` through the colon with the next parameter.
pub fn unmixed_piece(r: &GradedRing, xs: &[Polynomial], next: &Polynomial, n: i64) -> Result<Subspace, ClosureError> {
    Ok(colon_piece(r, &seq_ideal(r, xs), next, n)?)
}

// ---------------------------------------------------------------- cohomology

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Method {
    #[serde(rename = "schenzel")]
    Schenzel,
    #[serde(rename = "thm1")]
    Thm1,
    #[serde(rename = "top-limit")]
    TopLimit,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Schenzel => "schenzel",
            Method::Thm1 => "thm1",
            Method::TopLimit => "top-limit",
        })
    }
}

/// `dim [H^i_m(R)]_n` with the data that produced it.
#[derive(Clone, Debug)]
pub struct CohomologyPiece {
    pub i: usize,
    pub n: i64,
    pub raw_degree: i64,
    pub power: u32,
    pub dim: usize,
    pub method: Method,
    pub representatives: Vec<Polynomial>,
    pub verdict: Verdict,
}

fn check_index(r: &GradedRing, sop: &SopData, i: usize) -> Result<(), ClosureError> {
    if i >= r.dim() || i >= sop.len() {
        return Err(ClosureError::IndexOutOfRange { i, len: sop.len(), d: r.dim() });
    }
    Ok(())
}

/// Numerator and denominator of the colon representation at raw degree `m`:
/// `A = (y_1..y_i) : y_{i+1}`, `B = (y_1..y_i) + Σ_j (y_1..ŷ_j..y_i) : y_j`.
pub(crate) fn schenzel_spaces(r: &GradedRing, ys: &[Polynomial], i: usize, m: i64) -> (Subspace, Subspace) {
    let head = &ys[..i];
    let ideal = seq_ideal(r, head);
    let a = colon_piece(r, &ideal, &ys[i], m).expect("homogeneous");
    let mut b = (*ideal_piece(r, &ideal, m)).clone();
    for j in 0..i {
        let rest: Vec<Polynomial> = head.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect();
        let c = colon_piece(r, &seq_ideal(r, &rest), &head[j], m).expect("homogeneous");
        b = plus(&b, &c);
    }
    (a, b)
}

/// `[H^i]_n` from the colon representation with the sop raised to the
/// power `N`, read at raw degree `n + N δ_i`.
pub fn schenzel_piece(r: &GradedRing, i: usize, n: i64, sop: &SopData, power: u32) -> Result<CohomologyPiece, ClosureError> {
    check_index(r, sop, i)?;
    let ys = sop.power(power);
    let m = n + ys.delta(i);
    let (a, b) = schenzel_spaces(r, &ys.elements, i, m);
    let common = meet(&a, &b);
    let reps = a.quotient_representatives(&common).expect("same ambient");
    let dim = a.dim() - common.dim();
    let verdict = Verdict::certified(format!("dim [H^{i}]_{n} = {dim}"), true)
        .with_witness("dim", dim as u64)
        .with_witness("raw_degree", m)
        .with_assumptions(&sop.assumptions());
    Ok(CohomologyPiece {
        i,
        n,
        raw_degree: m,
        power,
        dim,
        method: Method::Schenzel,
        representatives: elements(r, m, &reps),
        verdict,
    })
}

/// `[H^i]_n` as `[(y_1..y_i)^* / (y_1..y_i)^lim]` at raw degree `n + N δ_i`.
pub fn thm1_piece(r: &GradedRing, i: usize, n: i64, sop: &SopData, power: u32, te: &TestElement, bounds: &Bounds) -> Result<CohomologyPiece, ClosureError> {
    check_index(r, sop, i)?;
    let ys = sop.power(power);
    let m = n + ys.delta(i);
    let head = &ys.elements[..i];
    let ideal = if i == 0 { IdealHandle::zero("(0)") } else { seq_ideal(r, head) };
    let t = tight_piece(r, &ideal, m, te, bounds);
    let l = limit_piece(r, head, m, bounds.s_max);
    let common = meet(&t.space, &l.space);
    let reps = t.space.quotient_representatives(&common).expect("same ambient");
    let dim = t.space.dim() - common.dim();
    let mut b: Bound = bound(&[("e_max", bounds.e_max as i64), ("s_max", bounds.s_max as i64)]);
    b.insert("power".into(), power as i64);
    let verdict = combine(format!("dim [H^{i}]_{n} = {dim}"), &[t.verdict], b)
        .with_witness("dim", dim as u64)
        .with_witness("raw_degree", m)
        .with_witness("limit_stable_from", l.stable_from as u64)
        .with_assumptions(&sop.assumptions());
    Ok(CohomologyPiece {
        i,
        n,
        raw_degree: m,
        power,
        dim,
        method: Method::Thm1,
        representatives: elements(r, m, &reps),
        verdict,
    })
}

/// Per-stage values of a direct-limit computation of a top-degree piece.
#[derive(Clone, Debug)]
pub struct StagedPiece {
    pub n: i64,
    /// `(k, raw degree n + k δ_d, dim at stage k)`; stages with negative raw
    /// degree are skipped.
    pub stages: Vec<(u32, i64, usize)>,
    pub dim: usize,
    pub verdict: Verdict,
}

/// Stages `k = 1, 2, …` up to `k_max`, extended until two stages with
/// nonnegative raw degree exist.
fn stage_range(n: i64, delta: i64, k_max: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut valid = 0;
    let mut k = 1u32;
    while k <= k_max.max(1) || valid < 2 {
        if n + k as i64 * delta >= 0 {
            out.push(k);
            valid += 1;
        }
        k += 1;
    }
    out
}

fn staged_verdict(claim: String, stages: &[(u32, i64, usize)], k_max: u32) -> Verdict {
    let k = stages.len();
    let last = stages.last().map(|s| s.0).unwrap_or(0);
    let b = bound(&[("k_max", k_max as i64), ("k_used", last as i64)]);
    if k >= 2 && stages[k - 1].2 == stages[k - 2].2 {
        Verdict::new(claim, Status::EvidenceTrue, b).with_witness("stable_from_k", stages[k - 2].0 as u64)
    } else {
        Verdict::new(claim, Status::Inconclusive, b).with_witness("reason", "stage dimensions still changing")
    }
}

/// `[H^d]_n` as the direct limit of `[R/(x_1^k..x_d^k)]_{n + k δ_d}`: the
/// image of stage `k` is `R_m / [(x^k)^lim]_m`.
pub fn top_piece(r: &GradedRing, n: i64, sop: &SopData, bounds: &Bounds) -> Result<StagedPiece, ClosureError> {
    let d = r.dim();
    if sop.len() != d {
        return Err(ClosureError::Precondition(format!("top cohomology needs {d} parameters, got {}", sop.len())));
    }
    let delta = sop.delta(d);
    let mut stages = Vec::new();
    for k in stage_range(n, delta, bounds.k_max) {
        let ys = sop.power(k);
        let m = n + k as i64 * delta;
        let l = limit_piece(r, &ys.elements, m, bounds.s_max);
        stages.push((k, m, r.piece_dim(m) - l.space.dim()));
    }
    let dim = stages.last().map(|s| s.2).unwrap_or(0);
    let verdict = staged_verdict(format!("dim [H^{d}]_{n} = {dim}"), &stages, bounds.k_max)
        .with_bound("s_max", bounds.s_max as i64)
        .with_assumptions(&sop.assumptions());
    Ok(StagedPiece { n, stages, dim, verdict })
}

/// `[(0)^*_{H^d}]_n` as the union of `[Z_k]_{n + k δ_d}`,
/// `Z_k = (x^k)^* / (x^k)^lim`, each embedded in `[H^d]_n`.
pub fn tc0_piece(r: &GradedRing, n: i64, sop: &SopData, te: &TestElement, bounds: &Bounds) -> Result<StagedPiece, ClosureError> {
    let d = r.dim();
    if sop.len() != d {
        return Err(ClosureError::Precondition(format!("(0)* in top cohomology needs {d} parameters, got {}", sop.len())));
    }
    let delta = sop.delta(d);
    let mut stages = Vec::new();
    let mut parts = Vec::new();
    for k in stage_range(n, delta, bounds.k_max) {
        let (z, v) = z_piece(r, &sop.power(k).elements, n + k as i64 * delta, te, bounds);
        stages.push((k, n + k as i64 * delta, z));
        parts.push(v);
    }
    let dim = stages.last().map(|s| s.2).unwrap_or(0);
    let staged = staged_verdict(format!("dim [(0)*_H^{d}]_{n} = {dim}"), &stages, bounds.k_max);
    parts.push(staged.clone());
    let mut verdict = combine(staged.claim.clone(), &parts, staged.bound.clone()).with_assumptions(&sop.assumptions());
    for (k, v) in staged.witness {
        verdict.witness.entry(k).or_insert(v);
    }
    Ok(StagedPiece { n, stages, dim, verdict })
}

/// `dim [(y)^* / (y)^lim]_m` for a full-length sequence.
fn z_piece(r: &GradedRing, ys: &[Polynomial], m: i64, te: &TestElement, bounds: &Bounds) -> (usize, Verdict) {
    let t = tight_piece(r, &seq_ideal(r, ys), m, te, bounds);
    let l = limit_piece(r, ys, m, bounds.s_max);
    let dim = t.space.dim() - meet(&t.space, &l.space).dim();
    (dim, t.verdict)
}

/// All `[H^i]_n` for `n` in `lo..=hi` by one method.
#[derive(Clone, Debug)]
pub struct CohomologyReport {
    pub sop: Vec<String>,
    pub entries: Vec<CohomologyPiece>,
}

#[allow(clippy::too_many_arguments)]
pub fn cohomology(
    r: &GradedRing,
    i: usize,
    lo: i64,
    hi: i64,
    sop: &SopData,
    power: u32,
    method: Method,
    te: Option<&TestElement>,
    bounds: &Bounds,
) -> Result<CohomologyReport, ClosureError> {
    let mut entries = Vec::new();
    for n in lo..=hi {
        let piece = match method {
            Method::Schenzel => schenzel_piece(r, i, n, sop, power)?,
            Method::Thm1 => {
                let te = te.ok_or_else(|| ClosureError::NoTestElement("the tight closure route needs a test element".into()))?;
                thm1_piece(r, i, n, sop, power, te, bounds)?
            }
            Method::TopLimit => {
                if i != r.dim() {
                    return Err(ClosureError::IndexOutOfRange { i, len: sop.len(), d: r.dim() });
                }
                let t = top_piece(r, n, &sop.power(power), bounds)?;
                CohomologyPiece {
                    i,
                    n,
                    raw_degree: t.stages.last().map(|s| s.1).unwrap_or(n),
                    power,
                    dim: t.dim,
                    method,
                    representatives: vec![],
                    verdict: t.verdict,
                }
            }
        };
        entries.push(piece);
    }
    Ok(CohomologyReport { sop: sop.names(), entries })
}

// ---------------------------------------------------------------- checks

/// Triviality of `ρ_i : r ↦ r` and `ψ_i : r ↦ x_{i+1} r` from
/// `(y_1..y_i)`-classes into `(y_1..y_{i+1})^lim`, for `i < d`. Checked on
/// the whole colon piece `(y_1..y_i) : y_{i+1}` and the computed tight piece
/// in every window degree.
#[allow(clippy::too_many_arguments)]
pub fn zero_maps_check(r: &GradedRing, sop: &SopData, power: u32, lo: i64, hi: i64, te: &TestElement, bounds: &Bounds) -> Result<Verdict, ClosureError> {
    let d = r.dim().min(sop.len());
    let ys = sop.power(power);
    let mut checked = 0usize;
    let mut nonzero = Vec::new();
    for i in 0..d {
        let head = &ys.elements[..i];
        let upto = &ys.elements[..=i];
        let next = &ys.elements[i];
        let a = next.degree().unwrap_or(0) as i64;
        for n in lo..=hi {
            let m = n + ys.delta(i);
            let ideal = if i == 0 { IdealHandle::zero("(0)") } else { seq_ideal(r, head) };
            let colon = colon_piece(r, &seq_ideal(r, head), next, m)?;
            let t = tight_piece(r, &ideal, m, te, bounds);
            let space = plus(&colon, &t.space);
            let lim = limit_piece(r, head, m, bounds.s_max);
            if space.dim() > lim.space.dim() {
                nonzero.push(json!({"i": i, "n": n, "dim": space.dim() - meet(&space, &lim.space).dim()}));
            }
            checked += space.dim();
            let rho_target = limit_piece(r, upto, m, bounds.s_max);
            let fail = |map: &str, s: u32| {
                Verdict::new(format!("maps rho_i and psi_i vanish for ({})", names(&ys.elements)), Status::EvidenceFalse, bound(&[("s_max", s as i64)]))
                    .with_witness("map", map)
                    .with_witness("i", i as u64)
                    .with_witness("n", n)
            };
            if !sub(&space, &rho_target.space) {
                return Ok(fail("rho", bounds.s_max));
            }
            let images: Vec<Vec<u32>> = space
                .basis_vectors()
                .iter()
                .map(|v| r.coords(&r.element(m, v).mul(next), m + a))
                .collect();
            let img = Subspace::span(r.field(), r.piece_dim(m + a), &images).expect("piece vectors");
            let psi_target = limit_piece(r, upto, m + a, bounds.s_max);
            if !sub(&img, &psi_target.space) {
                return Ok(fail("psi", bounds.s_max));
            }
        }
    }
    Ok(Verdict::certified(format!("maps rho_i and psi_i vanish for ({})", names(&ys.elements)), true)
        .with_bound("window_lo", lo)
        .with_bound("window_hi", hi)
        .with_witness("checked_dims", checked as u64)
        .with_witness("nonzero_classes", json!(nonzero)))
}

/// `[H^i]_n = 0` for all `n < N_i` iff `I^* ⊆ I^lim + R_{>= δ_i + N_i}`,
/// compared side by side over the window.
#[allow(clippy::too_many_arguments)]
pub fn kodaira_check(r: &GradedRing, i: usize, n_i: i64, sop: &SopData, power: u32, lo: i64, hi: i64, te: &TestElement, bounds: &Bounds) -> Result<Verdict, ClosureError> {
    check_index(r, sop, i)?;
    let mut vanish = true;
    let mut inclusion = true;
    let mut first_h = None;
    let mut first_t = None;
    let mut parts = Vec::new();
    for n in lo..=hi.min(n_i - 1) {
        let h = schenzel_piece(r, i, n, sop, power)?;
        if h.dim > 0 && vanish {
            vanish = false;
            first_h = Some(n);
        }
        let t = thm1_piece(r, i, n, sop, power, te, bounds)?;
        if t.dim > 0 && inclusion {
            inclusion = false;
            first_t = Some(t.raw_degree);
        }
        parts.push(t.verdict);
    }
    let claim = format!("vanishing below {n_i} iff tight closure inclusion, i = {i}");
    let agree = vanish == inclusion;
    let inner = combine(claim.clone(), &parts, Bound::new());
    let status = match (agree, inner.status) {
        (_, Status::Inconclusive) => Status::Inconclusive,
        (true, _) => Status::EvidenceTrue,
        (false, _) => Status::EvidenceFalse,
    };
    let mut v = Verdict::new(claim, status, bound(&[("window_lo", lo), ("window_hi", hi), ("e_max", bounds.e_max as i64)]))
        .with_witness("vanishing", vanish)
        .with_witness("inclusion", inclusion)
        .with_assumptions(&inner.assumptions);
    if let Some(n) = first_h {
        v = v.with_witness("first_nonzero_degree", n);
    }
    if let Some(m) = first_t {
        v = v.with_witness("first_failing_raw_degree", m);
    }
    Ok(v)
}

/// `[H^i]_n = 0` for every `i < d` and window degree `n < -(i-1) t`.
pub fn vanishing_bound_check(r: &GradedRing, sop: &SopData, t: i64, lo: i64, hi: i64) -> Result<Verdict, ClosureError> {
    let d = r.dim();
    let claim = format!("[H^i]_n = 0 for n < -(i-1)*{t}");
    for i in 0..d {
        let limit = -(i as i64 - 1) * t;
        for n in lo..=hi.min(limit - 1) {
            let h = schenzel_piece(r, i, n, sop, 1)?;
            if h.dim > 0 {
                return Ok(Verdict::certified(claim, false)
                    .with_witness("i", i as u64)
                    .with_witness("n", n)
                    .with_witness("dim", h.dim as u64)
                    .with_assumptions(&sop.assumptions()));
            }
        }
    }
    Ok(Verdict::new(claim, Status::EvidenceTrue, bound(&[("window_lo", lo), ("window_hi", hi)])).with_assumptions(&sop.assumptions()))
}

// ---------------------------------------------------------------- main theorem

#[derive(Clone, Debug)]
pub struct MainRow {
    pub l: u32,
    /// `deg x_d`.
    pub a: i64,
    pub injectivity: Verdict,
    pub inclusion_degree: i64,
    pub inclusion_left: usize,
    pub inclusion_right: usize,
    pub inclusion: Verdict,
    pub condition_ii: Verdict,
    pub predicted_nonvanishing: bool,
    pub computed_dim: usize,
    pub consistency: Verdict,
}

#[derive(Clone, Debug)]
pub struct MainTheoremReport {
    pub n: i64,
    pub tc0: StagedPiece,
    pub rows: Vec<MainRow>,
    /// Existence of some `ℓ <= l_max` with `[H^{d-1}]_{n + ℓ a} != 0` when
    /// multiplication by `x_d` is injective.
    pub injective_case: Verdict,
}

/// Two sides of the inclusion `[(y)^*/(y)^lim]_m ⊆ [(ȳ)^*/(ȳ)^lim]_m` where
/// `y = x_1..x_{d-1}, x_d^ℓ` in R and `ȳ = x̄_1..x̄_{d-1}` in `R/(x_d^ℓ)`,
/// at raw degree `m = n + δ_{d-1} + ℓ deg x_d`.
#[derive(Clone, Debug)]
pub struct SectionInclusion {
    pub raw_degree: i64,
    pub left: usize,
    pub right: usize,
    pub verdict: Verdict,
}

fn section_sequence(sop: &SopData, l: u32) -> Vec<Polynomial> {
    let d = sop.len();
    let mut ys = sop.elements.clone();
    ys[d - 1] = ys[d - 1].pow(l as u64);
    ys
}

/// Image of an element of R in a quotient on the same variables.
fn project(rbar: &GradedRing, f: &Polynomial, m: i64) -> Vec<u32> {
    rbar.coords(f, m)
}

#[allow(clippy::too_many_arguments)]
pub fn section_inclusion(r: &GradedRing, rbar: &GradedRing, sop: &SopData, l: u32, n: i64, te: &TestElement, te_bar: &TestElement, bounds: &Bounds) -> SectionInclusion {
    let d = sop.len();
    let ys = section_sequence(sop, l);
    let m = n + ys.iter().filter_map(|y| y.degree()).map(|x| x as i64).sum::<i64>();
    let (left, lv) = z_piece(r, &ys, m, te, bounds);
    let bar: Vec<Polynomial> = ys[..d - 1].iter().map(|y| rbar.nf(y)).collect();
    let (right, rv) = z_piece(rbar, &bar, m, te_bar, bounds);
    let claim = format!("section inclusion at raw degree {m}, l = {l}: {left} <= {right}");
    let inner = combine(claim.clone(), &[lv, rv], Bound::new());
    let status = match (left <= right, inner.status) {
        (_, Status::Inconclusive) => Status::Inconclusive,
        (true, _) => Status::EvidenceTrue,
        (false, _) => Status::EvidenceFalse,
    };
    let verdict = Verdict::new(claim, status, bound(&[("e_max", bounds.e_max as i64), ("s_max", bounds.s_max as i64)]))
        .with_witness("left", left as u64)
        .with_witness("right", right as u64)
        .with_assumptions(&inner.assumptions);
    SectionInclusion {
        raw_degree: m,
        left,
        right,
        verdict,
    }
}

/// Multiplication by `f` from `[H^d]_n` to `[H^d]_{n + deg f}` at stage `k`,
/// where `[H^d]_n` is `R_m / [(x^k)^lim]_m`. Returns the kernel dimension.
fn top_multiplication_kernel(r: &GradedRing, sop: &SopData, k: u32, n: i64, f: &Polynomial, s_max: u32) -> usize {
    let ys = sop.power(k);
    let m = n + ys.delta(ys.len());
    let a = f.degree().unwrap_or(0) as i64;
    let l_here = limit_piece(r, &ys.elements, m, s_max).space;
    let l_there = limit_piece(r, &ys.elements, m + a, s_max).space;
    let b = r.basis(m);
    let images: Vec<Vec<u32>> = b
        .monomials()
        .iter()
        .map(|mono| {
            let v = r.coords(&f.mul_monomial(mono, 1), m + a);
            l_there.reduce(&v).expect("piece vector")
        })
        .collect();
    let pre = Subspace::span(r.field(), b.dim(), &left_kernel(r, &images, r.piece_dim(m + a))).expect("piece vectors");
    pre.dim() - l_here.dim()
}

/// The nonvanishing statements for `[H^{d-1}]` driven by `[(0)^*_{H^d}]_n`.
pub fn main_theorem_check(r: &GradedRing, n: i64, sop: &SopData, te: &TestElement, bounds: &Bounds) -> Result<MainTheoremReport, ClosureError> {
    let d = r.dim();
    if d == 0 || sop.len() != d {
        return Err(ClosureError::Precondition(format!("needs a full system of {d} parameters")));
    }
    let tc0 = tc0_piece(r, n, sop, te, bounds)?;
    if tc0.dim == 0 {
        return Err(ClosureError::Precondition(format!("[(0)*_H^{d}]_{n} is zero")));
    }
    let xd = sop.elements[d - 1].clone();
    let a = sop.degrees[d - 1] as i64;
    let delta = sop.delta(d);
    let k = stage_range(n, delta, bounds.k_max).last().copied().unwrap_or(bounds.k_max);
    let mut rows = Vec::new();
    for l in 1..=bounds.l_max.max(1) {
        let f = nf_pow(r, &xd, l as u64);
        let ker = top_multiplication_kernel(r, sop, k, n, &f, bounds.s_max);
        let injectivity = Verdict::new(
            format!("multiplication by ({xd})^{l} on [H^{d}]_{n} is injective"),
            if ker == 0 { Status::EvidenceTrue } else { Status::EvidenceFalse },
            bound(&[("k", k as i64), ("s_max", bounds.s_max as i64)]),
        )
        .with_witness("kernel_dim", ker as u64);

        let rbar = section(r, &f)?;
        let te_bar = te.image_in(&rbar)?;
        let inc = section_inclusion(r, &rbar, sop, l, n, te, &te_bar, bounds);

        let ys = section_sequence(sop, l);
        let m = inc.raw_degree;
        let lim = limit_piece(r, &ys, m, bounds.s_max).space;
        let bar: Vec<Polynomial> = ys[..d - 1].iter().map(|y| rbar.nf(y)).collect();
        let lim_bar = limit_piece(&rbar, &bar, m, bounds.s_max).space;
        let b = r.basis(m);
        let images: Vec<Vec<u32>> = b
            .monomials()
            .iter()
            .map(|mono| {
                let v = project(&rbar, &Polynomial::monomial(r.poly_ring(), mono.clone(), 1), m);
                lim_bar.reduce(&v).expect("piece vector")
            })
            .collect();
        let preimage = Subspace::span(r.field(), b.dim(), &left_kernel(r, &images, rbar.piece_dim(m))).expect("piece vectors");
        let outside = !sub(&lim, &preimage);
        let condition_ii = Verdict::new(
            format!("[({})^lim]_{m} not inside the preimage of the section limit closure", names(&ys)),
            if outside { Status::EvidenceTrue } else { Status::EvidenceFalse },
            bound(&[("s_max", bounds.s_max as i64)]),
        )
        .with_witness("lim_dim", lim.dim() as u64)
        .with_witness("common_dim", meet(&lim, &preimage).dim() as u64)
        .with_witness("reading", "linearized: strict subspace non-containment");

        let target = n + l as i64 * a;
        let computed = schenzel_piece(r, d - 1, target, sop, 1)?;
        let consistency = Verdict::new(
            format!("[H^{}]_{target} is consistent with condition (ii) for l = {l}", d - 1),
            if outside && computed.dim == 0 { Status::EvidenceFalse } else { Status::EvidenceTrue },
            bound(&[("s_max", bounds.s_max as i64), ("e_max", bounds.e_max as i64)]),
        )
        .with_witness("predicted_nonvanishing", outside)
        .with_witness("computed_dim", computed.dim as u64)
        .with_assumptions(&computed.verdict.assumptions);
        rows.push(MainRow {
            l,
            a,
            injectivity,
            inclusion_degree: inc.raw_degree,
            inclusion_left: inc.left,
            inclusion_right: inc.right,
            inclusion: inc.verdict,
            condition_ii,
            predicted_nonvanishing: outside,
            computed_dim: computed.dim,
            consistency,
        });
    }
    let injective = rows.first().is_some_and(|row| row.injectivity.status.is_true());
    let found = rows.iter().any(|row| row.computed_dim > 0);
    let claim = format!("injectivity on [H^{d}]_{n} predicts [H^{}]_{{n + l a}} != 0 for some l", d - 1);
    let b = bound(&[("l_max", bounds.l_max as i64)]);
    let injective_case = match (injective, found) {
        (false, _) => Verdict::new(claim, Status::EvidenceTrue, b).with_witness("reason", "multiplication is not injective; nothing predicted"),
        (true, true) => Verdict::new(claim, Status::EvidenceTrue, b),
        (true, false) => Verdict::new(claim, Status::Inconclusive, b).with_witness("reason", "no nonvanishing degree up to l_max"),
    };
    Ok(MainTheoremReport { n, tc0, rows, injective_case })
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

    fn fermat() -> GradedRing {
        quotient(7, &["x", "y", "z"], &["x^3+y^3+z^3"], Some(2))
    }

    fn curve() -> GradedRing {
        quotient(7, &["a", "b", "c", "d"], &["a*d-b*c", "b^3-a^2*c", "c^3-b*d^2", "a*c^2-b^2*d"], Some(2))
    }

    fn sop(r: &GradedRing, xs: &[&str]) -> SopData {
        SopData::new(polys(r, xs)).unwrap()
    }

    #[test]
    fn limit_membership_examples() {
        let nodal = quotient(5, &["x", "y"], &["x*y"], Some(1));
        let xs = polys(&nodal, &["x+y"]);
        let v = limit_member(&nodal, &nodal.parse("x").unwrap(), &xs, 6);
        assert_eq!(v.status, Status::EvidenceFalse);
        assert_eq!(v.bound["s_max"], 6);
        assert_eq!(limit_member(&nodal, &nodal.parse("x").unwrap(), &[], 6).status, Status::CertifiedFalse);
        let v = limit_member(&nodal, &nodal.parse("x+y").unwrap(), &xs, 6);
        assert_eq!(v.status, Status::CertifiedTrue);
        assert_eq!(v.witness["s"], 1);
    }

    #[test]
    fn limit_piece_of_regular_sequence_is_the_ideal() {
        let r = GradedRing::polynomial(PrimeField::new(7).unwrap(), &["x", "y"]);
        let xs = polys(&r, &["x", "y"]);
        let ideal = seq_ideal(&r, &xs);
        for n in -1..6 {
            let l = limit_piece(&r, &xs, n, 6);
            assert_eq!(l.space, *ideal_piece(&r, &ideal, n), "degree {n}");
        }
        assert!(limit_piece(&r, &[], 3, 6).space.is_zero());
    }

    #[test]
    fn tight_examples_in_polynomial_and_nodal_rings() {
        let r = GradedRing::polynomial(PrimeField::new(7).unwrap(), &["x", "y"]);
        let te = TestElement::jacobian(&r, 0).unwrap();
        assert!(te.certified);
        let ideal = seq_ideal(&r, &polys(&r, &["x", "y"]));
        let v = tight_member(&r, &r.parse("1").unwrap(), &ideal, &te, &Bounds::default());
        assert_eq!(v.status, Status::CertifiedFalse);
        assert!(v.assumptions.is_empty());
        let t = tight_piece(&r, &ideal, 0, &te, &Bounds::default());
        assert!(t.space.is_zero());

        let nodal = quotient(5, &["x", "y"], &["x*y"], Some(1));
        let c = nodal.parse("x+y").unwrap();
        let te = TestElement::user(&nodal, c.clone(), false).unwrap();
        let ideal = seq_ideal(&nodal, &[c]);
        let bounds = Bounds {
            e_max: 3,
            ..Bounds::default()
        };
        let v = tight_member(&nodal, &nodal.parse("x").unwrap(), &ideal, &te, &bounds);
        assert_eq!(v.status, Status::EvidenceTrue);
        assert_eq!(v.assumptions, vec![TEST_ELEMENT_ASSUMPTION.to_string()]);
    }

    #[test]
    fn fermat_square_of_z_is_in_tight_closure() {
        let r = fermat();
        let te = TestElement::jacobian(&r, 1).unwrap();
        assert_eq!(te.degree(), 2);
        let ideal = seq_ideal(&r, &polys(&r, &["x", "y"]));
        let z2 = r.parse("z^2").unwrap();
        let v = tight_member(&r, &z2, &ideal, &te, &Bounds::default());
        assert_eq!(v.status, Status::EvidenceTrue);
        assert_eq!(v.bound["e_max"], 2);
        let t = tight_piece(&r, &ideal, 2, &te, &Bounds::default());
        assert!(t.space.contains(&r.coords(&z2, 2)).unwrap());
        assert_eq!(t.space.dim(), ideal_piece(&r, &ideal, 2).dim() + 1);
    }

    #[test]
    fn germ_pieces() {
        let r = GradedRing::polynomial(PrimeField::new(7).unwrap(), &["x", "y"]);
        let te = TestElement::jacobian(&r, 0).unwrap();
        let xs = polys(&r, &["x", "y"]);
        for n in 0..4 {
            let (g, _) = germ_piece(&r, &xs, n, &te, &Bounds::default());
            let expect = plus(&ideal_piece(&r, &seq_ideal(&r, &xs[..1]), n), &ideal_piece(&r, &seq_ideal(&r, &xs[1..]), n));
            assert_eq!(g, expect);
            assert!(germ_piece(&r, &xs[..1], n, &te, &Bounds::default()).0.is_zero());
            assert!(germ_piece(&r, &[], n, &te, &Bounds::default()).0.is_zero());
        }
    }

    #[test]
    fn curve_cohomology_by_both_routes() {
        let r = curve();
        let s = sop(&r, &["a", "d"]);
        let te = TestElement::jacobian(&r, 3).unwrap();
        for n in -2..5 {
            let h = schenzel_piece(&r, 1, n, &s, 1).unwrap();
            let t = thm1_piece(&r, 1, n, &s, 1, &te, &Bounds::default()).unwrap();
            let expect = usize::from(n == 1);
            assert_eq!(h.dim, expect, "schenzel degree {n}");
            assert_eq!(t.dim, expect, "thm1 degree {n}");
            assert_eq!(schenzel_piece(&r, 0, n, &s, 1).unwrap().dim, 0);
        }
        let h = schenzel_piece(&r, 1, 1, &s, 2).unwrap();
        assert_eq!(h.dim, 1);
        assert_eq!(h.raw_degree, 3);
        assert!(schenzel_piece(&r, 2, 0, &s, 1).is_err());
    }

    #[test]
    fn top_pieces() {
        let line = GradedRing::polynomial(PrimeField::new(7).unwrap(), &["x"]);
        let s = sop(&line, &["x"]);
        for n in -6..4 {
            let t = top_piece(&line, n, &s, &Bounds::default()).unwrap();
            assert_eq!(t.dim, usize::from(n <= -1), "degree {n}");
            assert_eq!(t.verdict.status, Status::EvidenceTrue);
        }
        let plane = GradedRing::polynomial(PrimeField::new(7).unwrap(), &["x", "y"]);
        let s = sop(&plane, &["x", "y"]);
        for n in -4..3 {
            let t = top_piece(&plane, n, &s, &Bounds::default()).unwrap();
            let expect = if n <= -2 { (-n - 1) as usize } else { 0 };
            assert_eq!(t.dim, expect, "degree {n}");
        }
    }

    #[test]
    fn fermat_tight_closure_of_zero_in_top_cohomology() {
        let r = fermat();
        let s = sop(&r, &["x", "y"]);
        let te = TestElement::jacobian(&r, 1).unwrap();
        for n in -3..=3 {
            let t = tc0_piece(&r, n, &s, &te, &Bounds::default()).unwrap();
            assert_eq!(t.dim, usize::from(n == 0), "degree {n}");
            assert_eq!(t.verdict.status, Status::EvidenceTrue, "degree {n}: {:?}", t.verdict);
            assert!(!t.verdict.assumptions.is_empty());
        }
    }

    #[test]
    fn fermat_main_theorem_rows() {
        let r = fermat();
        let s = sop(&r, &["x", "y"]);
        let te = TestElement::jacobian(&r, 1).unwrap();
        let report = main_theorem_check(&r, 0, &s, &te, &Bounds::default()).unwrap();
        assert_eq!(report.tc0.dim, 1);
        assert_eq!(report.rows.len(), 2);
        for row in &report.rows {
            assert!(row.injectivity.status.is_false(), "{:?}", row.injectivity);
            assert!(!row.predicted_nonvanishing);
            assert_eq!(row.computed_dim, 0);
            assert!(row.consistency.status.is_true());
            assert!(row.inclusion_left <= row.inclusion_right, "{row:?}");
        }
        assert_eq!(report.rows[0].inclusion_left, 1);
    }

    #[test]
    fn regular_ring_precondition_fails() {
        let r = GradedRing::polynomial(PrimeField::new(7).unwrap(), &["x", "y"]);
        let te = TestElement::jacobian(&r, 0).unwrap();
        let s = sop(&r, &["x", "y"]);
        assert!(matches!(main_theorem_check(&r, 0, &s, &te, &Bounds::default()), Err(ClosureError::Precondition(_))));
    }

    #[test]
    fn checks_on_the_curve() {
        let r = curve();
        let s = sop(&r, &["a", "d"]);
        let te = TestElement::jacobian(&r, 3).unwrap();
        let b = Bounds::default();
        assert_eq!(zero_maps_check(&r, &s, 1, -2, 4, &te, &b).unwrap().status, Status::CertifiedTrue);
        assert_eq!(vanishing_bound_check(&r, &s, 1, -6, 8).unwrap().status, Status::EvidenceTrue);
        let k2 = kodaira_check(&r, 1, 2, &s, 1, -3, 4, &te, &b).unwrap();
        assert_eq!(k2.status, Status::EvidenceTrue);
        assert_eq!(k2.witness["vanishing"], false);
        let k1 = kodaira_check(&r, 1, 1, &s, 1, -3, 4, &te, &b).unwrap();
        assert_eq!(k1.status, Status::EvidenceTrue);
        assert_eq!(k1.witness["inclusion"], true);
    }

    #[test]
    fn unmixed_equals_ideal_for_regular_sequence() {
        let r = GradedRing::polynomial(PrimeField::new(5).unwrap(), &["x", "y", "z"]);
        let xs = polys(&r, &["x", "y"]);
        for n in 0..4 {
            let u = unmixed_piece(&r, &xs, &r.parse("z").unwrap(), n).unwrap();
            assert_eq!(u, *ideal_piece(&r, &seq_ideal(&r, &xs), n));
        }
    }
}
