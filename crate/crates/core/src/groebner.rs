//! Degree-truncated Buchberger for homogeneous ideals in weighted graded-lex
//! order. Normal forms of degree-n elements only need the basis up to
//! degree n, so the basis is extended lazily with [`Groebner::ensure`].

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::poly::{Monomial, PolyRing, Polynomial};

/// Immutable view of a basis that is complete up to `complete_to`
/// (`None` once no pairs or generators remain, i.e. complete in all degrees).
#[derive(Clone, Debug)]
pub struct GbSnapshot {
    pub basis: Vec<Polynomial>,
    pub complete_to: Option<u32>,
}

impl GbSnapshot {
    pub fn covers(&self, degree: u32) -> bool {
        self.complete_to.is_none_or(|d| degree <= d)
    }

    /// Fully reduced normal form. Divisors are tried in basis order, which
    /// does not affect the result because the basis is Gröbner up to the
    /// degrees involved.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        reduce_with(&self.basis, f)
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|g| g.leading().expect("nonzero").0.clone()).collect()
    }
}

pub(crate) fn reduce_with(basis: &[Polynomial], f: &Polynomial) -> Polynomial {
    let ring = f.ring().clone();
    let field = ring.field();
    let lts: Vec<&Monomial> = basis.iter().map(|g| g.leading().expect("nonzero").0).collect();
    let mut work = f.terms().clone();
    let mut done: Vec<(Monomial, u32)> = Vec::new();
    while let Some((m, c)) = work.pop_last() {
        match lts.iter().position(|lt| lt.divides(&m)) {
            None => done.push((m, c)),
            Some(k) => {
                let shift = lts[k].quotient_of(&m);
                let factor = field.neg(c);
                for (t, &tc) in basis[k].terms().iter().rev().skip(1) {
                    let mono = t.mul(&shift);
                    let add = field.mul(factor, tc);
                    match work.entry(mono) {
                        std::collections::btree_map::Entry::Vacant(v) => {
                            v.insert(add);
                        }
                        std::collections::btree_map::Entry::Occupied(mut o) => {
                            let s = field.add(*o.get(), add);
                            if s == 0 {
                                o.remove();
                            } else {
                                *o.get_mut() = s;
                            }
                        }
                    }
                }
            }
        }
    }
    Polynomial::from_terms(&ring, done)
}

fn monic(f: &Polynomial) -> Polynomial {
    let (_, c) = f.leading().expect("nonzero");
    f.scale(f.field().inv(c).expect("nonzero"))
}

#[derive(Debug)]
pub struct Groebner {
    ring: Arc<PolyRing>,
    basis: Vec<Polynomial>,
    pending: BTreeMap<u32, Vec<Polynomial>>,
    pairs: BTreeMap<u32, Vec<(usize, usize)>>,
    done_to: Option<u32>,
    snapshot: Arc<GbSnapshot>,
}

impl Groebner {
    /// Generators must be homogeneous; zero generators are ignored.
    pub fn new(ring: &Arc<PolyRing>, gens: &[Polynomial]) -> Self {
        let mut pending: BTreeMap<u32, Vec<Polynomial>> = BTreeMap::new();
        for g in gens {
            if let Some(d) = g.degree() {
                pending.entry(d).or_default().push(g.clone());
            } else {
                debug_assert!(g.is_zero(), "generators must be homogeneous");
            }
        }
        let mut gb = Self {
            ring: ring.clone(),
            basis: Vec::new(),
            pending,
            pairs: BTreeMap::new(),
            done_to: None,
            snapshot: Arc::new(GbSnapshot {
                basis: Vec::new(),
                complete_to: Some(0),
            }),
        };
        gb.refresh_snapshot();
        gb
    }

    fn fully_complete(&self) -> bool {
        self.pending.is_empty() && self.pairs.is_empty()
    }

    fn refresh_snapshot(&mut self) {
        let complete_to = if self.fully_complete() { None } else { Some(self.done_to.unwrap_or(0)) };
        self.snapshot = Arc::new(GbSnapshot {
            basis: self.basis.clone(),
            complete_to,
        });
    }

    pub fn snapshot(&self) -> Arc<GbSnapshot> {
        self.snapshot.clone()
    }

    fn add_element(&mut self, g: Polynomial) {
        let g = monic(&g);
        let lt = g.leading().expect("nonzero").0.clone();
        let w = self.ring.weights().to_vec();
        let idx = self.basis.len();
        for (j, h) in self.basis.iter().enumerate() {
            let lh = h.leading().expect("nonzero").0;
            if lh.coprime(&lt) {
                continue;
            }
            let l = lh.lcm(&lt, &w);
            self.pairs.entry(l.degree()).or_default().push((j, idx));
        }
        self.basis.push(g);
    }

    fn spoly(&self, i: usize, j: usize) -> Polynomial {
        let w = self.ring.weights();
        let (a, b) = (&self.basis[i], &self.basis[j]);
        let la = a.leading().expect("nonzero").0;
        let lb = b.leading().expect("nonzero").0;
        let l = la.lcm(lb, w);
        a.mul_monomial(&la.quotient_of(&l), 1).sub(&b.mul_monomial(&lb.quotient_of(&l), 1))
    }

    /// Make the basis complete for every degree `<= degree`.
    pub fn ensure(&mut self, degree: u32) {
        if self.snapshot.covers(degree) {
            return;
        }
        let start = self.done_to.map_or(0, |d| d + 1);
        for d in start..=degree {
            if self.fully_complete() {
                break;
            }
            let mut todo: Vec<Polynomial> = self.pending.remove(&d).unwrap_or_default();
            if let Some(ps) = self.pairs.remove(&d) {
                for (i, j) in ps {
                    todo.push(self.spoly(i, j));
                }
            }
            for f in todo {
                let r = reduce_with(&self.basis, &f);
                if !r.is_zero() {
                    self.add_element(r);
                }
            }
            self.done_to = Some(d);
        }
        if self.done_to.is_none_or(|d| d < degree) {
            self.done_to = Some(degree);
        }
        self.refresh_snapshot();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfp::PrimeField;

    fn ring(p: u64, names: &[&str]) -> Arc<PolyRing> {
        Arc::new(PolyRing::standard(PrimeField::new(p).unwrap(), names).unwrap())
    }

    #[test]
    fn hypersurface_basis_is_the_relation() {
        let r = ring(7, &["x", "y", "z"]);
        let f = Polynomial::parse("x^3+y^3+z^3", &r).unwrap();
        let mut gb = Groebner::new(&r, std::slice::from_ref(&f));
        gb.ensure(20);
        let snap = gb.snapshot();
        assert_eq!(snap.basis.len(), 1);
        assert_eq!(snap.complete_to, None);
        let x4 = Polynomial::parse("x^4", &r).unwrap();
        assert_eq!(snap.reduce(&x4).to_string(), "6*x*y^3 + 6*x*z^3");
    }

    #[test]
    fn toric_curve_basis_reduces_members_to_zero() {
        let r = ring(7, &["a", "b", "c", "d"]);
        let rels: Vec<Polynomial> = ["a*d - b*c", "b^3 - a^2*c", "c^3 - b*d^2", "a*c^2 - b^2*d"]
            .iter()
            .map(|s| Polynomial::parse(s, &r).unwrap())
            .collect();
        let mut gb = Groebner::new(&r, &rels);
        gb.ensure(12);
        let snap = gb.snapshot();
        for g in &rels {
            assert!(snap.reduce(g).is_zero());
        }
        let combo = rels[0].mul(&Polynomial::parse("a^2 + c*d", &r).unwrap()).add(&rels[2].mul(&Polynomial::parse("b", &r).unwrap()));
        assert!(snap.reduce(&combo).is_zero());
        assert!(!snap.reduce(&Polynomial::parse("b*c", &r).unwrap()).is_zero());
    }
}
