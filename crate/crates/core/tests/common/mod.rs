#![allow(dead_code)]

use std::sync::Arc;

use tclab::{GradedRing, PolyRing, Polynomial, PrimeField, RingPresentation};

pub fn ring(p: u64, names: &[&str], rels: &[&str], dim: Option<usize>) -> GradedRing {
    let f = PrimeField::new(p).unwrap();
    let base = Arc::new(PolyRing::standard(f, names).unwrap());
    let rels = rels.iter().map(|s| Polynomial::parse(s, &base).unwrap()).collect();
    GradedRing::new(RingPresentation::new(base, rels, dim).unwrap()).unwrap()
}

pub fn poly2(p: u64) -> GradedRing {
    ring(p, &["x", "y"], &[], None)
}

pub fn fermat3(p: u64) -> GradedRing {
    ring(p, &["x", "y", "z"], &["x^3+y^3+z^3"], None)
}

pub fn nodalline(p: u64) -> GradedRing {
    ring(p, &["x", "y"], &["x*y"], None)
}

pub fn curve4(p: u64) -> GradedRing {
    ring(p, &["a", "b", "c", "d"], &["a*d-b*c", "b^3-a^2*c", "c^3-b*d^2", "a*c^2-b^2*d"], Some(2))
}

pub fn polys(r: &GradedRing, xs: &[&str]) -> Vec<Polynomial> {
    xs.iter().map(|s| r.parse(s).unwrap()).collect()
}

/// `|n-fold sumset|` of the curve's generator exponents, by brute force.
pub fn curve_sumset(n: u32) -> usize {
    let gens = [(4u32, 0u32), (3, 1), (1, 3), (0, 4)];
    let mut layer = std::collections::BTreeSet::from([(0u32, 0u32)]);
    for _ in 0..n {
        layer = layer.iter().flat_map(|&(a, b)| gens.iter().map(move |&(c, d)| (a + c, b + d))).collect();
    }
    layer.len()
}

/// `[H^1_m]_n` of the curve ring from its normalization `F[s,t]^{(4)}`: the
/// degree-`4n` monomials missing from the `n`-fold sumset.
pub fn curve_h1_oracle(n: i64) -> usize {
    if n < 0 {
        0
    } else {
        (4 * n as usize + 1) - curve_sumset(n as u32)
    }
}
