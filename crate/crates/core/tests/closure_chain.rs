mod common;

use common::*;
use tclab::closure::{germ_piece, limit_piece, tight_piece, unmixed_piece, Bounds, TestElement};
use tclab::ideal::{ideal_piece, seq_ideal, sop_suggest};
use tclab::{GradedRing, Polynomial};

fn parameter_ideals(sop: &[Polynomial]) -> Vec<Vec<Polynomial>> {
    (1..=sop.len()).map(|i| sop[..i].to_vec()).collect()
}

fn check_chain(r: &GradedRing, sop: &[Polynomial]) {
    let te = TestElement::jacobian(r, 0).unwrap();
    let bounds = Bounds::default();
    for xs in parameter_ideals(sop) {
        let ideal = seq_ideal(r, &xs);
        for n in -6..=8 {
            let base = ideal_piece(r, &ideal, n);
            let lim = limit_piece(r, &xs, n, bounds.s_max).space;
            let tight = tight_piece(r, &ideal, n, &te, &bounds).space;
            assert!(base.is_subspace_of(&lim).unwrap(), "ideal not in limit: {xs:?} n={n}");
            assert!(lim.is_subspace_of(&tight).unwrap(), "limit not in tight: {xs:?} n={n}");
        }
    }
}

#[test]
fn chain_on_poly2() {
    let r = poly2(7);
    check_chain(&r, &polys(&r, &["x", "y"]));
}

#[test]
fn chain_on_fermat3() {
    let r = fermat3(7);
    check_chain(&r, &polys(&r, &["x", "y"]));
    check_chain(&r, &sop_suggest(&r, &[1, 1], 3, 8).unwrap().elements);
}

#[test]
fn chain_on_nodalline() {
    let r = nodalline(7);
    check_chain(&r, &polys(&r, &["x+y"]));
}

#[test]
fn chain_on_curve4() {
    let r = curve4(7);
    check_chain(&r, &polys(&r, &["a", "d"]));
    check_chain(&r, &sop_suggest(&r, &[1, 1], 5, 8).unwrap().elements);
}

#[test]
fn limit_closure_is_the_ideal_on_regular_and_cm_rings() {
    // Cohen-Macaulay: parameter ideals are limit-closed
    for (r, xs) in [(poly2(5), vec!["x", "y"]), (fermat3(7), vec!["x", "y"])] {
        let xs = polys(&r, &xs);
        for i in 1..=xs.len() {
            let ideal = seq_ideal(&r, &xs[..i]);
            for n in 0..=6 {
                assert_eq!(limit_piece(&r, &xs[..i], n, 6).space, *ideal_piece(&r, &ideal, n));
            }
        }
    }
}

#[test]
fn curve_limit_closure_picks_up_the_missing_monomial() {
    // not Cohen-Macaulay, so some parameter ideal is not limit-closed
    let r = curve4(7);
    let xs = polys(&r, &["a", "d"]);
    let ideal = seq_ideal(&r, &xs);
    let gap: Vec<i64> = (0..=6)
        .filter(|&n| limit_piece(&r, &xs, n, 6).space.dim() != ideal_piece(&r, &ideal, n).dim())
        .collect();
    assert_eq!(gap, vec![2]);
}

#[test]
fn germ_plus_ideal_is_limit() {
    for r in [poly2(7), fermat3(7)] {
        let xs = polys(&r, &["x", "y"]);
        let te = TestElement::jacobian(&r, 0).unwrap();
        let bounds = Bounds::default();
        let ideal = seq_ideal(&r, &xs);
        for n in -2..=6 {
            let (germ, _) = germ_piece(&r, &xs, n, &te, &bounds);
            let lhs = germ.sum(&ideal_piece(&r, &ideal, n)).unwrap();
            assert_eq!(lhs, limit_piece(&r, &xs, n, bounds.s_max).space, "n={n}");
        }
    }
}

#[test]
fn unmixed_hull_contains_the_ideal() {
    let r = curve4(7);
    let xs = polys(&r, &["a"]);
    let next = r.parse("d").unwrap();
    let ideal = seq_ideal(&r, &xs);
    for n in 0..=6 {
        let u = unmixed_piece(&r, &xs, &next, n).unwrap();
        assert!(ideal_piece(&r, &ideal, n).is_subspace_of(&u).unwrap());
    }
}
