mod common;

use common::*;
use tclab::closure::{schenzel_piece, tc0_piece, thm1_piece, top_piece, vanishing_bound_check, zero_maps_check, Bounds, TestElement};
use tclab::ideal::{sop_suggest, SopData};
use tclab::{GradedRing, Status};

fn dims(r: &GradedRing, sop: &SopData, i: usize, power: u32) -> Vec<usize> {
    (-6..=8).map(|n| schenzel_piece(r, i, n, sop, power).unwrap().dim).collect()
}

#[test]
fn curve_h1_matches_the_normalization_count() {
    let r = curve4(7);
    for sop in [SopData::new(polys(&r, &["a", "d"])).unwrap(), sop_suggest(&r, &[1, 1], 11, 8).unwrap()] {
        for n in -6..=8 {
            assert_eq!(schenzel_piece(&r, 1, n, &sop, 1).unwrap().dim, curve_h1_oracle(n), "n={n}");
        }
    }
}

#[test]
fn curve_hilbert_function_is_the_sumset_size() {
    let r = curve4(7);
    for n in 0..=8 {
        assert_eq!(r.piece_dim(n), curve_sumset(n as u32));
    }
}

#[test]
fn oracle_values() {
    let got: Vec<usize> = (-1..=4).map(curve_h1_oracle).collect();
    assert_eq!(got, vec![0, 0, 1, 0, 0, 0]);
}

#[test]
fn routes_agree_below_the_top() {
    let bounds = Bounds::default();
    for (r, sop) in [(poly2(7), vec!["x", "y"]), (fermat3(7), vec!["x", "y"]), (curve4(7), vec!["a", "d"])] {
        let sop = SopData::new(polys(&r, &sop)).unwrap();
        let te = TestElement::jacobian(&r, 0).unwrap();
        for i in 0..r.dim() {
            for power in [1, 2] {
                for n in -6..=8 {
                    let a = schenzel_piece(&r, i, n, &sop, power).unwrap();
                    let b = thm1_piece(&r, i, n, &sop, power, &te, &bounds).unwrap();
                    assert_eq!(a.dim, b.dim, "i={i} n={n} N={power}");
                }
            }
        }
    }
}

#[test]
fn dims_do_not_depend_on_the_sop() {
    for r in [fermat3(7), curve4(7)] {
        let s1 = sop_suggest(&r, &[1, 1], 1, 8).unwrap();
        let s2 = sop_suggest(&r, &[1, 1], 2, 8).unwrap();
        assert_ne!(s1.elements, s2.elements);
        for i in 0..r.dim() {
            assert_eq!(dims(&r, &s1, i, 1), dims(&r, &s2, i, 1));
        }
    }
}

#[test]
fn dims_do_not_depend_on_the_power() {
    let r = curve4(7);
    let sop = SopData::new(polys(&r, &["a", "d"])).unwrap();
    for i in 0..2 {
        assert_eq!(dims(&r, &sop, i, 1), dims(&r, &sop, i, 2));
    }
}

#[test]
fn fermat_is_cohen_macaulay() {
    let r = fermat3(7);
    let sop = SopData::new(polys(&r, &["x", "y"])).unwrap();
    assert!(dims(&r, &sop, 0, 1).iter().all(|&d| d == 0));
    assert!(dims(&r, &sop, 1, 1).iter().all(|&d| d == 0));
}

#[test]
fn fermat_tc0_is_the_socle_degree() {
    let r = fermat3(7);
    let sop = SopData::new(polys(&r, &["x", "y"])).unwrap();
    let te = TestElement::jacobian(&r, 0).unwrap();
    let bounds = Bounds::default();
    for n in -3..=3 {
        let p = tc0_piece(&r, n, &sop, &te, &bounds).unwrap();
        assert_eq!(p.dim, usize::from(n == 0), "n={n}");
        let dims: Vec<usize> = p.stages.iter().filter(|s| s.0 >= 2).map(|s| s.2).collect();
        assert!(dims.windows(2).all(|w| w[0] == w[1]), "n={n} {:?}", p.stages);
        assert_eq!(p.verdict.status, Status::EvidenceTrue);
    }
}

#[test]
fn top_cohomology_of_the_plane() {
    // [H^2(F[x,y])]_n has dimension n_neg - 1 for n <= -2
    let r = poly2(7);
    let sop = SopData::new(polys(&r, &["x", "y"])).unwrap();
    let bounds = Bounds { k_max: 6, ..Bounds::default() };
    for n in -4..=2 {
        let expect = if n <= -2 { (-n - 1) as usize } else { 0 };
        assert_eq!(top_piece(&r, n, &sop, &bounds).unwrap().dim, expect, "n={n}");
    }
}

#[test]
fn curve_maps_vanish_and_bound_holds() {
    let r = curve4(7);
    let sop = SopData::new(polys(&r, &["a", "d"])).unwrap();
    let te = TestElement::jacobian(&r, 0).unwrap();
    let v = zero_maps_check(&r, &sop, 1, -6, 8, &te, &Bounds::default()).unwrap();
    assert_eq!(v.status, Status::CertifiedTrue);
    assert!(vanishing_bound_check(&r, &sop, 1, -6, 8).unwrap().status.is_true());
    let f = fermat3(7);
    let fsop = SopData::new(polys(&f, &["x", "y"])).unwrap();
    assert!(vanishing_bound_check(&f, &fsop, 1, -6, 8).unwrap().status.is_true());
}
