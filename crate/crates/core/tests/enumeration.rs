use std::collections::BTreeSet;

use alcove::galleries::{
    brute_force_positively_folded, enumerate_positively_folded, positively_folded_endpoints,
};
use alcove::*;

fn complex(kind: &str) -> AffineComplex {
    AffineComplex::new(RootSystem::construct(kind.parse().unwrap()).unwrap())
}

fn minimal_type(cx: &AffineComplex, x: &[i64]) -> GalleryType {
    let g = cx.minimal_gallery(&Vector::from_ints(x)).unwrap();
    cx.gallery_type(&g).unwrap()
}

fn endpoints(gs: &BTreeSet<Gallery>) -> BTreeSet<Vector> {
    gs.iter().map(|g| g.target.clone()).collect()
}

#[test]
fn a1_endpoints() {
    let cx = complex("A1");
    let t = minimal_type(&cx, &[1]);
    let gs = enumerate_positively_folded(&cx, &t).unwrap();
    assert_eq!(gs.len(), 3);
    let want: BTreeSet<Vector> = [-1, 0, 1]
        .iter()
        .map(|&k| Vector::from_ints(&[k]))
        .collect();
    assert_eq!(endpoints(&gs), want);
}

#[test]
fn a2_adjoint_has_seven_endpoints() {
    let cx = complex("A2");
    let t = minimal_type(&cx, &[1, 1]);
    let (ends, stats) = positively_folded_endpoints(&cx, &t).unwrap();
    assert_eq!(ends.len(), 7);
    let gs = enumerate_positively_folded(&cx, &t).unwrap();
    assert_eq!(gs.len() as u64, stats.galleries);
    assert_eq!(endpoints(&gs), ends);
}

#[test]
fn degenerate_type_has_one_gallery() {
    for kind in ["A1", "A2", "G2"] {
        let cx = complex(kind);
        let t = minimal_type(&cx, &vec![0; cx.rank()]);
        let gs = enumerate_positively_folded(&cx, &t).unwrap();
        assert_eq!(gs.len(), 1);
        assert!(gs.iter().next().unwrap().is_empty());
    }
}

#[test]
fn pruned_search_matches_brute_force() {
    let cases: [(&str, &[i64]); 7] = [
        ("A1", &[2]),
        ("A2", &[1, 1]),
        ("A2", &[2, 1]),
        ("B2", &[1, 1]),
        ("C2", &[2, 2]),
        ("G2", &[2, 1]),
        ("A3", &[1, 1, 1]),
    ];
    for (kind, x) in cases {
        let cx = complex(kind);
        let t = minimal_type(&cx, x);
        let fast = enumerate_positively_folded(&cx, &t).unwrap();
        let slow = brute_force_positively_folded(&cx, &t).unwrap();
        assert_eq!(fast, slow, "{kind} {x:?}");
        for g in &fast {
            cx.validate(g).unwrap();
            assert_eq!(cx.gallery_type(g).unwrap(), t);
        }
    }
}

#[test]
fn endpoints_lie_in_a_type_and_within_distance() {
    for (kind, x) in [("A2", vec![2, 2]), ("B2", vec![2, 3]), ("G2", vec![3, 2])] {
        let cx = complex(kind);
        let lam = Vector::from_ints(&x);
        let t = minimal_type(&cx, &x);
        let (ends, _) = positively_folded_endpoints(&cx, &t).unwrap();
        let a = a_type_set(cx.root_system(), &lam).unwrap();
        let bound = cx.gallery_distance(&Vector::zero(cx.rank()), &lam).unwrap();
        for y in &ends {
            assert!(a.contains(y), "{kind} {y}");
            assert!(cx.gallery_distance(&Vector::zero(cx.rank()), y).unwrap() <= bound);
        }
    }
}

#[test]
fn rejects_bad_types() {
    let cx = complex("A2");
    let mut t = minimal_type(&cx, &[1, 1]);
    t.panel_types.push(7);
    assert!(enumerate_positively_folded(&cx, &t).is_err());
    let mut t = minimal_type(&cx, &[1, 1]);
    t.source_type = VertexType(1);
    assert!(positively_folded_endpoints(&cx, &t).is_err());
}

#[test]
fn records_round_trip() {
    let cx = complex("B2");
    let t = minimal_type(&cx, &[1, 1]);
    for g in enumerate_positively_folded(&cx, &t).unwrap() {
        let line = GalleryRecord::from_gallery(&cx, &g).to_string();
        let rec: GalleryRecord = line.parse().unwrap();
        assert_eq!(rec.to_gallery(&cx, &t).unwrap(), g);
    }
}
