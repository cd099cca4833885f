use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tits_core::catalog::{self, f2, flag_action, projective_flags};
use tits_core::chamber::{min_gallery, quotient, ChamberSystem, Quotient, TypedGallery};
use tits_core::covers::{
    deck_transformations, homotopy_search, is_covering, lift_gallery, universal_cover, CoveringMap, Homotopy,
};
use tits_core::coxeter::{CoxeterGroupTable, CoxeterMatrix, Word};
use tits_core::groups::Perm;

/// The element of S6 = W(A5) sending `i` to `p[i]`, as a table index.
fn element(table: &CoxeterGroupTable, p: [usize; 6]) -> usize {
    let mut p = p.to_vec();
    let mut letters = Vec::new();
    loop {
        let mut swapped = false;
        for i in 0..5 {
            if p[i] > p[i + 1] {
                p.swap(i, i + 1);
                letters.push(i as u8);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    letters.reverse();
    table.evaluate(&Word(letters)).unwrap()
}

fn left(table: &CoxeterGroupTable, w: usize) -> Perm {
    Perm::from_images((0..table.order()).map(|c| table.multiply(w, c) as u32).collect()).unwrap()
}

/// `X/K -> X/D` for the A5 Coxeter complex `X`, `D = S3` acting regularly on
/// six letters and `K` one of its non-normal subgroups of order 2.
fn s3_quotients() -> (ChamberSystem, Quotient, Quotient) {
    let table = CoxeterMatrix::a(5).enumerate().unwrap();
    let x = table.coxeter_complex();
    let a = left(&table, element(&table, [1, 2, 0, 4, 5, 3]));
    let b = left(&table, element(&table, [3, 5, 4, 0, 2, 1]));
    let d = quotient(&x, &[a, b.clone()]).unwrap();
    let k = quotient(&x, &[b]).unwrap();
    (x, d, k)
}

#[test]
fn non_regular_covering() {
    let (x, d, k) = s3_quotients();
    assert_eq!(x.len(), 720);
    assert_eq!(d.system.len(), 120);
    assert_eq!(k.system.len(), 360);
    let mut map = vec![0u32; k.system.len()];
    for c in 0..x.len() {
        map[k.projection[c] as usize] = d.projection[c];
    }
    let p = CoveringMap::new(k.system.clone(), d.system.clone(), map).unwrap();
    assert!(is_covering(&p).covering);
    assert!(p.fiber_sizes().iter().all(|&n| n == 3));
    let (deck, regular) = deck_transformations(&p).unwrap();
    assert_eq!(deck.len(), 1);
    assert!(!regular);

    let u = universal_cover(&d.system, 0, 10_000).unwrap();
    assert_eq!(u.covering.cover.len(), 720);
    assert_eq!(u.deck.len(), 6);
    assert!(u.regular);
}

#[test]
fn order_5_singer_quotient_is_covered_by_a3() {
    let q = catalog::build("singer5-quotient").unwrap();
    let u = universal_cover(&q, 0, 10_000).unwrap();
    assert!(!u.truncated);
    assert_eq!(u.covering.cover.len(), 315);
    assert_eq!(u.fiber_size(), 5);
    assert_eq!(u.deck.len(), 5);
    assert!(u.regular);
}

#[test]
fn full_singer_quotient_is_not_a_covering() {
    let base = projective_flags(4).unwrap();
    let q = tits_core::chamber::orbit_quotient(&base, &[flag_action(&f2::SINGER4)]).unwrap();
    assert_eq!(q.system.len(), 21);
    let p = CoveringMap::new(base, q.system.clone(), q.projection).unwrap();
    let rep = is_covering(&p);
    assert!(!rep.covering);
    assert!(rep.diagnostic.unwrap().contains("[1, 3]"));
    let u = universal_cover(&q.system, 0, 10_000).unwrap();
    assert_eq!(u.covering.cover.len(), 105);
    assert_eq!(u.deck.len(), 5);
}

#[test]
fn lifts_project_back() {
    let base = projective_flags(4).unwrap();
    let sigma = flag_action(&f2::SINGER4.pow(3));
    let q = quotient(&base, &[sigma]).unwrap();
    let p = CoveringMap::new(base, q.system, q.projection).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..200 {
        let mut g = TypedGallery::at(rng.gen_range(0..p.base.len()));
        for _ in 0..rng.gen_range(0..15) {
            let t = rng.gen_range(0..3);
            let panel = p.base.panel(t, g.end());
            g.chambers.push(panel[rng.gen_range(0..panel.len())]);
            g.types.0.push(t as u8);
        }
        for &from in &p.fiber(g.start()) {
            let l = lift_gallery(&p, &g, from).unwrap();
            assert_eq!(l.start(), from);
            assert_eq!(p.project(&l), g);
        }
    }
}

#[test]
fn lift_from_wrong_fiber_is_rejected() {
    let p = CoveringMap::identity(&catalog::build("fano-flags").unwrap());
    let g = TypedGallery::at(0);
    assert!(lift_gallery(&p, &g, 1).is_err());
}

#[test]
fn homotopy_distinguishes_loops_in_a_quotient() {
    // a loop in X/<sigma^3> whose lift is not closed
    let q = catalog::build("singer5-quotient").unwrap();
    let u = universal_cover(&q, 0, 10_000).unwrap();
    let p = &u.covering;
    let fiber = p.fiber(0);
    let lifted = min_gallery(&p.cover, fiber[0], fiber[1]).unwrap();
    let lp = p.project(&lifted);
    assert_eq!(lp.start(), lp.end());
    let trivial = TypedGallery::at(0);
    assert_eq!(homotopy_search(&q, &lp, &trivial, 100_000), Homotopy::Distinct);
}
