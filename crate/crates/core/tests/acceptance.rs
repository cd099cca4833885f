//! The ten acceptance criteria, one test each. Time limits are pinned in
//! the constants below. Criteria 6 and 10 are ignored: the Singer quotient
//! by the full cycle of order 15 is not a 2-covering, so both fail as
//! stated; run with `--include-ignored` to see the failures.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tits_core::catalog::{self, f2, flag_action, projective_flags};
use tits_core::chamber::{
    find_isomorphism, from_cosets, min_gallery, orbit_quotient, polygon_parameters, rank2_residue, ChamberSystem,
    HomogeneousSpec, TypedGallery,
};
use tits_core::covers::{homotopic, is_covering, lift_gallery, universal_cover, CoveringMap};
use tits_core::coxeter::{braid_neighbours, reduce, CoxeterMatrix, Word, DEFAULT_REWRITE_BUDGET};
use tits_core::groups::{Perm, PermGroup, Subgroup};
use tits_core::verify::{check_star, is_building, is_building_inferred, is_c3_geometry, ll_verdict, w_distance};

const COXETER_ORDER_LIMIT: Duration = Duration::from_secs(5);
const THIN_BUILDINGS_LIMIT: Duration = Duration::from_secs(60);
const LARGE_CHECK_LIMIT: Duration = Duration::from_secs(120);
const THIN_PAIRS_PER_MATRIX: usize = 100;
const MAX_ENTRY: u32 = 8;
const RANDOM_SPECS: usize = 10;
const MAX_SPEC_ORDER: usize = 5000;
const RANDOM_WORDS: usize = 10_000;
const LIFTED_GALLERIES: usize = 1000;
const HOMOTOPY_BUDGET: usize = 100_000;

fn report(n: usize, name: &str, elapsed: Duration) {
    println!("criterion {n:>2} ({name}): PASS in {elapsed:.2?}");
}

/// Every symmetric matrix of rank 1 to 3 with off-diagonal entries in
/// `2..=MAX_ENTRY`.
fn small_matrices() -> Vec<CoxeterMatrix> {
    let mut out = vec![CoxeterMatrix::a(1)];
    for m in 2..=MAX_ENTRY {
        out.push(CoxeterMatrix::dihedral(m));
    }
    for a in 2..=MAX_ENTRY {
        for b in 2..=MAX_ENTRY {
            for c in 2..=MAX_ENTRY {
                out.push(CoxeterMatrix::from_rows(&[vec![1, a, b], vec![a, 1, c], vec![b, c, 1]]).unwrap());
            }
        }
    }
    out
}

#[test]
fn criterion_01_coxeter_orders() {
    let start = Instant::now();
    for (m, order) in [(CoxeterMatrix::a(3), 24), (CoxeterMatrix::c(3), 48), (CoxeterMatrix::h3(), 120)] {
        let t = Instant::now();
        assert_eq!(m.enumerate().unwrap().order(), order, "{m}");
        assert!(t.elapsed() < COXETER_ORDER_LIMIT);
    }
    report(1, "Coxeter orders 24/48/120", start.elapsed());
}

#[test]
fn criterion_02_polar_admissibility() {
    let start = Instant::now();
    assert!(!CoxeterMatrix::h3().is_admissible_polar());
    let mut checked = 0;
    for m in small_matrices() {
        let entries: Vec<u32> = (0..m.rank())
            .flat_map(|i| (0..m.rank()).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| m.get(i, j).unwrap())
            .collect();
        let expected = entries.iter().all(|e| matches!(e, 2 | 3 | 4 | 6));
        assert_eq!(m.is_admissible_polar(), expected, "{m}");
        if entries.contains(&5) {
            assert!(!m.is_admissible_polar());
        }
        checked += 1;
    }
    assert_eq!(checked, 1 + 7 + 343);
    report(2, "polar admissibility, exhaustive rank <= 3", start.elapsed());
}

#[test]
fn criterion_03_thin_buildings() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let finite: Vec<CoxeterMatrix> = small_matrices().into_iter().filter(CoxeterMatrix::is_finite).collect();
    assert!(finite.len() > 30);
    for m in &finite {
        let table = m.enumerate().unwrap();
        let c = table.coxeter_complex();
        assert!(is_building(&c, m).unwrap().building, "{m}");
        for _ in 0..THIN_PAIRS_PER_MATRIX {
            let (u, v) = (rng.gen_range(0..c.len()), rng.gen_range(0..c.len()));
            let d = w_distance(&c, &table, u, v).unwrap();
            assert_eq!(table.index_of(&d), Some(table.multiply(table.inverse(u), v)), "{m}: {u} {v}");
        }
    }
    assert!(start.elapsed() < THIN_BUILDINGS_LIMIT);
    report(3, "thin buildings and delta(u,v) = u^-1 v", start.elapsed());
}

#[test]
fn criterion_04_thick_buildings() {
    let start = Instant::now();
    let fano = catalog::build("fano-flags").unwrap();
    assert_eq!(fano.len(), 21);
    assert_eq!(polygon_parameters(&fano).unwrap(), (Some(6), Some(3)));
    let gq = catalog::build("gq22").unwrap();
    assert_eq!(gq.len(), 45);
    assert_eq!(polygon_parameters(&gq).unwrap(), (Some(8), Some(4)));
    for (sys, ty) in [(&fano, "A2"), (&gq, "C2")] {
        let r = is_building_inferred(sys).unwrap();
        assert!(r.building);
        assert_eq!(r.r#type.as_deref(), Some(ty));
    }
    let a3 = catalog::build("a3-f2").unwrap();
    assert_eq!(a3.len(), 315);
    let t = Instant::now();
    let r = is_building_inferred(&a3).unwrap();
    assert!(t.elapsed() < LARGE_CHECK_LIMIT);
    assert!(r.building);
    assert_eq!(r.r#type.as_deref(), Some("A3"));
    assert_eq!(r.pairs_checked, 315 * 315);
    report(4, "Fano, GQ(2,2), A3(F2) are buildings", start.elapsed());
}

#[test]
fn criterion_05_neumaier_geometry() {
    let start = Instant::now();
    let n = catalog::build("neumaier-a7").unwrap();
    assert_eq!(n.len(), 315);
    let c3 = is_c3_geometry(&n).unwrap();
    assert!(c3.c3, "{c3:?}");
    for plane in n.residues(&[0, 1]) {
        let r = rank2_residue(&n, 0, 1, plane[0] as usize).unwrap();
        assert_eq!(polygon_parameters(&r).unwrap(), (Some(6), Some(3)));
        assert!((0..2).all(|t| r.panels(t).iter().all(|p| p.len() == 3)));
    }
    for point in n.residues(&[1, 2]) {
        assert_eq!(point.len(), 45);
        let r = rank2_residue(&n, 1, 2, point[0] as usize).unwrap();
        assert_eq!(polygon_parameters(&r).unwrap(), (Some(8), Some(4)));
    }
    let ll = ll_verdict(&n).unwrap();
    assert!(!ll.holds);
    let w = ll.assignments[0].witness.as_ref().unwrap();
    assert_eq!(w.point_names, ["p0", "p1"]);
    assert_eq!(w.line_names, ["L012", "L013"]);
    assert!(!is_building_inferred(&n).unwrap().building);
    let spec = catalog::homogeneous("neumaier-a7-cosets").unwrap();
    let star = check_star(&spec, 0, 1).unwrap();
    assert!(!star.holds);
    let sw = star.witness.unwrap();
    let g = Perm::from_images(sw.element).unwrap();
    assert!(spec.group.contains(&g));
    assert!(start.elapsed() < LARGE_CHECK_LIMIT);
    report(5, "Neumaier A7: C3, not (LL), not a building, not star", start.elapsed());
}

fn singer_covering() -> CoveringMap {
    let base = projective_flags(4).unwrap();
    let q = orbit_quotient(&base, &[flag_action(&f2::SINGER4)]).unwrap();
    CoveringMap::new(base, q.system, q.projection).unwrap()
}

#[test]
#[ignore = "the order-15 Singer quotient is not a 2-covering"]
fn criterion_06_singer_round_trip() {
    let start = Instant::now();
    let p = singer_covering();
    assert_eq!(p.base.len(), 21);
    let rep = is_covering(&p);
    assert!(rep.covering, "{:?}", rep.diagnostic);
    let u = universal_cover(&p.base, 0, 1000).unwrap();
    assert!(!u.truncated);
    assert_eq!(u.covering.cover.len(), 315, "universal cover size");
    assert!(find_isomorphism(&u.covering.cover, &p.cover.clone().without_labels()).unwrap().is_some());
    assert_eq!(u.deck.len(), 15);
    assert!(u.regular);
    assert!(start.elapsed() < LARGE_CHECK_LIMIT);
    report(6, "Singer covering round trip", start.elapsed());
}

#[test]
fn criterion_07_buildings_simply_connected() {
    let start = Instant::now();
    let cases = [catalog::build("a3-f2").unwrap(), CoxeterMatrix::c(3).coxeter_complex().unwrap()];
    for sys in &cases {
        let t = Instant::now();
        let u = universal_cover(sys, 0, 1_000_000).unwrap();
        assert!(!u.truncated);
        assert_eq!(u.covering.cover.len(), sys.len());
        assert_eq!(u.deck.len(), 1);
        assert!(is_covering(&u.covering).covering);
        assert!(find_isomorphism(&u.covering.cover, &sys.clone().without_labels()).unwrap().is_some());
        assert!(t.elapsed() < LARGE_CHECK_LIMIT);
    }
    report(7, "universal covers of A3(F2) and C3 are trivial", start.elapsed());
}

fn random_perm(rng: &mut ChaCha8Rng, degree: usize) -> Perm {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for i in (1..degree).rev() {
        images.swap(i, rng.gen_range(0..=i));
    }
    Perm::from_images(images).unwrap()
}

fn random_element(rng: &mut ChaCha8Rng, g: &PermGroup, within: &Subgroup) -> Perm {
    g.element(within.members()[rng.gen_range(0..within.order())] as usize).clone()
}

/// A random chamber-transitive spec. When `confined`, every face group lies
/// in a point stabilizer, so the faces generate at most that stabilizer.
fn random_spec(rng: &mut ChaCha8Rng, confined: bool) -> HomogeneousSpec {
    loop {
        let degree = rng.gen_range(4..=7);
        let gens = vec![random_perm(rng, degree), random_perm(rng, degree)];
        let Ok(g) = PermGroup::from_generators(degree, gens, MAX_SPEC_ORDER) else { continue };
        let stab = g.stabilizer(|p| p.apply(0) == 0).unwrap();
        let pool = if confined { stab.clone() } else { g.whole() };
        let h = if rng.gen_bool(0.5) {
            g.trivial_subgroup()
        } else {
            g.subgroup_generated(&[random_element(rng, &g, &stab)]).unwrap()
        };
        let hgens: Vec<Perm> = h.generator_ids().iter().map(|&i| g.element(i as usize).clone()).collect();
        let rank = rng.gen_range(2..=3);
        let faces = (0..rank)
            .map(|_| {
                let mut fg = hgens.clone();
                fg.push(random_element(rng, &g, &pool));
                g.subgroup_generated(&fg).unwrap()
            })
            .collect();
        return HomogeneousSpec::new(g, h, faces, None).unwrap();
    }
}

#[test]
fn criterion_08_connectivity_iff_generation() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut connected, mut disconnected) = (0, 0);
    for k in 0..RANDOM_SPECS {
        let spec = random_spec(&mut rng, k % 2 == 1);
        assert!(spec.group.order() <= MAX_SPEC_ORDER);
        let faces: Vec<&Subgroup> = spec.faces.iter().collect();
        let generates = spec.group.generates(&faces);
        let join = spec.group.join(&faces).unwrap();
        assert_eq!(generates, join.order() == spec.group.order());
        let sys = from_cosets(&spec).unwrap();
        assert_eq!(sys.is_connected(), generates, "spec {k}");
        if generates {
            connected += 1;
        } else {
            disconnected += 1;
        }
    }
    assert!(connected > 0 && disconnected > 0, "{connected} connected, {disconnected} disconnected");
    report(8, "coset system connected iff faces generate", start.elapsed());
}

#[test]
fn criterion_09_word_problem() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let matrices = [CoxeterMatrix::a(3), CoxeterMatrix::c(3)];
    let tables: Vec<_> = matrices.iter().map(|m| m.enumerate().unwrap()).collect();
    for n in 0..RANDOM_WORDS {
        let (m, t) = (&matrices[n % 2], &tables[n % 2]);
        let len = rng.gen_range(0..=14);
        let w = Word((0..len).map(|_| rng.gen_range(0..3u8)).collect());
        let c = m.canonical(&w).unwrap();
        // two independent evaluations: rewriting and the root representation
        let id = t.evaluate(&w).unwrap();
        assert_eq!(t.element(id), &c, "{m}: {w}");
        let r = reduce(m, &w, DEFAULT_REWRITE_BUDGET).unwrap();
        braid_neighbours(m, &r.0, |v| assert_eq!(m.canonical(&Word(v)).unwrap(), c));
        for s in 0..3 {
            let ws = t.element(t.right_mul(id, s)).length();
            assert!(ws == c.length() + 1 || ws + 1 == c.length());
        }
        let (a, b, x) = (rng.gen_range(0..t.order()), rng.gen_range(0..t.order()), rng.gen_range(0..t.order()));
        assert_eq!(t.multiply(t.multiply(a, b), x), t.multiply(a, t.multiply(b, x)));
        assert_eq!(t.multiply(a, t.inverse(a)), 0);
        assert_eq!(t.multiply(t.inverse(a), a), 0);
    }
    let a3 = &tables[0];
    assert_eq!(a3.reduced_words(a3.longest()).unwrap().len(), 16);
    report(9, "word problem property suite", start.elapsed());
}

/// A random gallery `g` and a gallery with the same ends that differs from
/// it by a detour around a random rank-2 residue at its end.
fn gallery_pair(sys: &ChamberSystem, rng: &mut ChaCha8Rng) -> (TypedGallery, TypedGallery) {
    let walk = |start: usize, steps: usize, types: &[usize], rng: &mut ChaCha8Rng| {
        let mut g = TypedGallery::at(start);
        for _ in 0..steps {
            let t = types[rng.gen_range(0..types.len())];
            let panel = sys.panel(t, g.end());
            let next = panel[rng.gen_range(0..panel.len())];
            g.chambers.push(next);
            g.types.0.push(t as u8);
        }
        g
    };
    let all: Vec<usize> = (0..sys.rank()).collect();
    let g = walk(rng.gen_range(0..sys.len()), rng.gen_range(1..=12), &all, rng);
    let i = rng.gen_range(0..sys.rank());
    let j = (i + rng.gen_range(1..sys.rank())) % sys.rank();
    let out = walk(g.end(), rng.gen_range(1..=6), &[i, j], rng);
    let residue = sys.residue(&[i, j], g.end()).unwrap();
    let local = sys.restrict(&residue.chambers, &[i, j]);
    let pos = |c: usize| residue.chambers.binary_search(&(c as u32)).unwrap();
    let back = min_gallery(&local, pos(out.end()), pos(g.end())).unwrap();
    let back = TypedGallery {
        chambers: back.chambers.iter().map(|&c| residue.chambers[c as usize]).collect(),
        types: Word(back.types.0.iter().map(|&t| [i, j][t as usize] as u8).collect()),
    };
    let detour = g.concat(&out).unwrap().concat(&back).unwrap();
    (g, detour)
}

#[test]
#[ignore = "the order-15 Singer quotient is not a 2-covering"]
fn criterion_10_lifting_suite() {
    let start = Instant::now();
    let p = singer_covering();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..LIFTED_GALLERIES {
        let (g, h) = gallery_pair(&p.base, &mut rng);
        let from = p.fiber(g.start())[0];
        let lg = lift_gallery(&p, &g, from).unwrap();
        assert_eq!(p.project(&lg), g);
        let lh = lift_gallery(&p, &h, from).unwrap();
        assert_eq!(p.project(&lh), h);
        assert!(homotopic(&p.base, &g, &h, HOMOTOPY_BUDGET).unwrap());
        assert_eq!(lg.end(), lh.end(), "homotopic galleries {} and {} lift apart", g.types, h.types);
    }
    report(10, "unique lifting and homotopy lifting", start.elapsed());
}

/// Criterion 10 on a genuine covering: the order-5 Singer quotient.
#[test]
fn lifting_suite_on_the_order_5_quotient() {
    let base = projective_flags(4).unwrap();
    let q = orbit_quotient(&base, &[flag_action(&f2::SINGER4.pow(3))]).unwrap();
    let p = CoveringMap::new(base, q.system, q.projection).unwrap();
    assert!(is_covering(&p).covering);
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..LIFTED_GALLERIES {
        let (g, h) = gallery_pair(&p.base, &mut rng);
        let from = p.fiber(g.start())[rng.gen_range(0..5)];
        let lg = lift_gallery(&p, &g, from).unwrap();
        let lh = lift_gallery(&p, &h, from).unwrap();
        assert_eq!(p.project(&lg), g);
        assert_eq!(p.project(&lh), h);
        assert!(homotopic(&p.base, &g, &h, HOMOTOPY_BUDGET).unwrap());
        assert_eq!(lg.end(), lh.end());
    }
}

/// The Neumaier geometry is simply connected: its universal cover is
/// itself.
#[test]
fn neumaier_geometry_is_simply_connected() {
    let n = catalog::build("neumaier-a7").unwrap();
    let u = universal_cover(&n, 0, 1_000_000).unwrap();
    assert!(!u.truncated);
    assert_eq!(u.covering.cover.len(), 315);
    assert_eq!(u.deck.len(), 1);
}
