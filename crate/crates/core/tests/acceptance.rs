//! Acceptance suite. Each test checks one criterion and prints one
//! `PASS`/`FAIL` line; run with `--nocapture` to see them all.

mod common;

use common::{adjacency, build, corpus, random_graph_params, random_regular, seeded_pairs};
use rotmap::adjacency::{
    ProductProperty, adjacency_from_rotation, cartesian_adjacency, check_row_scan_inconsistency,
    product_property_check, rotation_from_adjacency,
};
use rotmap::families::{complete, complete_bipartite, cycle, generalized_petersen, k2};
use rotmap::product::{Block, BlockLayout, assemble};
use rotmap::shift::{build_shift, verify_unitary};
use rotmap::solver::{BacktrackOutcome, is_sound, solve_backtracking, solve_matching};
use rotmap::spectrum::Tolerances;
use rotmap::{Error, RotationMatrix, ViolationKind, cartesian_rotation};

const JACOBI_TOL: f64 = 1e-10;
const SPECTRUM_TOL: f64 = 1e-8;
const BACKTRACK_BUDGET: u64 = 50_000_000;

fn report(id: u32, title: &str, failures: &[String]) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {id:>2} [{status}] {title}");
    for f in failures {
        println!("    {f}");
    }
    assert!(failures.is_empty(), "criterion {id} failed: {failures:#?}");
}

const C5: &str = "2 5\n3 1\n4 2\n5 3\n1 4\n";
const K5: &str = "2 3 4 5\n3 4 5 1\n4 5 1 2\n5 1 2 3\n1 2 3 4\n";
const K33: &str = "4 5 6\n5 6 4\n6 4 5\n1 2 3\n2 3 1\n3 1 2\n";
const GP73: &str = "2 8 7\n3 9 1\n4 10 2\n5 11 3\n6 12 4\n7 13 5\n1 14 6\n\
                    11 1 12\n12 2 13\n13 3 14\n14 4 8\n8 5 9\n9 6 10\n10 7 11\n";
const C4: &str = "2 4\n3 1\n4 2\n1 3\n";
const C6: &str = "2 6\n3 1\n4 2\n5 3\n6 4\n1 5\n";

#[test]
fn criterion_01_printed_family_fixtures() {
    let cases = [
        ("cycle(5)", cycle(5), C5),
        ("complete(5)", complete(5), K5),
        ("complete_bipartite(3)", complete_bipartite(3), K33),
        ("generalized_petersen(7,3)", generalized_petersen(7, 3), GP73),
        ("cycle(4)", cycle(4), C4),
        ("cycle(6)", cycle(6), C6),
    ];
    let failures: Vec<String> = cases
        .into_iter()
        .filter_map(|(name, built, printed)| {
            let text = built.unwrap().to_string();
            (text != printed).then(|| format!("{name}: got {text:?}, printed {printed:?}"))
        })
        .collect();
    report(1, "family generators reproduce the printed matrices byte for byte", &failures);
}

fn torus_layout(b42_row5_col2: usize) -> BlockLayout {
    let b11 = [[2, 6], [3, 1], [4, 2], [5, 3], [6, 4], [1, 5]];
    let b21 = [[8, 12], [9, 7], [10, 8], [11, 9], [12, 10], [7, 11]];
    let b31 = [[14, 18], [15, 13], [16, 14], [17, 15], [18, 16], [13, 17]];
    let b41 = [[20, 24], [21, 19], [22, 20], [23, 21], [24, 22], [19, 23]];
    let b12 = [[7, 19], [8, 20], [9, 21], [10, 22], [11, 23], [12, 24]];
    let b22 = [[13, 1], [14, 2], [15, 3], [16, 4], [17, 5], [18, 6]];
    let b32 = [[19, 7], [20, 8], [21, 9], [22, 10], [23, 11], [24, 12]];
    let b42 = [[1, 13], [2, 14], [3, 15], [4, 16], [5, b42_row5_col2], [6, 18]];
    BlockLayout {
        blocks: vec![
            [Block::from_rows(&b11), Block::from_rows(&b12)],
            [Block::from_rows(&b21), Block::from_rows(&b22)],
            [Block::from_rows(&b31), Block::from_rows(&b32)],
            [Block::from_rows(&b41), Block::from_rows(&b42)],
        ],
    }
}

#[test]
fn criterion_02_torus_reconstruction() {
    let mut failures = Vec::new();
    let product = cartesian_rotation(&cycle(6).unwrap(), &cycle(4).unwrap()).unwrap().map;
    let corrected = assemble(&torus_layout(17)).unwrap();
    let as_printed = assemble(&torus_layout(16)).unwrap();

    if product != corrected {
        failures.push(format!("product differs from the corrected blocks:\n{product}"));
    }
    let differing: Vec<usize> = (0..product.num_darts())
        .filter(|&k| product.as_slice()[k] != as_printed.as_slice()[k])
        .collect();
    // row 23 (cloud 4, vertex 5), column 4 -> flat index 22 * 4 + 3
    if differing != [22 * 4 + 3] {
        failures.push(format!("expected exactly one difference at B_(4,2)[5][2], got flat indices {differing:?}"));
    }
    if !corrected.is_consistent() {
        failures.push("corrected map is not consistent".into());
    }
    let printed_report = as_printed.validate();
    if printed_report.is_consistent || as_printed.is_consistent() {
        failures.push("map with the printed 16 passes the consistency check".into());
    }
    let column4_dups: Vec<_> = printed_report
        .violations
        .iter()
        .filter(|v| v.kind == ViolationKind::DuplicateInColumn)
        .map(|v| (v.at.port, v.target))
        .collect();
    if column4_dups != [(4, 16)] {
        failures.push(format!("printed map should repeat 16 in column 4 only, got {column4_dups:?}"));
    }
    report(2, "C6 x C4 torus matches the printed blocks with B_(4,2)[5][2] = 17", &failures);
}

#[test]
fn criterion_03_consistency_preservation() {
    let failures: Vec<String> = seeded_pairs(0xacc_0003, 100)
        .into_iter()
        .filter_map(|(g, h)| {
            let p = cartesian_rotation(&build(g), &build(h)).unwrap();
            let ok = p.is_consistency_guaranteed() && p.map.validate().is_consistent;
            (!ok).then(|| format!("{g} x {h} is not consistent"))
        })
        .collect();
    report(3, "100 seeded products of consistent maps are consistent", &failures);
}

#[test]
fn criterion_04_adjacency_commutation() {
    let failures: Vec<String> = seeded_pairs(0xacc_0004, 25)
        .into_iter()
        .filter_map(|(g, h)| {
            let (rg, rh) = (build(g), build(h));
            let product = cartesian_rotation(&rg, &rh).unwrap().map;
            // clouds are copies of G indexed by H, so H is the outer Kronecker factor
            let expected = cartesian_adjacency(&adjacency(&rh), &adjacency(&rg));
            (adjacency_from_rotation(&product).unwrap() != expected)
                .then(|| format!("{g} x {h}: adjacency differs from the Kronecker sum"))
        })
        .collect();
    report(4, "25 seeded products commute with the Kronecker-sum adjacency", &failures);
}

#[test]
fn criterion_05_product_properties() {
    let tol = Tolerances { jacobi: JACOBI_TOL, compare: SPECTRUM_TOL };
    let mut failures = Vec::new();
    for (g, h) in seeded_pairs(0xacc_0005, 10) {
        let (a1, a2) = (adjacency(&build(g)), adjacency(&build(h)));
        let r = product_property_check(&a1, &a2, tol).unwrap();
        for p in r.failures() {
            failures.push(format!("{g} x {h}: {} fails ({r:?})", p.describe()));
        }
        let expected_edges = a1.order() * a2.order() * (a1.regular_degree().unwrap() + a2.regular_degree().unwrap()) / 2;
        if r.edge_count.1 != expected_edges || !r.holds(ProductProperty::EdgeCount) {
            failures.push(format!("{g} x {h}: edge count {} != {expected_edges}", r.edge_count.1));
        }
    }
    report(5, "counts exact and spectra additive within 1e-8 for 10 seeded pairs", &failures);
}

#[test]
fn criterion_06_row_scan_inconsistency() {
    let mut failures = Vec::new();
    let mut checked = 0;
    for (name, a) in corpus() {
        let d = a.regular_degree().unwrap();
        if d >= 2 && a.is_connected() {
            checked += 1;
            let scan = rotation_from_adjacency(&a).unwrap();
            if scan.is_consistent() || check_row_scan_inconsistency(&a) != Ok(true) {
                failures.push(format!("{name}: row-scan reading is consistent"));
            }
        }
    }
    let k2_adj = adjacency(&k2());
    if !rotation_from_adjacency(&k2_adj).unwrap().is_consistent() {
        failures.push("K2: row-scan reading should be consistent".into());
    }
    if !matches!(check_row_scan_inconsistency(&k2_adj), Err(Error::UnsupportedDegree { degree: 1, .. })) {
        failures.push("K2: degree 1 should be reported as unsupported".into());
    }
    if checked == 0 {
        failures.push("no corpus graph was checked".into());
    }
    report(6, &format!("row-scan reading is inconsistent on all {checked} connected d>=2 corpus graphs; K2 is the exception"), &failures);
}

#[test]
fn criterion_07_involution_and_round_trips() {
    let mut failures = Vec::new();
    for (name, a) in corpus() {
        let scan = rotation_from_adjacency(&a).unwrap();
        if adjacency_from_rotation(&scan).unwrap() != a {
            failures.push(format!("{name}: A -> rotation -> A changed the matrix"));
        }
        let consistent = solve_matching(&a).unwrap();
        for r in [&scan, &consistent] {
            let table = r.to_full_form().unwrap();
            if !table.darts().all(|x| table.apply(table.apply(x)) == x) {
                failures.push(format!("{name}: full form is not an involution"));
            }
            if &table.to_matrix() != r {
                failures.push(format!("{name}: full form does not reproduce the matrix"));
            }
        }
    }
    report(7, "full forms are involutions and adjacency round trips are exact on the corpus", &failures);
}

#[test]
fn criterion_08_solver_soundness() {
    let mut failures = Vec::new();
    let mut graphs = corpus();
    for (n, d, seed) in random_graph_params() {
        graphs.push((format!("random {d}-regular n={n} seed={seed}"), random_regular(n, d, seed)));
    }
    let mut agreed = 0;
    for (name, a) in &graphs {
        match solve_matching(a) {
            Ok(r) if is_sound(a, &r) => {}
            Ok(_) => failures.push(format!("{name}: matching output is not sound")),
            Err(e) => failures.push(format!("{name}: matching failed: {e}")),
        }
        if a.order() <= 12 {
            match solve_backtracking(a, BACKTRACK_BUDGET) {
                Ok(BacktrackOutcome::Solved(r)) if is_sound(a, &r) => agreed += 1,
                Ok(BacktrackOutcome::Solved(_)) => failures.push(format!("{name}: backtracking output is not sound")),
                Ok(BacktrackOutcome::Exhausted { explored }) => {
                    failures.push(format!("{name}: backtracking exhausted after {explored} nodes"))
                }
                Err(e) => failures.push(format!("{name}: backtracking failed: {e}")),
            }
        }
    }
    report(
        8,
        &format!("matching solver sound on {} graphs; backtracker agrees on all {agreed} with n <= 12", graphs.len()),
        &failures,
    );
}

#[test]
fn criterion_09_shift_properties() {
    let mut failures = Vec::new();
    for (name, a) in corpus() {
        let r = solve_matching(&a).unwrap();
        let s = build_shift(&r).unwrap();
        if s.size() != a.order() * r.degree() || !verify_unitary(&s) || !s.is_graphical() {
            failures.push(format!("{name}: shift has size {} or is not an involutive permutation", s.size()));
        }
    }
    let cubic60 = random_regular(60, 3, 0xb0c4_7ba1);
    let s = build_shift(&solve_matching(&cubic60).unwrap()).unwrap();
    if s.size() != 180 || !verify_unitary(&s) {
        failures.push(format!("3-regular 60-vertex graph: {} darts", s.size()));
    }
    report(9, "shifts are involutive permutations on N*d darts; 60-vertex cubic graph has 180", &failures);
}

#[test]
fn criterion_10_prism_spectra() {
    let mut failures = Vec::new();
    for n in 3..=8 {
        let gp = adjacency(&generalized_petersen(n, 1).unwrap()).spectrum(JACOBI_TOL).unwrap();
        let prism = cartesian_adjacency(&adjacency(&cycle(n).unwrap()), &adjacency(&k2()))
            .spectrum(JACOBI_TOL)
            .unwrap();
        match gp.max_deviation(&prism) {
            Some(dev) if dev <= SPECTRUM_TOL => {}
            dev => failures.push(format!("GP({n},1): deviation {dev:?}")),
        }
    }
    report(10, "GP(n,1) and C_n x K2 have equal spectra within 1e-8 for n = 3..=8", &failures);
}

#[test]
fn printed_fixture_strings_parse_as_maps() {
    // Guard against typos in the fixture text itself.
    for text in [C5, K5, K33, GP73, C4, C6] {
        let rows: Vec<Vec<usize>> = text
            .lines()
            .map(|l| l.split(' ').map(|x| x.parse().unwrap()).collect())
            .collect();
        let r = RotationMatrix::from_rows(&rows).unwrap();
        assert!(r.validate().is_consistent);
    }
}
