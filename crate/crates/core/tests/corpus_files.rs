use std::collections::BTreeSet;
use std::path::PathBuf;

use domlab::domination::SolverConfig;
use domlab::graph::graph6_decode;
use domlab::harness::{expand, replay, run_verification, CorpusSpec, Status, Verdict};
use domlab::recognizers::{is_chordal, is_gc_gwcon_perfect, lemma_perfect_conditions, CommonNeighbour};

fn corpus(name: &str) -> CorpusSpec {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name);
    format!("file:{}", path.display()).parse().unwrap()
}

#[test]
fn file_sizes_by_order() {
    let items = expand(&corpus("connected_upto8.g6")).unwrap();
    let mut counts = [0usize; 9];
    for it in &items {
        counts[it.graph.order()] += 1;
    }
    assert_eq!(counts[1..], [1, 1, 2, 6, 21, 112, 853, 11117]);
    let chordal = expand(&corpus("chordal_connected_upto8.g6")).unwrap();
    assert!(chordal.iter().all(|it| is_chordal(&it.graph)));
    assert_eq!(chordal.len(), items.iter().filter(|it| is_chordal(&it.graph)).count());
}

#[test]
fn checks_that_hold_up_to_eight_vertices() {
    let ids = [
        "oracle-agreement",
        "S2.observation",
        "S2.diameter-lemma",
        "S2.necessary",
        "S2.bounds-2m-n",
        "S3.dh",
        "S3.block",
        "S3.cograph",
        "S3.chordal-perfect",
        "S4.gc-edge-bound",
        "S4.cut-simplicial-edge",
    ];
    let report = run_verification(&ids, Some(&corpus("connected_upto8.g6")), &SolverConfig::default()).unwrap();
    for c in &report.checks {
        assert_eq!(c.status, Status::Pass, "{}: {:?}", c.id, c.counterexamples.first());
    }
}

// Four perfect graphs on eight vertices break the cycle conditions under both
// readings: a 5-cycle with one chord whose endpoints are cut-vertices of H.
#[test]
fn cycle_conditions_fail_on_four_perfect_graphs() {
    let cfg = SolverConfig::default();
    let report = run_verification(&["S3.perfect-lemma"], Some(&corpus("connected_upto8.g6")), &cfg).unwrap();
    let check = &report.checks[0];
    assert_eq!(check.status, Status::Fail);
    let found: BTreeSet<&str> = check.counterexamples.iter().map(|c| c.graph6.as_str()).collect();
    assert_eq!(found, BTreeSet::from(["GHDADg", "GHDAFg", "GHP@Eo", "GHP@Fo"]));
    for cx in &check.counterexamples {
        assert!(matches!(replay("S3.perfect-lemma", cx, &cfg).unwrap(), Verdict::Fails { .. }));
        let g = graph6_decode(&cx.graph6).unwrap();
        assert!(is_gc_gwcon_perfect(&g).unwrap().perfect);
        assert!(!lemma_perfect_conditions(&g, CommonNeighbour::Anywhere).unwrap().holds);
    }
}
