//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use domlab::domination::{all_minimum_sets_oracle, gamma_gap, DominationKind, SolverConfig};
use domlab::gadgets::{fig_example_not_perfect, gap_gadget, h_prime_a, h_star};
use domlab::graph::vertex_roles;
use domlab::harness::{run_verification, CorpusSpec, Status, VerificationReport};
use domlab::recognizers::{contains_induced, is_gc_gwcon_perfect, lemma_perfect_conditions, CommonNeighbour};
use domlab::VertexSet;

const GAP_LIMIT: Duration = Duration::from_secs(10);
const EDGE_GADGET_LIMIT: Duration = Duration::from_secs(30);
const BOUNDS_LIMIT: Duration = Duration::from_secs(5 * 60);
const INTERPOLATION_LIMIT: Duration = Duration::from_secs(10 * 60);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn file_corpus(name: &str) -> CorpusSpec {
    format!("file:{}", data(name).display()).parse().expect("file corpus parses")
}

fn verify(ids: &[&str], corpus: Option<&CorpusSpec>) -> Result<VerificationReport, String> {
    run_verification(ids, corpus, &SolverConfig::default()).map_err(|e| e.to_string())
}

/// Every listed theorem must PASS with at least one applicable graph.
fn all_pass(report: &VerificationReport) -> Outcome {
    let mut parts = Vec::new();
    for c in &report.checks {
        if c.status != Status::Pass {
            let first = c.counterexamples.first().map(|x| format!("{} {}", x.graph6, x.detail)).unwrap_or_default();
            return Err(format!("{} {:?} on {}: {}", c.id, c.status, c.corpus, first));
        }
        parts.push(format!("{} {}/{}", c.id, c.stats.holds, c.stats.graphs));
    }
    Ok(parts.join(", "))
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    if elapsed < limit {
        Ok(())
    } else {
        Err(format!("{what} took {elapsed:.1?}, limit {limit:?}"))
    }
}

fn ac1_gap_gadget() -> Outcome {
    let cfg = SolverConfig::default();
    let mut parts = Vec::new();
    for k in [6, 7] {
        let g = gap_gadget(k).map_err(|e| e.to_string())?.graph;
        let t0 = Instant::now();
        let gap = gamma_gap(&g, &cfg).map_err(|e| e.to_string())?;
        within(t0.elapsed(), GAP_LIMIT, &format!("k={k}"))?;
        if !gap.optimal() || (gap.gamma_c, gap.gamma_wcon) != (k + 4, 2 * k + 4) {
            return Err(format!("k={k}: got ({}, {}), optimal={}", gap.gamma_c, gap.gamma_wcon, gap.optimal()));
        }
        parts.push(format!("k={k} ({}, {}) in {:.2?}", gap.gamma_c, gap.gamma_wcon, t0.elapsed()));
    }
    Ok(parts.join(", "))
}

fn ac2_edge_gadgets() -> Outcome {
    let t0 = Instant::now();
    let report = verify(&["S4.edge-gadget"], None)?;
    within(t0.elapsed(), EDGE_GADGET_LIMIT, "edge gadgets")?;
    let check = &report.checks[0];
    if check.stats.holds != 7 {
        return Err(format!("expected 7 gadgets to hold, got {}", check.stats.holds));
    }
    all_pass(&report).map(|s| format!("{s} in {:.2?}", t0.elapsed()))
}

fn ac3_bounds() -> Outcome {
    let t0 = Instant::now();
    let report = verify(&["S2.bounds-2m-n", "S2.n-2"], Some(&CorpusSpec::exhaustive(6)))?;
    within(t0.elapsed(), BOUNDS_LIMIT, "bounds suite")?;
    all_pass(&report)
}

fn ac4_observation() -> Outcome {
    all_pass(&verify(&["S2.observation"], Some(&CorpusSpec::exhaustive(6)))?)
}

fn ac5_class_equality() -> Outcome {
    let mut parts = vec![all_pass(&verify(&["S3.dh", "S3.cactus", "S3.chordal-Hstar"], None)?)?];
    parts.push(all_pass(&verify(&["S3.dh", "S3.cactus"], Some(&file_corpus("connected_upto8.g6")))?)?);
    parts.push(all_pass(&verify(&["S3.chordal-Hstar"], Some(&file_corpus("chordal_connected_upto8.g6")))?)?);
    Ok(parts.join("; "))
}

fn ac6_h_star() -> Outcome {
    let hs = h_star().map_err(|e| e.to_string())?.graph;
    let c = all_minimum_sets_oracle(&hs, DominationKind::Connected).map_err(|e| e.to_string())?;
    let w = all_minimum_sets_oracle(&hs, DominationKind::WeaklyConvex).map_err(|e| e.to_string())?;
    if (c[0].len(), w[0].len()) != (4, 5) {
        return Err(format!("oracle gave ({}, {})", c[0].len(), w[0].len()));
    }
    let perfect = is_gc_gwcon_perfect(&hs).map_err(|e| e.to_string())?;
    if perfect.perfect || perfect.counterexample != Some(hs.vertices()) {
        return Err(format!("perfectness report {perfect:?}"));
    }
    let hpa = h_prime_a().map_err(|e| e.to_string())?.graph;
    let image = contains_induced(&hs, &hpa).ok_or("h_prime_a does not embed")?;
    Ok(format!("gamma (4, 5), not perfect, h_prime_a -> {image:?}"))
}

fn ac7_not_perfect_example() -> Outcome {
    let d = fig_example_not_perfect().map_err(|e| e.to_string())?;
    let g = &d.graph;
    let lemma = lemma_perfect_conditions(g, CommonNeighbour::OnCycle).map_err(|e| e.to_string())?;
    if !lemma.holds {
        return Err(format!("lemma conditions fail: {:?}", lemma.violations));
    }
    if is_gc_gwcon_perfect(g).map_err(|e| e.to_string())?.perfect {
        return Err("example reported perfect".into());
    }
    let vs = vertex_roles(g).supports;
    let vs_ab = vs | VertexSet::from_vertices([d.label("a"), d.label("b")]);
    let c = all_minimum_sets_oracle(g, DominationKind::Connected).map_err(|e| e.to_string())?;
    let w = all_minimum_sets_oracle(g, DominationKind::WeaklyConvex).map_err(|e| e.to_string())?;
    if !c.contains(&vs) || !w.contains(&vs_ab) {
        return Err(format!("V_S in connected minima: {}, V_S+ab in wcon minima: {}", c.contains(&vs), w.contains(&vs_ab)));
    }
    Ok(format!("gamma_c {} via V_S, gamma_wcon {} via V_S+ab", vs.len(), vs_ab.len()))
}

fn ac8_girth7() -> Outcome {
    let report = verify(&["S2.girth7"], None)?;
    if report.checks[0].stats.holds != 103 {
        return Err(format!("expected 103 graphs, {} held", report.checks[0].stats.holds));
    }
    all_pass(&report)
}

fn ac9_interpolation() -> Outcome {
    let t0 = Instant::now();
    let mut parts = vec![all_pass(&verify(&["S4.interpolation", "S4.unicyclic", "S4.gc-edge-bound"], None)?)?];
    parts.push(all_pass(&verify(&["S4.interpolation"], Some(&file_corpus("connected_upto8.g6")))?)?);
    within(t0.elapsed(), INTERPOLATION_LIMIT, "interpolation suite")?;
    Ok(format!("{} in {:.1?}", parts.join("; "), t0.elapsed()))
}

fn ac10_oracle_agreement() -> Outcome {
    let report = verify(&["oracle-agreement"], None)?;
    if report.checks[0].stats.holds != 27476 + 500 {
        return Err(format!("expected 27976 graphs, {} held", report.checks[0].stats.holds));
    }
    all_pass(&report)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("AC1 gap gadget k=6,7", ac1_gap_gadget),
        ("AC2 edge gadgets k=-3..3", ac2_edge_gadgets),
        ("AC3 bounds over n<=6", ac3_bounds),
        ("AC4 observation over n<=6", ac4_observation),
        ("AC5 class equality", ac5_class_equality),
        ("AC6 H* suite", ac6_h_star),
        ("AC7 not-perfect example", ac7_not_perfect_example),
        ("AC8 girth >= 7", ac8_girth7),
        ("AC9 interpolation and edge removal", ac9_interpolation),
        ("AC10 oracle agreement", ac10_oracle_agreement),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let t0 = Instant::now();
        match run() {
            Ok(detail) => println!("PASS {name} [{:.1?}] {detail}", t0.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL {name} [{:.1?}] {why}", t0.elapsed());
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
