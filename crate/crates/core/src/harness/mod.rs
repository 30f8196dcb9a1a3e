//! Theorem registry, corpora and JSON-lines verification reports.

pub mod corpus;
mod theorems;

use std::collections::HashMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

pub use corpus::{corpus_scan, expand, labeled_connected_graphs, ClassFilter, CorpusItem, CorpusSource, CorpusSpec, RandomFamily, EXHAUSTIVE_LIMIT};
pub use theorems::{Theorem, TheoremRegistry, Verdict};

use crate::domination::SolverConfig;
use crate::error::{DomError, Result};
use crate::graph::{graph6_decode_with_limit, graph6_encode, is_connected, Tier};

/// Counterexamples kept per theorem; the stats still count all of them.
pub const MAX_COUNTEREXAMPLES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub label: String,
    pub graph6: String,
    pub detail: String,
    pub data: serde_json::Value,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckStats {
    pub graphs: usize,
    pub applicable: usize,
    pub holds: usize,
    pub failed: usize,
    /// Graphs where a search ran out of budget; these count as failures.
    pub inconclusive: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremCheck {
    pub id: String,
    pub statement: String,
    pub corpus: String,
    pub status: Status,
    pub counterexamples: Vec<Counterexample>,
    pub stats: CheckStats,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub ok: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Timing {
    pub total_ms: f64,
    pub per_theorem_ms: Vec<(String, f64)>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<TheoremCheck>,
    pub summary: Summary,
    pub timing: Timing,
}

impl VerificationReport {
    /// One line per check, then `{"summary": ..}`, then `{"timing": ..}`.
    /// Everything but the last line is deterministic.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&serde_json::to_string(c).expect("check serializes"));
            out.push('\n');
        }
        out.push_str(&serde_json::json!({ "summary": self.summary }).to_string());
        out.push('\n');
        out.push_str(&serde_json::json!({ "timing": self.timing }).to_string());
        out.push('\n');
        out
    }

    pub fn exit_code(&self) -> i32 {
        if self.summary.ok {
            0
        } else {
            1
        }
    }

    pub fn check(&self, id: &str) -> Option<&TheoremCheck> {
        self.checks.iter().find(|c| c.id == id)
    }
}

fn evaluate(theorem: &dyn Theorem, item: &CorpusItem, cfg: &SolverConfig) -> Result<Verdict> {
    // Every statement is about connected graphs; file corpora may hold others.
    if !is_connected(&item.graph) {
        return Ok(Verdict::NotApplicable);
    }
    theorem.check(item, cfg)
}

fn run_one(theorem: &dyn Theorem, scope: &str, items: &[CorpusItem], cfg: &SolverConfig) -> Result<TheoremCheck> {
    let verdicts: Vec<Verdict> = items.par_iter().map(|it| evaluate(theorem, it, cfg)).collect::<Result<_>>()?;
    let mut stats = CheckStats { graphs: items.len(), ..CheckStats::default() };
    let mut counterexamples = Vec::new();
    for (item, verdict) in items.iter().zip(verdicts) {
        let (detail, data) = match verdict {
            Verdict::NotApplicable => continue,
            Verdict::Holds => {
                stats.applicable += 1;
                stats.holds += 1;
                continue;
            }
            Verdict::Fails { detail, data } => {
                stats.failed += 1;
                (detail, data)
            }
            Verdict::Inconclusive { detail } => {
                stats.inconclusive += 1;
                (format!("inconclusive: {detail}"), serde_json::Value::Null)
            }
        };
        stats.applicable += 1;
        if counterexamples.len() < MAX_COUNTEREXAMPLES {
            counterexamples.push(Counterexample { label: item.label.clone(), graph6: graph6_encode(&item.graph), detail, data });
        }
    }
    let status = if stats.applicable == 0 {
        Status::Skipped
    } else if counterexamples.is_empty() {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(TheoremCheck {
        id: theorem.id().to_string(),
        statement: theorem.statement().to_string(),
        corpus: scope.to_string(),
        status,
        counterexamples,
        stats,
    })
}

/// Runs the named theorems (all of them when `ids` is empty), each over
/// `corpus` or its own default corpus.
pub fn run_verification(ids: &[&str], corpus: Option<&CorpusSpec>, cfg: &SolverConfig) -> Result<VerificationReport> {
    run_verification_with(&TheoremRegistry::builtin(), ids, corpus, cfg)
}

pub fn run_verification_with(
    registry: &TheoremRegistry,
    ids: &[&str],
    corpus: Option<&CorpusSpec>,
    cfg: &SolverConfig,
) -> Result<VerificationReport> {
    cfg.validate()?;
    let ids: Vec<&str> = if ids.is_empty() { registry.ids() } else { ids.to_vec() };
    let theorems = ids.iter().map(|id| registry.get(id)).collect::<Result<Vec<_>>>()?;

    let start = Instant::now();
    let mut cache: HashMap<String, Vec<CorpusItem>> = HashMap::new();
    let mut checks = Vec::new();
    let mut timing = Timing::default();
    for theorem in theorems {
        let spec = corpus.cloned().unwrap_or_else(|| theorem.default_corpus());
        let scope = spec.to_string();
        if !cache.contains_key(&scope) {
            cache.insert(scope.clone(), expand(&spec)?);
        }
        let t0 = Instant::now();
        checks.push(run_one(theorem.as_ref(), &scope, &cache[&scope], cfg)?);
        timing.per_theorem_ms.push((theorem.id().to_string(), t0.elapsed().as_secs_f64() * 1e3));
    }
    timing.total_ms = start.elapsed().as_secs_f64() * 1e3;

    let count = |s: Status| checks.iter().filter(|c| c.status == s).count();
    let summary = Summary {
        checks: checks.len(),
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        skipped: count(Status::Skipped),
        ok: count(Status::Fail) == 0,
    };
    Ok(VerificationReport { checks, summary, timing })
}

/// Re-checks one stored counterexample in isolation. Gadget labels are
/// rebuilt from their source so designated edges and predictions survive.
pub fn replay(id: &str, cx: &Counterexample, cfg: &SolverConfig) -> Result<Verdict> {
    let theorem = TheoremRegistry::builtin().get(id)?;
    let item = if cx.label.starts_with("gadget:") {
        let spec: CorpusSpec = cx.label.parse()?;
        expand(&spec)?.into_iter().next().ok_or_else(|| DomError::CorpusRead(format!("empty gadget source {}", cx.label)))?
    } else {
        CorpusItem { label: cx.label.clone(), graph: graph6_decode_with_limit(&cx.graph6, Tier::from_env()?)?, gadget: None }
    };
    evaluate(theorem.as_ref(), &item, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::gadget_by_name;
    use crate::graph::graph6_decode;

    struct AlwaysFails;

    impl Theorem for AlwaysFails {
        fn id(&self) -> &'static str {
            "always-fails"
        }
        fn statement(&self) -> &'static str {
            "no graph with a leaf"
        }
        fn default_corpus(&self) -> CorpusSpec {
            CorpusSpec::exhaustive(4)
        }
        fn check(&self, item: &CorpusItem, _: &SolverConfig) -> Result<Verdict> {
            let leafy = (0..item.graph.order()).any(|v| item.graph.degree(v) == 1);
            Ok(if leafy { Verdict::Fails { detail: "leaf".into(), data: serde_json::Value::Null } } else { Verdict::Holds })
        }
    }

    #[test]
    fn registry_lists_builtins() {
        let reg = TheoremRegistry::builtin();
        for id in ["S2.gap", "S3.cactus", "S3.chordal-Hstar", "S4.interpolation", "S2.diameter-lemma", "oracle-agreement"] {
            assert!(reg.get(id).is_ok(), "{id}");
        }
        assert!(matches!(reg.get("S9.nope"), Err(DomError::UnknownTheoremId(_))));
        for id in reg.ids() {
            let spec = reg.get(id).unwrap().default_corpus();
            assert_eq!(spec.to_string().parse::<CorpusSpec>().unwrap(), spec);
        }
    }

    #[test]
    fn gap_passes_and_report_is_deterministic() {
        let cfg = SolverConfig::default();
        let spec: CorpusSpec = "gadget:gap:6".parse().unwrap();
        let a = run_verification(&["S2.gap", "S3.cograph"], Some(&spec), &cfg).unwrap();
        assert_eq!(a.check("S2.gap").unwrap().status, Status::Pass);
        assert_eq!(a.check("S3.cograph").unwrap().status, Status::Skipped);
        assert_eq!(a.exit_code(), 0);
        let b = run_verification(&["S2.gap", "S3.cograph"], Some(&spec), &cfg).unwrap();
        let strip = |r: &VerificationReport| r.to_json_lines().lines().filter(|l| !l.starts_with("{\"timing\"")).collect::<Vec<_>>().join("\n");
        assert_eq!(strip(&a), strip(&b));
        assert_eq!(a.to_json_lines().lines().count(), 4);
    }

    #[test]
    fn failures_are_capped_and_replay() {
        let mut reg = TheoremRegistry::empty();
        reg.register(std::sync::Arc::new(AlwaysFails));
        let cfg = SolverConfig::default();
        let report = run_verification_with(&reg, &[], None, &cfg).unwrap();
        let check = &report.checks[0];
        assert_eq!(check.status, Status::Fail);
        assert_eq!(report.exit_code(), 1);
        assert_eq!(check.counterexamples.len(), MAX_COUNTEREXAMPLES);
        assert!(check.stats.failed > MAX_COUNTEREXAMPLES);
        let g = graph6_decode(&check.counterexamples[0].graph6).unwrap();
        let item = CorpusItem { label: String::new(), graph: g, gadget: None };
        assert!(matches!(AlwaysFails.check(&item, &cfg).unwrap(), Verdict::Fails { .. }));
    }

    #[test]
    fn replay_of_gadget_labels_keeps_metadata() {
        let cfg = SolverConfig::default();
        let d = gadget_by_name("edge-gap", Some(2), 0, None).unwrap();
        let cx = Counterexample { label: "gadget:edge-gap:2".into(), graph6: graph6_encode(&d.graph), detail: String::new(), data: serde_json::Value::Null };
        assert_eq!(replay("S4.edge-gadget", &cx, &cfg).unwrap(), Verdict::Holds);
        let plain = Counterexample { label: "x".into(), ..cx };
        assert_eq!(replay("S4.edge-gadget", &plain, &cfg).unwrap(), Verdict::NotApplicable);
    }

    #[test]
    fn unknown_ids_and_bad_corpora_error() {
        let cfg = SolverConfig::default();
        assert!(matches!(run_verification(&["nope"], None, &cfg), Err(DomError::UnknownTheoremId(_))));
        let spec: CorpusSpec = "file:/definitely/missing.g6".parse().unwrap();
        assert!(matches!(run_verification(&["S3.block"], Some(&spec), &cfg), Err(DomError::CorpusRead(_))));
    }
}
