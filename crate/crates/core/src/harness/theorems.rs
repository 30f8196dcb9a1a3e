use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::json;

use super::corpus::{CorpusItem, CorpusSpec};
use crate::domination::{
    all_minimum_sets_oracle, gamma_gap, induced_diameter, is_perfect_connected_dominating_under, satisfies, DominationKind,
    GammaGap, PerfectConvention, SolverConfig, SolverRegistry, ORACLE_TIER,
};
use crate::error::{DomError, Result};
use crate::graph::{blocks_and_bridges, girth, vertex_roles, Distance, Girth, Graph};
use crate::recognizers as rec;
use crate::spanning::{all_simplicial_or_cut, edge_removal_sweep, unicyclic_cycle_edge_analysis, wcon_spectrum};

/// Outcome of one theorem on one graph.
#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    /// The hypothesis does not hold for this graph.
    NotApplicable,
    Holds,
    Fails { detail: String, data: serde_json::Value },
    /// A solver hit its node budget, so the statement could not be decided.
    Inconclusive { detail: String },
}

impl Verdict {
    fn fails(detail: impl Into<String>, data: serde_json::Value) -> Self {
        Verdict::Fails { detail: detail.into(), data }
    }

    fn when(ok: bool, detail: impl Into<String>, data: serde_json::Value) -> Self {
        if ok {
            Verdict::Holds
        } else {
            Verdict::fails(detail, data)
        }
    }
}

/// A statement checked graph by graph over a corpus.
pub trait Theorem: Send + Sync {
    fn id(&self) -> &'static str;
    fn statement(&self) -> &'static str;
    fn default_corpus(&self) -> CorpusSpec;
    fn check(&self, item: &CorpusItem, cfg: &SolverConfig) -> Result<Verdict>;
}

struct FnTheorem {
    id: &'static str,
    statement: &'static str,
    corpus: &'static str,
    check: fn(&CorpusItem, &SolverConfig) -> Result<Verdict>,
}

impl Theorem for FnTheorem {
    fn id(&self) -> &'static str {
        self.id
    }

    fn statement(&self) -> &'static str {
        self.statement
    }

    fn default_corpus(&self) -> CorpusSpec {
        self.corpus.parse().expect("built-in corpus specs parse")
    }

    fn check(&self, item: &CorpusItem, cfg: &SolverConfig) -> Result<Verdict> {
        (self.check)(item, cfg)
    }
}

/// Theorems addressable by id.
#[derive(Clone)]
pub struct TheoremRegistry {
    theorems: BTreeMap<&'static str, Arc<dyn Theorem>>,
}

impl TheoremRegistry {
    pub fn empty() -> Self {
        TheoremRegistry { theorems: BTreeMap::new() }
    }

    pub fn builtin() -> Self {
        let mut r = Self::empty();
        for t in builtin_theorems() {
            r.register(Arc::new(t));
        }
        r
    }

    pub fn register(&mut self, t: Arc<dyn Theorem>) -> Option<Arc<dyn Theorem>> {
        self.theorems.insert(t.id(), t)
    }

    pub fn get(&self, id: &str) -> Result<Arc<dyn Theorem>> {
        self.theorems.get(id).cloned().ok_or_else(|| DomError::UnknownTheoremId(id.to_string()))
    }

    pub fn ids(&self) -> Vec<&'static str> {
        self.theorems.keys().copied().collect()
    }
}

impl Default for TheoremRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}

/// Both numbers, or `Err(verdict)` when either search ran out of budget.
fn gammas(g: &Graph, cfg: &SolverConfig) -> Result<std::result::Result<GammaGap, Verdict>> {
    let gap = gamma_gap(g, cfg)?;
    if gap.optimal() {
        Ok(Ok(gap))
    } else {
        Ok(Err(Verdict::Inconclusive { detail: "node budget exhausted".into() }))
    }
}

macro_rules! solve_or_return {
    ($g:expr, $cfg:expr) => {
        match gammas($g, $cfg)? {
            Ok(gap) => gap,
            Err(v) => return Ok(v),
        }
    };
}

fn equality_on(item: &CorpusItem, cfg: &SolverConfig, applies: bool) -> Result<Verdict> {
    if !applies {
        return Ok(Verdict::NotApplicable);
    }
    let gap = solve_or_return!(&item.graph, cfg);
    Ok(Verdict::when(gap.gap == 0, "gamma_c != gamma_wcon", json!({"gamma_c": gap.gamma_c, "gamma_wcon": gap.gamma_wcon})))
}

fn gap_gadget(item: &CorpusItem, cfg: &SolverConfig) -> Result<Verdict> {
    let Some(d) = item.gadget.as_ref().filter(|d| d.name == "gap") else {
        return Ok(Verdict::NotApplicable);
    };
    let gap = solve_or_return!(&item.graph, cfg);
    let ok = Some(gap.gamma_c) == d.predictions.gamma_c && Some(gap.gamma_wcon) == d.predictions.gamma_wcon;
    Ok(Verdict::when(
        ok,
        "solver values differ from the construction",
        json!({"k": d.parameter, "gamma_c": gap.gamma_c, "gamma_wcon": gap.gamma_wcon, "predicted": d.predictions}),
    ))
}

fn edge_gadget(item: &CorpusItem, cfg: &SolverConfig) -> Result<Verdict> {
    let Some(d) = item.gadget.as_ref().filter(|d| d.name == "edge-gap") else {
        return Ok(Verdict::NotApplicable);
    };
    let k = d.parameter.expect("edge gadget carries k");
    let (u, v) = d.special_edge.expect("edge gadget carries its edge");
    let before = solve_or_return!(&item.graph, cfg);
    let after = solve_or_return!(&item.graph.remove_edge(u, v)?, cfg);
    let delta = after.gamma_wcon as i64 - before.gamma_wcon as i64;
    let is_bridge = blocks_and_bridges(&item.graph).bridges.contains(&(u.min(v), u.max(v)));
    let ok = delta == k
        && !is_bridge
        && d.predictions.gamma_wcon.is_none_or(|p| p == before.gamma_wcon)
        && d.predictions.gamma_wcon_after_removal.is_none_or(|p| p == after.gamma_wcon);
    Ok(Verdict::when(
        ok,
        "removing the special edge does not shift gamma_wcon by k",
        json!({"k": k, "gamma_wcon": before.gamma_wcon, "gamma_wcon_after": after.gamma_wcon, "is_bridge": is_bridge}),
    ))
}

fn bounds_2m_n(item: &CorpusItem, cfg: &SolverConfig) -> Result<Verdict> {
    let g = &item.graph;
    let n = g.order();
    if n < 3 {
        return Ok(Verdict::NotApplicable);
    }
    let gap = solve_or_return!(g, cfg);
    let bound = 2 * g.size() - n;
    let path = rec::is_path(g);
    let long_cycle = rec::is_cycle(g) && n >= 7;
    let mut broken = Vec::new();
    if gap.gamma_c > gap.gamma_wcon {
        broken.push("gamma_c > gamma_wcon");
    }
    if gap.gamma_c > bound {
        broken.push("gamma_c > 2m-n");
    }
    if (gap.gamma_c == bound) != path {
        broken.push("gamma_c = 2m-n does not match 'is a path'");
    }
    if gap.gamma_wcon > bound {
        broken.push("gamma_wcon > 2m-n");
    }
    if (gap.gamma_wcon == bound) != (path || long_cycle) {
        broken.push("gamma_wcon = 2m-n does not match 'path or cycle of length >= 7'");
    }
    Ok(Verdict::when(
        broken.is_empty(),
        broken.join("; "),
        json!({"gamma_c": gap.gamma_c, "gamma_wcon": gap.gamma_wcon, "bound": bound}),
    ))
}

fn n_minus_2(item: &CorpusItem, cfg: &SolverConfig) -> Result<Verdict> {
    let g = &item.graph;
    let n = g.order();
    if n < 3 {
        return Ok(Verdict::NotApplicable);
    }
    let gap = solve_or_return!(g, cfg);
    let extremal = rec::is_path(g) || rec::is_cycle(g);
    let ok = gap.gamma_c <= n - 2 && (gap.gamma_c == n - 2) == extremal;
    Ok(Verdict::when(ok, "gamma_c vs n-2 characterization broken", json!({"gamma_c": gap.gamma_c, "n": n})))
}

fn observation(item: &CorpusItem, _cfg: &SolverConfig) -> Result<Verdict> {
    let g = &item.graph;
    if g.order() < 3 || g.is_complete() || g.order() > ORACLE_TIER {
        return Ok(Verdict::NotApplicable);
    }
    let roles = vertex_roles(g);
    for kind in [DominationKind::Connected, DominationKind::WeaklyConvex] {
        for set in all_minimum_sets_oracle(g, kind)? {
            if !roles.cut_vertices.is_subset(set) || set.intersects(roles.simplicial) {
                return Ok(Verdict::fails(
                    "a minimum set misses a cut-vertex or contains a simplicial vertex",
                    json!({"kind": kind, "set": set, "cut_vertices": roles.cut_vertices, "simplicial": roles.simplicial}),
                ));
            }
        }
    }
    Ok(Verdict::Holds)
}

fn cut_simplicial(item: &CorpusItem, cfg: &SolverConfig) -> Result<Verdict> {
    let g = &item.graph;
    if g.order() < 3 || g.is_complete() || !all_simplicial_or_cut(g) {
        return Ok(Verdict::NotApplicable);
    }
    let gap = solve_or_return!(g, cfg);
    let vc = vertex_roles(g).cut_vertices;
    let ok = satisfies(g, DominationKind::Connected, vc)?
        && satisfies(g, DominationKind::WeaklyConvex, vc)?
        && vc.len() == gap.gamma_c
        && gap.gap == 0;
    Ok(Verdict::when(
        ok,
        "the cut-vertices are not a minimum connected and weakly convex dominating set",
        json!({"cut_vertices": vc, "gamma_c": gap.gamma_c, "gamma_wcon": gap.gamma_wcon}),
    ))
}

fn diameter_lemma(item: &CorpusItem, cfg: &SolverConfig) -> Result<Verdict> {
    let g = &item.graph;
    if g.order() > ORACLE_TIER {
        return Ok(Verdict::NotApplicable);
    }
    let mut trigger = None;
    for d in all_minimum_sets_oracle(g, DominationKind::Connected)? {
        let diam = induced_diameter(g, d)?;
        let small = matches!(diam, Distance::Finite(x) if x <= 2);
        let three = diam == Distance::Finite(3);
        let outside = three && is_perfect_connected_dominating_under(g, d, PerfectConvention::OutsideOnly)?;
        let closed = three && is_perfect_connected_dominating_under(g, d, PerfectConvention::ClosedAll)?;
        if small || outside || closed {
            trigger = Some(json!({"set": d, "diameter": diam, "perfect_outside_only": outside, "perfect_closed": closed}));
            break;
        }
    }
    let Some(trigger) = trigger else {
        return Ok(Verdict::NotApplicable);
    };
    let gap = solve_or_return!(g, cfg);
    Ok(Verdict::when(
        gap.gap == 0,
        "hypothesis met but gamma_c != gamma_wcon",
        json!({"trigger": trigger, "gamma_c": gap.gamma_c, "gamma_wcon": gap.gamma_wcon}),
    ))
}

fn necessary(item: &CorpusItem, cfg: &SolverConfig) -> Result<Verdict> {
    let g = &item.graph;
    if g.order() < 3 {
        return Ok(Verdict::NotApplicable);
    }
    let gap = solve_or_return!(g, cfg);
    if gap.gap != 0 {
        return Ok(Verdict::NotApplicable);
    }
    let has_leaf = (0..g.order()).any(|v| g.degree(v) == 1);
    let short = matches!(girth(g), Girth::Finite(x) if x < 7);
    Ok(Verdict::when(has_leaf || short, "equality without leaves and with girth >= 7", json!({"girth": girth(g)})))
}

fn girth7(item: &CorpusItem, cfg: &SolverConfig) -> Result<Verdict> {
    let g = &item.graph;
    if !girth(g).at_least(7) {
        return Ok(Verdict::NotApplicable);
    }
    let a = rec::girth7_analysis(g)?;
    let gap = solve_or_return!(g, cfg);
    let ok = gap.gamma_wcon == a.gamma_wcon_formula && (gap.gap == 0) == a.equality_predicted;
    Ok(Verdict::when(
        ok,
        "girth >= 7 formula or equality criterion broken",
        json!({"analysis": a, "gamma_c": gap.gamma_c, "gamma_wcon": gap.gamma_wcon}),
    ))
}

fn cactus(item: &CorpusItem, cfg: &SolverConfig) -> Result<Verdict> {
    if !rec::is_cactus(&item.graph)? {
        return Ok(Verdict::NotApplicable);
    }
    let c = rec::cactus_equality_characterization(&item.graph)?;
    let gap = solve_or_return!(&item.graph, cfg);
    Ok(Verdict::when(
        c.predicted == (gap.gap == 0),
        "cactus characterization disagrees with the solver",
        json!({"predicted": c.predicted, "violations": c.violations, "gamma_c": gap.gamma_c, "gamma_wcon": gap.gamma_wcon}),
    ))
}

fn distance_hereditary(item: &CorpusItem, cfg: &SolverConfig) -> Result<Verdict> {
    let g = &item.graph;
    let dh = rec::is_distance_hereditary(g)?;
    if g.order() <= rec::DH_ORACLE_TIER && dh != rec::is_distance_hereditary_by_definition(g)? {
        return Ok(Verdict::fails("elimination recognizer disagrees with the definition", json!({"elimination": dh})));
    }
    equality_on(item, cfg, dh)
}

fn chordal_perfect(item: &CorpusItem, _cfg: &SolverConfig) -> Result<Verdict> {
    let g = &item.graph;
    if !rec::is_chordal(g) || g.order() > rec::PERFECTNESS_TIER {
        return Ok(Verdict::NotApplicable);
    }
    let slow = rec::perfectness_by_exhaustion(g)?;
    let free = rec::is_h_star_free(g);
    Ok(Verdict::when(
        slow.perfect == free,
        "chordal perfectness differs from H*-freeness",
        json!({"perfect": slow.perfect, "counterexample": slow.counterexample, "h_star_free": free}),
    ))
}

fn perfect_lemma(item: &CorpusItem, _cfg: &SolverConfig) -> Result<Verdict> {
    let g = &item.graph;
    if g.order() > rec::PERFECTNESS_TIER || !rec::is_gc_gwcon_perfect(g)?.perfect {
        return Ok(Verdict::NotApplicable);
    }
    let report = rec::lemma_perfect_conditions(g, rec::CommonNeighbour::OnCycle)?;
    Ok(Verdict::when(report.holds, "perfect graph violates the necessary conditions", json!({"violations": report.violations})))
}

fn unicyclic(item: &CorpusItem, cfg: &SolverConfig) -> Result<Verdict> {
    if !rec::is_unicyclic(&item.graph) {
        return Ok(Verdict::NotApplicable);
    }
    let records = unicyclic_cycle_edge_analysis(&item.graph, cfg)?;
    let bad: Vec<_> = records.iter().filter(|r| !r.violations.is_empty()).collect();
    Ok(Verdict::when(bad.is_empty(), "cycle-edge removal moves gamma_wcon by more than 2", json!({"records": bad})))
}

fn interpolation(item: &CorpusItem, _cfg: &SolverConfig) -> Result<Verdict> {
    let spectrum = match wcon_spectrum(&item.graph) {
        Ok(s) => s,
        Err(DomError::TreeCountCapExceeded(cap)) => {
            return Ok(Verdict::Inconclusive { detail: format!("more than {cap} spanning trees") });
        }
        Err(e) => return Err(e),
    };
    Ok(Verdict::when(spectrum.is_interval, "spanning-tree spectrum has a hole", json!({"values": spectrum.values})))
}

fn gc_edge_bound(item: &CorpusItem, cfg: &SolverConfig) -> Result<Verdict> {
    let records = edge_removal_sweep(&item.graph, cfg)?;
    let bad: Vec<_> = records.iter().filter(|r| r.delta_c.is_some_and(|d| !(0..=2).contains(&d))).collect();
    Ok(Verdict::when(bad.is_empty(), "edge removal moves gamma_c outside 0..=2", json!({"records": bad})))
}

fn cut_simplicial_edge(item: &CorpusItem, cfg: &SolverConfig) -> Result<Verdict> {
    let g = &item.graph;
    if g.order() < 3 || !all_simplicial_or_cut(g) {
        return Ok(Verdict::NotApplicable);
    }
    let records = edge_removal_sweep(g, cfg)?;
    let bad: Vec<_> = records.iter().filter(|r| !r.violations.is_empty()).collect();
    Ok(Verdict::when(bad.is_empty(), "edge-removal lemmas broken", json!({"records": bad})))
}

fn oracle_agreement(item: &CorpusItem, cfg: &SolverConfig) -> Result<Verdict> {
    let g = &item.graph;
    if g.order() > ORACLE_TIER {
        return Ok(Verdict::NotApplicable);
    }
    let registry = SolverRegistry::builtin();
    for kind in [DominationKind::Connected, DominationKind::WeaklyConvex] {
        let truth = all_minimum_sets_oracle(g, kind)?;
        for name in ["layered", "grow"] {
            let cert = registry.get(name)?.solve(g, kind, cfg)?;
            if !cert.optimal {
                return Ok(Verdict::Inconclusive { detail: format!("{name} ran out of budget") });
            }
            let ok = cert.value == truth[0].len() && cert.verify(g) && (!cfg.deterministic || cert.set == truth[0]);
            if !ok {
                return Ok(Verdict::fails(
                    "solver disagrees with the oracle",
                    json!({"solver": name, "kind": kind, "solver_set": cert.set, "oracle_first": truth[0]}),
                ));
            }
        }
    }
    Ok(Verdict::Holds)
}

fn builtin_theorems() -> Vec<FnTheorem> {
    const EXH: &str = "exhaustive:6";
    vec![
        FnTheorem { id: "S2.gap", statement: "the ladder construction has gamma_c = k+4 and gamma_wcon = 2k+4", corpus: "gadget:gap:6+gadget:gap:7", check: gap_gadget },
        FnTheorem {
            id: "S4.edge-gadget",
            statement: "removing the designated non-bridge edge changes gamma_wcon by exactly k",
            corpus: "gadget:edge-gap:-3+gadget:edge-gap:-2+gadget:edge-gap:-1+gadget:edge-gap:0+gadget:edge-gap:1+gadget:edge-gap:2+gadget:edge-gap:3",
            check: edge_gadget,
        },
        FnTheorem { id: "S2.bounds-2m-n", statement: "gamma_c <= gamma_wcon <= 2m-n with the path / long-cycle equality cases", corpus: EXH, check: bounds_2m_n },
        FnTheorem { id: "S2.n-2", statement: "gamma_c <= n-2 with equality exactly on paths and cycles", corpus: EXH, check: n_minus_2 },
        FnTheorem { id: "S2.observation", statement: "minimum sets contain every cut-vertex and no simplicial vertex", corpus: EXH, check: observation },
        FnTheorem { id: "S2.cut-simplicial", statement: "with only cut and simplicial vertices, V_C is minimum for both kinds", corpus: EXH, check: cut_simplicial },
        FnTheorem { id: "S2.diameter-lemma", statement: "a minimum connected dominating set of small induced diameter forces equality", corpus: EXH, check: diameter_lemma },
        FnTheorem { id: "S2.necessary", statement: "equality implies a leaf or girth below 7", corpus: EXH, check: necessary },
        FnTheorem {
            id: "S2.girth7",
            statement: "girth >= 7 gives gamma_wcon = n - n_L, with equality iff every vertex is a leaf or cut-vertex",
            corpus: "gadget:cycle:7+gadget:cycle:8+gadget:corona-cycle:7+random:girth7:100:7",
            check: girth7,
        },
        FnTheorem { id: "S3.cactus", statement: "cactus cycle conditions characterize equality", corpus: "exhaustive:6+random:cactus:300:11", check: cactus },
        FnTheorem { id: "S3.dh", statement: "distance-hereditary graphs have equality", corpus: EXH, check: distance_hereditary },
        FnTheorem { id: "S3.block", statement: "block graphs have equality", corpus: EXH, check: |it, cfg| equality_on(it, cfg, rec::is_block_graph(&it.graph)?) },
        FnTheorem { id: "S3.cograph", statement: "connected cographs have equality", corpus: EXH, check: |it, cfg| equality_on(it, cfg, rec::is_cograph(&it.graph)) },
        FnTheorem {
            id: "S3.chordal-Hstar",
            statement: "chordal H*-free graphs have equality",
            corpus: EXH,
            check: |it, cfg| equality_on(it, cfg, rec::is_chordal(&it.graph) && rec::is_h_star_free(&it.graph)),
        },
        FnTheorem {
            id: "S3.chordal-perfect",
            statement: "a chordal graph is perfect iff it is H*-free",
            corpus: "exhaustive:6+gadget:h-star+random:chordal-hstar:30:5",
            check: chordal_perfect,
        },
        FnTheorem { id: "S3.perfect-lemma", statement: "perfect graphs satisfy the cycle conditions", corpus: "exhaustive:6+gadget:not-perfect", check: perfect_lemma },
        FnTheorem { id: "S4.unicyclic", statement: "removing a cycle edge of a unicyclic graph moves gamma_wcon by at most 2", corpus: "exhaustive:6+random:unicyclic:200:13", check: unicyclic },
        FnTheorem { id: "S4.interpolation", statement: "gamma_wcon over spanning trees is an interval", corpus: "exhaustive:6+random:unicyclic:200:13", check: interpolation },
        FnTheorem { id: "S4.gc-edge-bound", statement: "removing a non-bridge edge raises gamma_c by 0, 1 or 2", corpus: EXH, check: gc_edge_bound },
        FnTheorem {
            id: "S4.cut-simplicial-edge",
            statement: "with only cut and simplicial vertices, edge removal raises gamma_c by at most 1 and keeps equality",
            corpus: EXH,
            check: cut_simplicial_edge,
        },
        FnTheorem { id: "oracle-agreement", statement: "pruned solvers match the exhaustive oracle", corpus: "exhaustive:6+random:connected:500:17", check: oracle_agreement },
    ]
}
