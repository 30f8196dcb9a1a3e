use rayon::prelude::*;
use serde::Serialize;

use super::classes::is_cactus;
use super::cycles::{enumerate_cycles, has_induced_cycle_at_least, CycleWitness};
use super::embed::find_h_star;
use super::is_chordal;
use crate::domination::{gamma_gap, SolverConfig};
use crate::error::{DomError, Result};
use crate::graph::structure::induces_connected;
use crate::graph::{blocks_and_bridges, cut_vertices, girth, induced_subgraph, is_connected, Graph, VertexSet};

/// Outcome of the cactus equality test, with the cycles that break it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CactusCharacterization {
    pub predicted: bool,
    pub violations: Vec<CycleWitness>,
}

/// Vertices of a cycle block in traversal order from its smallest vertex.
fn walk_cycle_block(g: &Graph, block: VertexSet) -> Vec<usize> {
    let mut order = vec![block.first().expect("nonempty block")];
    let mut seen = VertexSet::singleton(order[0]);
    while order.len() < block.len() {
        let cur = *order.last().expect("nonempty");
        let next = ((g.neighbors(cur) & block) - seen).first().expect("cycle block");
        order.push(next);
        seen = seen.with(next);
    }
    order
}

/// For a cactus, equality of the connected and weakly convex domination
/// numbers is predicted iff every 5- or 6-cycle has all degrees at least 3 or
/// two adjacent degree-2 vertices, and every longer cycle has all degrees at
/// least 3.
pub fn cactus_equality_characterization(g: &Graph) -> Result<CactusCharacterization> {
    if !is_cactus(g)? {
        return Err(DomError::NotACactus);
    }
    let mut violations = Vec::new();
    for block in blocks_and_bridges(g).blocks.into_iter().filter(|b| b.len() >= 3) {
        let cycle = CycleWitness::new(g, walk_cycle_block(g, block));
        let low: Vec<bool> = cycle.vertices.iter().map(|&v| g.degree(v) == 2).collect();
        let k = cycle.len();
        let all_high = !low.iter().any(|&x| x);
        let adjacent_low = (0..k).any(|i| low[i] && low[(i + 1) % k]);
        let ok = match k {
            5 | 6 => all_high || adjacent_low,
            k if k >= 7 => all_high,
            _ => true,
        };
        if !ok {
            violations.push(cycle);
        }
    }
    Ok(CactusCharacterization { predicted: violations.is_empty(), violations })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Girth7Analysis {
    pub n: usize,
    pub leaves: usize,
    /// `n - n_L`, or 1 when `n <= 2`.
    pub gamma_wcon_formula: usize,
    /// Every vertex is a leaf or a cut-vertex.
    pub equality_predicted: bool,
}

/// Structure of a connected graph of girth at least 7 (forests included).
pub fn girth7_analysis(g: &Graph) -> Result<Girth7Analysis> {
    if !is_connected(g) {
        return Err(DomError::Disconnected);
    }
    if let crate::graph::Girth::Finite(len) = girth(g) {
        if len < 7 {
            return Err(DomError::GirthTooSmall(len));
        }
    }
    let n = g.order();
    let leaves = (0..n).filter(|&v| g.degree(v) == 1).count();
    if n <= 2 {
        return Ok(Girth7Analysis { n, leaves, gamma_wcon_formula: 1, equality_predicted: true });
    }
    let cut = cut_vertices(g);
    let equality_predicted = (0..n).all(|v| g.degree(v) == 1 || cut.contains(v));
    Ok(Girth7Analysis { n, leaves, gamma_wcon_formula: n - leaves, equality_predicted })
}

/// Where the common neighbour in the second lemma condition may live.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum CommonNeighbour {
    /// Only vertices of the cycle itself.
    #[default]
    OnCycle,
    /// Any vertex of the graph.
    Anywhere,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "kebab-case")]
pub enum LemmaViolation {
    LongInducedCycle { cycle: CycleWitness },
    ShortCycle { cycle: CycleWitness },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub holds: bool,
    pub violations: Vec<LemmaViolation>,
}

/// Checks one 5- or 6-cycle against the two alternative conditions.
pub fn short_cycle_condition(g: &Graph, cycle: &CycleWitness, reading: CommonNeighbour) -> bool {
    let on_cycle = cycle.set();
    let (h, map) = induced_subgraph(g, g.closed_neighborhood_of(on_cycle)).expect("nonempty");
    let cut_in_h: VertexSet = cut_vertices(&h).iter().map(|i| map[i]).collect();
    let k = cycle.len();
    let is_cut = |i: usize| cut_in_h.contains(cycle.vertices[i % k]);
    if (0..k).any(|i| !is_cut(i) && !is_cut(i + 1)) {
        return true;
    }
    let pool = match reading {
        CommonNeighbour::OnCycle => on_cycle,
        CommonNeighbour::Anywhere => g.vertices(),
    };
    (0..k).filter(|&i| is_cut(i)).all(|i| {
        let v = cycle.vertices[i];
        let (u, w) = cycle.around(i);
        g.has_edge(u, w) || !((g.neighbors(u) & g.neighbors(w) & pool).without(v)).is_empty()
    })
}

/// The necessary conditions for perfection: no induced cycle longer than
/// six, and every 5- or 6-cycle passes [`short_cycle_condition`].
pub fn lemma_perfect_conditions(g: &Graph, reading: CommonNeighbour) -> Result<LemmaReport> {
    if !is_connected(g) {
        return Err(DomError::Disconnected);
    }
    let mut violations = Vec::new();
    if let Some(cycle) = has_induced_cycle_at_least(g, 7) {
        violations.push(LemmaViolation::LongInducedCycle { cycle });
    }
    for cycle in enumerate_cycles(g, &[5, 6])? {
        if !short_cycle_condition(g, &cycle, reading) {
            violations.push(LemmaViolation::ShortCycle { cycle });
        }
    }
    Ok(LemmaReport { holds: violations.is_empty(), violations })
}

/// Largest non-chordal order [`is_gc_gwcon_perfect`] accepts.
pub const PERFECTNESS_TIER: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PerfectnessReport {
    pub perfect: bool,
    /// Vertex set of a connected induced subgraph with a gap, smallest mask
    /// among those examined.
    pub counterexample: Option<VertexSet>,
    pub chordal_shortcut: bool,
}

/// Whether every connected induced subgraph has equal connected and weakly
/// convex domination numbers. Chordal graphs are decided by looking for an
/// induced `H*`; others by solving every connected induced subgraph.
pub fn is_gc_gwcon_perfect(g: &Graph) -> Result<PerfectnessReport> {
    if is_chordal(g) {
        let hit = find_h_star(g);
        return Ok(PerfectnessReport { perfect: hit.is_none(), counterexample: hit, chordal_shortcut: true });
    }
    perfectness_by_exhaustion(g)
}

/// Solves both numbers on every connected induced subgraph, without the
/// chordal shortcut.
pub fn perfectness_by_exhaustion(g: &Graph) -> Result<PerfectnessReport> {
    let n = g.order();
    if n > PERFECTNESS_TIER {
        return Err(DomError::TierExceeded { order: n, limit: PERFECTNESS_TIER });
    }
    let cfg = SolverConfig::default();
    let found = (1u64..1 << n).into_par_iter().find_first(|&bits| {
        let set = VertexSet::from_bits(bits);
        induces_connected(g, set) && {
            let (sub, _) = induced_subgraph(g, set).expect("nonempty");
            gamma_gap(&sub, &cfg).map(|gap| gap.gap > 0).unwrap_or(false)
        }
    });
    let counterexample = found.map(VertexSet::from_bits);
    Ok(PerfectnessReport { perfect: counterexample.is_none(), counterexample, chordal_shortcut: false })
}
