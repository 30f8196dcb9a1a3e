//! Graph-class recognition and the structural characterizations of when the
//! connected and weakly convex domination numbers coincide.

mod characterize;
mod classes;
mod cycles;
mod embed;

use serde::Serialize;

pub use characterize::{
    cactus_equality_characterization, girth7_analysis, is_gc_gwcon_perfect, lemma_perfect_conditions, perfectness_by_exhaustion, short_cycle_condition,
    CactusCharacterization, CommonNeighbour, Girth7Analysis, LemmaReport, LemmaViolation, PerfectnessReport, PERFECTNESS_TIER,
};
pub use classes::{
    find_induced_p4, is_block_graph, is_cactus, is_chordal, is_cograph, is_distance_hereditary,
    is_distance_hereditary_by_definition, maximum_cardinality_search, DH_ORACLE_TIER,
};
pub use cycles::{enumerate_cycles, enumerate_cycles_capped, has_induced_cycle_at_least, CycleWitness, CYCLE_CAP};
pub use embed::{contains_induced, find_h_star, is_h_star_free, is_induced_embedding};

use crate::error::{DomError, Result};
use crate::graph::{girth, is_connected, Girth, Graph};

/// Membership flags for every recognized class, plus the girth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub is_tree: bool,
    pub is_path: bool,
    pub is_cycle: bool,
    pub is_complete: bool,
    pub is_cactus: bool,
    pub is_block_graph: bool,
    pub is_cograph: bool,
    pub is_distance_hereditary: bool,
    pub is_chordal: bool,
    pub is_h_star_free: bool,
    pub girth: Girth,
}

pub fn is_tree(g: &Graph) -> bool {
    is_connected(g) && g.size() + 1 == g.order()
}

pub fn is_path(g: &Graph) -> bool {
    is_tree(g) && g.max_degree() <= 2
}

pub fn is_cycle(g: &Graph) -> bool {
    g.order() >= 3 && is_connected(g) && (0..g.order()).all(|v| g.degree(v) == 2)
}

/// Connected with exactly one cycle.
pub fn is_unicyclic(g: &Graph) -> bool {
    is_connected(g) && g.size() == g.order()
}

pub fn classify(g: &Graph) -> Result<ClassReport> {
    if !is_connected(g) {
        return Err(DomError::Disconnected);
    }
    Ok(ClassReport {
        is_tree: is_tree(g),
        is_path: is_path(g),
        is_cycle: is_cycle(g),
        is_complete: g.is_complete(),
        is_cactus: is_cactus(g)?,
        is_block_graph: is_block_graph(g)?,
        is_cograph: is_cograph(g),
        is_distance_hereditary: is_distance_hereditary(g)?,
        is_chordal: is_chordal(g),
        is_h_star_free: is_h_star_free(g),
        girth: girth(g),
    })
}
