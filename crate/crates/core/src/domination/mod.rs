//! Dominating, connected dominating and weakly convex dominating sets: the
//! membership predicates, exact solvers selectable by name, and a
//! pruning-free oracle used to cross-check them.

mod context;
mod grow;
mod layered;
mod oracle;
mod strategy;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub use grow::GrowSolver;
pub use layered::LayeredSolver;
pub use oracle::{all_minimum_sets_oracle, all_minimum_sets_oracle_with_tier, ExhaustiveSolver, ORACLE_TIER};
pub use strategy::{DominationSolver, SolverRegistry, DEFAULT_SOLVER};

pub(crate) use context::{forcing, SearchContext};

use crate::error::{DomError, Result};
use crate::graph::{distance_matrix, graph6_encode, induced_subgraph, is_connected, Distance, Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum DominationKind {
    Dominating,
    Connected,
    WeaklyConvex,
}

impl fmt::Display for DominationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DominationKind::Dominating => "DOMINATING",
            DominationKind::Connected => "CONNECTED",
            DominationKind::WeaklyConvex => "WEAKLY_CONVEX",
        })
    }
}

impl FromStr for DominationKind {
    type Err = DomError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "dominating" => Ok(DominationKind::Dominating),
            "connected" => Ok(DominationKind::Connected),
            "weakly-convex" | "wcon" => Ok(DominationKind::WeaklyConvex),
            _ => Err(DomError::ParameterOutOfRange(format!("unknown domination kind {s:?}"))),
        }
    }
}

/// Which vertices must have a unique dominator for a connected dominating set
/// to count as perfect.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum PerfectConvention {
    /// Only vertices outside the set, each with exactly one neighbor inside.
    #[default]
    OutsideOnly,
    /// Every vertex, counting closed neighborhoods (members dominate themselves).
    ClosedAll,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SolverConfig {
    /// Force cut-vertices in and simplicial vertices out of the search.
    pub use_forced_pruning: bool,
    /// Maximum number of search nodes before returning a flagged upper bound.
    pub node_budget: u64,
    /// Return the numerically smallest optimal mask.
    pub deterministic: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { use_forced_pruning: true, node_budget: 200_000_000, deterministic: true }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if self.node_budget == 0 {
            return Err(DomError::InvalidConfig("node_budget must be positive".into()));
        }
        Ok(())
    }
}

/// A claimed optimal (or, when the budget ran out, merely feasible) set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominationCertificate {
    pub graph6: String,
    pub graph_hash: String,
    pub kind: DominationKind,
    pub value: usize,
    pub set: VertexSet,
    pub optimal: bool,
    pub nodes_expanded: u64,
    pub solver: String,
}

/// Short hex digest identifying a labeled graph.
pub fn graph_hash(g: &Graph) -> String {
    let digest = Sha256::digest(graph6_encode(g).as_bytes());
    digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

impl DominationCertificate {
    pub fn new(g: &Graph, kind: DominationKind, set: VertexSet, optimal: bool, nodes_expanded: u64, solver: &str) -> Self {
        DominationCertificate {
            graph6: graph6_encode(g),
            graph_hash: graph_hash(g),
            kind,
            value: set.len(),
            set,
            optimal,
            nodes_expanded,
            solver: solver.to_string(),
        }
    }

    /// Re-checks the set against `g` with the public predicates.
    pub fn verify(&self, g: &Graph) -> bool {
        self.graph_hash == graph_hash(g) && self.value == self.set.len() && satisfies(g, self.kind, self.set).unwrap_or(false)
    }
}

fn require_nonempty(g: &Graph, set: VertexSet) -> Result<()> {
    if set.is_empty() {
        return Err(DomError::EmptySet);
    }
    g.check_set(set)
}

/// `N[X] = V`.
pub fn is_dominating(g: &Graph, set: VertexSet) -> Result<bool> {
    require_nonempty(g, set)?;
    Ok(g.closed_neighborhood_of(set) == g.vertices())
}

pub fn is_connected_dominating(g: &Graph, set: VertexSet) -> Result<bool> {
    Ok(is_dominating(g, set)? && crate::graph::reach_within(g, set, set.first().expect("nonempty")) == set)
}

/// Weak convexity via the induced-distance criterion: for all `a, b` in `X`,
/// `d_{G[X]}(a, b) = d_G(a, b)`. Some `a–b` geodesic of `G` lies inside `X`
/// exactly when the induced distance does not exceed the host distance.
pub fn is_weakly_convex(g: &Graph, set: VertexSet) -> Result<bool> {
    require_nonempty(g, set)?;
    if !is_connected(g) {
        return Err(DomError::DisconnectedHost);
    }
    let host = distance_matrix(g);
    let (sub, map) = induced_subgraph(g, set)?;
    let inner = distance_matrix(&sub);
    for i in 0..map.len() {
        for j in i + 1..map.len() {
            if inner.get(i, j) != host.get(map[i], map[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn is_wcon_dominating(g: &Graph, set: VertexSet) -> Result<bool> {
    Ok(is_weakly_convex(g, set)? && is_dominating(g, set)?)
}

/// Connected dominating set in which every vertex outside it has exactly one
/// neighbor inside it.
pub fn is_perfect_connected_dominating(g: &Graph, set: VertexSet) -> Result<bool> {
    is_perfect_connected_dominating_under(g, set, PerfectConvention::OutsideOnly)
}

pub fn is_perfect_connected_dominating_under(g: &Graph, set: VertexSet, convention: PerfectConvention) -> Result<bool> {
    if !is_connected_dominating(g, set)? {
        return Ok(false);
    }
    let checked = match convention {
        PerfectConvention::OutsideOnly => g.vertices() - set,
        PerfectConvention::ClosedAll => g.vertices(),
    };
    Ok(checked.iter().all(|v| (g.closed_neighbors(v) & set).len() == 1))
}

/// The predicate matching `kind`.
pub fn satisfies(g: &Graph, kind: DominationKind, set: VertexSet) -> Result<bool> {
    match kind {
        DominationKind::Dominating => is_dominating(g, set),
        DominationKind::Connected => is_connected_dominating(g, set),
        DominationKind::WeaklyConvex => is_wcon_dominating(g, set),
    }
}

/// Diameter of `G[D]`, `Unreachable` when the induced subgraph is disconnected.
pub fn induced_diameter(g: &Graph, set: VertexSet) -> Result<Distance> {
    let (sub, _) = induced_subgraph(g, set)?;
    Ok(crate::graph::diameter(&sub))
}

pub fn minimum_connected_dominating(g: &Graph, cfg: &SolverConfig) -> Result<DominationCertificate> {
    LayeredSolver.solve(g, DominationKind::Connected, cfg)
}

pub fn minimum_wcon_dominating(g: &Graph, cfg: &SolverConfig) -> Result<DominationCertificate> {
    LayeredSolver.solve(g, DominationKind::WeaklyConvex, cfg)
}

pub fn minimum_dominating(g: &Graph, cfg: &SolverConfig) -> Result<DominationCertificate> {
    LayeredSolver.solve(g, DominationKind::Dominating, cfg)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaGap {
    pub gamma_c: usize,
    pub gamma_wcon: usize,
    pub gap: usize,
    pub connected: DominationCertificate,
    pub weakly_convex: DominationCertificate,
}

impl GammaGap {
    pub fn optimal(&self) -> bool {
        self.connected.optimal && self.weakly_convex.optimal
    }
}

pub fn gamma_gap(g: &Graph, cfg: &SolverConfig) -> Result<GammaGap> {
    gamma_gap_with(&LayeredSolver, g, cfg)
}

pub fn gamma_gap_with(solver: &dyn DominationSolver, g: &Graph, cfg: &SolverConfig) -> Result<GammaGap> {
    let connected = solver.solve(g, DominationKind::Connected, cfg)?;
    let weakly_convex = solver.solve(g, DominationKind::WeaklyConvex, cfg)?;
    let (gamma_c, gamma_wcon) = (connected.value, weakly_convex.value);
    debug_assert!(gamma_c <= gamma_wcon || !(connected.optimal && weakly_convex.optimal));
    Ok(GammaGap { gamma_c, gamma_wcon, gap: gamma_wcon.saturating_sub(gamma_c), connected, weakly_convex })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{complete, cycle, h_star, star};

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    #[test]
    fn domination_examples() {
        let k5 = complete(5).unwrap();
        assert!((0..5).all(|v| is_dominating(&k5, VertexSet::singleton(v)).unwrap()));
        let c6 = cycle(6).unwrap();
        assert!(is_dominating(&c6, set(&[0, 3])).unwrap());
        assert!(!is_dominating(&c6, set(&[0])).unwrap());
        assert_eq!(is_dominating(&c6, VertexSet::EMPTY), Err(DomError::EmptySet));
        assert!(is_dominating(&c6, set(&[6])).is_err());
    }

    #[test]
    fn connected_domination_examples() {
        let c6 = cycle(6).unwrap();
        assert!(is_connected_dominating(&c6, set(&[0, 1, 2, 3])).unwrap());
        assert!(!is_connected_dominating(&c6, set(&[0, 3])).unwrap());
        assert!(is_connected_dominating(&Graph::empty(1).unwrap(), set(&[0])).unwrap());
    }

    #[test]
    fn weak_convexity_examples() {
        let c6 = cycle(6).unwrap();
        assert!(is_weakly_convex(&c6, c6.vertices()).unwrap());
        assert!(is_weakly_convex(&c6, set(&[4])).unwrap());
        assert!(is_weakly_convex(&c6, set(&[0, 1, 2, 3])).unwrap());
        assert!(!is_weakly_convex(&c6, set(&[0, 1, 2, 3, 4])).unwrap());
        let h = h_star().unwrap();
        let supports = set(&[h.label("A"), h.label("B"), h.label("C"), h.label("E")]);
        assert!(!is_weakly_convex(&h.graph, supports).unwrap());
        assert_eq!(is_weakly_convex(&Graph::empty(2).unwrap(), set(&[0])), Err(DomError::DisconnectedHost));
    }

    #[test]
    fn wcon_domination_examples() {
        let c7 = cycle(7).unwrap();
        assert!(is_wcon_dominating(&c7, c7.vertices()).unwrap());
        for v in 0..7 {
            assert!(!is_wcon_dominating(&c7, c7.vertices().without(v)).unwrap());
        }
        assert!(is_wcon_dominating(&star(4).unwrap(), set(&[0])).unwrap());
    }

    #[test]
    fn perfect_examples() {
        assert!(is_perfect_connected_dominating(&star(5).unwrap(), set(&[0])).unwrap());
        // v4 sees only v3 and v5 sees only v0 inside D.
        assert!(is_perfect_connected_dominating(&cycle(6).unwrap(), set(&[0, 1, 2, 3])).unwrap());
        assert!(is_perfect_connected_dominating(&cycle(4).unwrap(), set(&[0, 1])).unwrap());
        // Under the closed reading, adjacent members see each other.
        assert!(!is_perfect_connected_dominating_under(&cycle(4).unwrap(), set(&[0, 1]), PerfectConvention::ClosedAll).unwrap());
        assert!(is_perfect_connected_dominating_under(&star(3).unwrap(), set(&[0]), PerfectConvention::ClosedAll).unwrap());
        assert!(!is_perfect_connected_dominating(&cycle(6).unwrap(), set(&[0, 3])).unwrap());
    }

    #[test]
    fn kind_round_trip() {
        for k in [DominationKind::Dominating, DominationKind::Connected, DominationKind::WeaklyConvex] {
            assert_eq!(k.to_string().parse::<DominationKind>().unwrap(), k);
        }
        assert_eq!(serde_json::to_string(&DominationKind::WeaklyConvex).unwrap(), "\"WEAKLY_CONVEX\"");
    }

    #[test]
    fn fast_and_public_predicates_agree() {
        let g = h_star().unwrap().graph;
        let ctx = SearchContext::new(&g);
        for bits in 1u64..(1 << 9) {
            let s = VertexSet::from_bits(bits);
            for kind in [DominationKind::Dominating, DominationKind::Connected, DominationKind::WeaklyConvex] {
                assert_eq!(ctx.accepts(kind, bits), satisfies(&g, kind, s).unwrap(), "{kind} {s}");
            }
        }
    }
}
