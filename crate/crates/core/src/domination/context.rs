use super::DominationKind;
use crate::graph::{distance_matrix, vertex_roles, Graph, VertexSet};

/// Precomputed closed neighborhoods and distance rings for one graph, so the
/// membership tests in a solver's hot loop are pure mask arithmetic.
pub(crate) struct SearchContext<'g> {
    pub g: &'g Graph,
    closed: Vec<u64>,
    /// `rings[a][d]`: vertices at distance exactly `d` from `a` in the host graph.
    rings: Vec<Vec<u64>>,
    all: u64,
}

impl<'g> SearchContext<'g> {
    pub fn new(g: &'g Graph) -> Self {
        let n = g.order();
        let closed = (0..n).map(|v| g.closed_neighbors(v).bits()).collect();
        let dm = distance_matrix(g);
        let rings = (0..n)
            .map(|a| {
                let mut by_dist = Vec::new();
                for b in 0..n {
                    if let Some(d) = dm.get(a, b).finite() {
                        let d = d as usize;
                        if by_dist.len() <= d {
                            by_dist.resize(d + 1, 0u64);
                        }
                        by_dist[d] |= 1 << b;
                    }
                }
                by_dist
            })
            .collect();
        SearchContext { g, closed, rings, all: g.vertices().bits() }
    }

    pub fn coverage(&self, set: u64) -> u64 {
        let mut cov = 0;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            cov |= self.closed[v];
            rest &= rest - 1;
        }
        cov
    }

    pub fn closed(&self, v: usize) -> u64 {
        self.closed[v]
    }

    pub fn dominates(&self, set: u64) -> bool {
        self.coverage(set) == self.all
    }

    pub fn connected(&self, set: u64) -> bool {
        if set == 0 {
            return false;
        }
        let mut seen = set & set.wrapping_neg();
        let mut frontier = seen;
        while frontier != 0 {
            let next = self.coverage(frontier) & set & !seen;
            seen |= next;
            frontier = next;
        }
        seen == set
    }

    /// Every pair of members keeps its host distance inside the induced
    /// subgraph (which also forces the induced subgraph to be connected).
    pub fn isometric(&self, set: u64) -> bool {
        let mut sources = set;
        while sources != 0 {
            let a = sources.trailing_zeros() as usize;
            sources &= sources - 1;
            let rings = &self.rings[a];
            let mut seen = 1u64 << a;
            let mut frontier = seen;
            let mut d = 0;
            while frontier != 0 {
                d += 1;
                let next = self.coverage(frontier) & set & !seen;
                if next == 0 {
                    break;
                }
                if d >= rings.len() || next & !rings[d] != 0 {
                    return false;
                }
                seen |= next;
                frontier = next;
            }
            if seen != set {
                return false;
            }
        }
        true
    }

    pub fn accepts(&self, kind: DominationKind, set: u64) -> bool {
        if !self.dominates(set) {
            return false;
        }
        match kind {
            DominationKind::Dominating => true,
            DominationKind::Connected => self.connected(set),
            DominationKind::WeaklyConvex => self.isometric(set),
        }
    }
}

/// Vertices every minimum set must contain / must avoid.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub(crate) struct Forcing {
    pub forced_in: VertexSet,
    pub forced_out: VertexSet,
}

/// Cut-vertices are in and simplicial vertices are out of every minimum
/// connected or weakly convex dominating set of a non-complete graph on at
/// least three vertices.
pub(crate) fn forcing(g: &Graph, kind: DominationKind, enabled: bool) -> Forcing {
    if !enabled || kind == DominationKind::Dominating || g.order() < 3 || g.is_complete() {
        return Forcing::default();
    }
    let roles = vertex_roles(g);
    Forcing { forced_in: roles.cut_vertices, forced_out: roles.simplicial }
}
