//! Immutable simple graphs on at most 64 vertices.
//!
//! Adjacency is one `u64` neighbor mask per vertex, which keeps every
//! set-valued primitive (closed neighborhoods, reachability, domination)
//! a handful of word operations.

mod io;
mod metric;
mod set;
pub(crate) mod structure;

pub use io::{edge_list_decode, edge_list_encode, graph6_decode, graph6_decode_with_limit, graph6_encode, read_graph6_lines, to_dot};
pub use metric::{diameter, distance_matrix, distances_from, girth, Distance, DistanceMatrix, DistanceRow, Girth};
pub use set::{Members, VertexSet};
pub use structure::{blocks_and_bridges, components, cut_vertices, induced_subgraph, is_connected, reach_within, vertex_roles, BlockDecomposition, VertexRoles};

use crate::error::{DomError, Result};

/// Largest order representable with single-word masks.
pub const MAX_TIER: usize = 64;

/// Vertex-count limit applied when graphs are built from external input.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Tier(usize);

impl Tier {
    pub const DEFAULT: Tier = Tier(MAX_TIER);

    pub fn new(limit: usize) -> Result<Self> {
        if limit == 0 || limit > MAX_TIER {
            return Err(DomError::TierExceeded { order: limit, limit: MAX_TIER });
        }
        Ok(Tier(limit))
    }

    /// Reads `DOMLAB_TIER`, falling back to the default when unset.
    pub fn from_env() -> Result<Self> {
        match std::env::var("DOMLAB_TIER") {
            Ok(raw) => {
                let limit = raw
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| DomError::InvalidConfig(format!("DOMLAB_TIER={raw:?} is not a count")))?;
                Tier::new(limit)
            }
            Err(_) => Ok(Tier::DEFAULT),
        }
    }

    pub fn limit(self) -> usize {
        self.0
    }

    fn admit(self, n: usize) -> Result<()> {
        if n > self.0 {
            Err(DomError::TierExceeded { order: n, limit: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for Tier {
    fn default() -> Self {
        Tier::DEFAULT
    }
}

/// A simple undirected graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    m: usize,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(DomError::ParameterOutOfRange("graph order must be at least 1".into()));
        }
        Tier::DEFAULT.admit(n)?;
        Ok(Graph { n, adj: vec![0; n], m: 0 })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::from_edge_list_with_tier(n, edges, Tier::DEFAULT)
    }

    pub fn from_edge_list_with_tier(n: usize, edges: &[(usize, usize)], tier: Tier) -> Result<Self> {
        tier.admit(n)?;
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(DomError::IndexOutOfRange { index: x, order: n });
                }
            }
            if u == v {
                return Err(DomError::SelfLoop(u));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        g.m = g.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2;
        Ok(g)
    }

    /// Builds a graph from neighbor masks, validating symmetry and irreflexivity.
    pub fn from_masks(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n == 0 {
            return Err(DomError::ParameterOutOfRange("graph order must be at least 1".into()));
        }
        Tier::DEFAULT.admit(n)?;
        let universe = VertexSet::full(n).bits();
        for (v, &mask) in adj.iter().enumerate() {
            if mask & !universe != 0 {
                let index = 63 - mask.leading_zeros() as usize;
                return Err(DomError::IndexOutOfRange { index, order: n });
            }
            if mask & (1 << v) != 0 {
                return Err(DomError::SelfLoop(v));
            }
            for u in VertexSet::from_bits(mask) {
                if adj[u] & (1 << v) == 0 {
                    return Err(DomError::ParameterOutOfRange(format!("adjacency not symmetric at ({v},{u})")));
                }
            }
        }
        let m = adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2;
        Ok(Graph { n, adj, m })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn masks(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v])
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v] | (1 << v))
    }

    /// Union of closed neighborhoods of every member of `set`.
    pub fn closed_neighborhood_of(&self, set: VertexSet) -> VertexSet {
        set.iter().fold(set, |acc, v| acc | self.neighbors(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            let higher = self.adj[u] & !VertexSet::full(u + 1).bits();
            out.extend(VertexSet::from_bits(higher).iter().map(|v| (u, v)));
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.m == self.n * (self.n - 1) / 2
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(DomError::IndexOutOfRange { index: v, order: self.n })
        } else {
            Ok(())
        }
    }

    pub fn check_set(&self, set: VertexSet) -> Result<()> {
        VertexSet::within(set.bits(), self.n).map(|_| ())
    }

    /// Copy of the graph without edge `uv`.
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(DomError::NoSuchEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        g.m -= 1;
        Ok(g)
    }

    /// Copy of the graph with edge `uv` added (no-op if present).
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(DomError::SelfLoop(u));
        }
        let mut g = self.clone();
        if !g.has_edge(u, v) {
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
            g.m += 1;
        }
        Ok(g)
    }

    /// Whether the induced subgraph on `set` is a clique.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| (set.without(v)).is_subset(self.neighbors(v)))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_builds_triangle() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.size(), 3);
        assert!(g.is_complete());
    }

    #[test]
    fn single_vertex() {
        let g = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!((g.order(), g.size()), (1, 0));
    }

    #[test]
    fn duplicates_collapse() {
        let g = Graph::from_edge_list(4, &[(0, 1), (0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.size(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        let reversed = Graph::from_edge_list(4, &[(1, 0), (2, 1), (3, 2)]).unwrap();
        assert_eq!(g, reversed);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(DomError::IndexOutOfRange { index: 3, order: 3 })
        );
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(DomError::SelfLoop(1)));
        assert_eq!(
            Graph::from_edge_list(65, &[]),
            Err(DomError::TierExceeded { order: 65, limit: 64 })
        );
        let tier = Tier::new(10).unwrap();
        assert_eq!(
            Graph::from_edge_list_with_tier(11, &[], tier),
            Err(DomError::TierExceeded { order: 11, limit: 10 })
        );
        assert!(Graph::from_edge_list(64, &[(0, 63)]).is_ok());
    }

    #[test]
    fn edge_removal_is_pure() {
        let c4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let p4 = c4.remove_edge(3, 0).unwrap();
        assert_eq!(p4, Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap());
        assert_eq!(c4.size(), 4);
        assert_eq!(p4.add_edge(0, 3).unwrap(), c4);
        assert_eq!(p4.remove_edge(0, 3), Err(DomError::NoSuchEdge(0, 3)));
    }

    #[test]
    fn masks_are_validated() {
        assert!(Graph::from_masks(vec![0b10, 0b01]).is_ok());
        assert!(Graph::from_masks(vec![0b10, 0b00]).is_err());
        assert_eq!(Graph::from_masks(vec![0b1]), Err(DomError::SelfLoop(0)));
    }
}
