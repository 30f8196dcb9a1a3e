use std::fmt;

use serde::{Serialize, Serializer};

use super::{Graph, VertexSet};
use crate::error::Result;

/// A shortest-path length, or the marker for vertices in other components.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Distance {
    Finite(u32),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => f.write_str("UNREACHABLE"),
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => s.serialize_u32(*d),
            Distance::Unreachable => s.serialize_str("UNREACHABLE"),
        }
    }
}

/// Length of a shortest cycle, or the marker for forests.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Girth {
    Finite(u32),
    Acyclic,
}

impl Girth {
    /// True for forests and for graphs whose shortest cycle has at least `len` vertices.
    pub fn at_least(self, len: u32) -> bool {
        match self {
            Girth::Finite(g) => g >= len,
            Girth::Acyclic => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Acyclic => f.write_str("ACYCLIC"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u32(*g),
            Girth::Acyclic => s.serialize_str("ACYCLIC"),
        }
    }
}

/// BFS distances from one source.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(transparent)]
pub struct DistanceRow(pub Vec<Distance>);

impl DistanceRow {
    pub fn get(&self, v: usize) -> Distance {
        self.0[v]
    }
}

/// BFS layers from `source`, restricted to `within`. Layer `d` holds the
/// vertices at distance exactly `d` in the subgraph induced by `within`.
pub(crate) fn bfs_layers(g: &Graph, within: VertexSet, source: usize) -> Vec<VertexSet> {
    let mut layers = vec![VertexSet::singleton(source)];
    let mut seen = VertexSet::singleton(source);
    loop {
        let frontier = *layers.last().expect("nonempty");
        let next = (g.closed_neighborhood_of(frontier) & within) - seen;
        if next.is_empty() {
            return layers;
        }
        seen |= next;
        layers.push(next);
    }
}

pub fn distances_from(g: &Graph, v: usize) -> Result<DistanceRow> {
    g.check_vertex(v)?;
    let mut row = vec![Distance::Unreachable; g.order()];
    for (d, layer) in bfs_layers(g, g.vertices(), v).into_iter().enumerate() {
        for u in layer {
            row[u] = Distance::Finite(d as u32);
        }
    }
    Ok(DistanceRow(row))
}

/// All-pairs distances. Stored as bytes with `u8::MAX` for unreachable pairs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<u8>,
}

const UNREACHABLE: u8 = u8::MAX;

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Distance {
        match self.entries[u * self.n + v] {
            UNREACHABLE => Distance::Unreachable,
            d => Distance::Finite(d as u32),
        }
    }

    pub fn row(&self, u: usize) -> DistanceRow {
        DistanceRow((0..self.n).map(|v| self.get(u, v)).collect())
    }

    /// Vertices at distance exactly `d` from `u`.
    pub fn ring(&self, u: usize, d: u32) -> VertexSet {
        (0..self.n).filter(|&v| self.entries[u * self.n + v] as u32 == d).collect()
    }

    pub fn diameter(&self) -> Distance {
        self.entries
            .iter()
            .map(|&d| if d == UNREACHABLE { Distance::Unreachable } else { Distance::Finite(d as u32) })
            .max()
            .unwrap_or(Distance::Finite(0))
    }
}

pub fn distance_matrix(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let mut entries = vec![UNREACHABLE; n * n];
    for s in 0..n {
        for (d, layer) in bfs_layers(g, g.vertices(), s).into_iter().enumerate() {
            for v in layer {
                entries[s * n + v] = d as u8;
            }
        }
    }
    DistanceMatrix { n, entries }
}

pub fn diameter(g: &Graph) -> Distance {
    distance_matrix(g).diameter()
}

/// Shortest cycle length via one BFS per root: a non-tree edge `xy` met from
/// root `r` closes a closed walk of length `d(x) + d(y) + 1`, and the minimum
/// over all roots is attained by a shortest cycle through its own vertices.
pub fn girth(g: &Graph) -> Girth {
    let n = g.order();
    let mut best = u32::MAX;
    let mut dist = vec![u32::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::with_capacity(n);
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = u32::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            if 2 * dist[x] + 1 >= best {
                break;
            }
            for y in g.neighbors(x) {
                if dist[y] == u32::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    best = best.min(dist[x] + dist[y] + 1);
                }
            }
        }
    }
    if best == u32::MAX {
        Girth::Acyclic
    } else {
        Girth::Finite(best)
    }
}
