use serde::Serialize;

use super::{Graph, VertexSet};
use crate::error::{DomError, Result};

/// Vertices reachable from `start` inside the subgraph induced by `within`.
pub fn reach_within(g: &Graph, within: VertexSet, start: usize) -> VertexSet {
    let mut seen = VertexSet::singleton(start);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let next = (frontier.iter().fold(VertexSet::EMPTY, |acc, v| acc | g.neighbors(v)) & within) - seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// Whether `set` induces a connected subgraph. The empty set does not.
pub(crate) fn induces_connected(g: &Graph, set: VertexSet) -> bool {
    match set.first() {
        Some(v) => reach_within(g, set, v) == set,
        None => false,
    }
}

pub fn is_connected(g: &Graph) -> bool {
    reach_within(g, g.vertices(), 0) == g.vertices()
}

/// Connected components, ordered by their smallest vertex.
pub fn components(g: &Graph) -> Vec<VertexSet> {
    let mut rest = g.vertices();
    let mut out = Vec::new();
    while let Some(v) = rest.first() {
        let comp = reach_within(g, rest, v);
        rest = rest - comp;
        out.push(comp);
    }
    out
}

/// Subgraph induced by `set`, plus the map from new indices to old ones.
pub fn induced_subgraph(g: &Graph, set: VertexSet) -> Result<(Graph, Vec<usize>)> {
    if set.is_empty() {
        return Err(DomError::EmptySet);
    }
    g.check_set(set)?;
    let map = set.to_vec();
    let adj = map
        .iter()
        .map(|&old| {
            map.iter()
                .enumerate()
                .filter(|&(_, &w)| g.has_edge(old, w))
                .fold(0u64, |acc, (i, _)| acc | (1 << i))
        })
        .collect();
    Ok((Graph::from_masks(adj)?, map))
}

/// Leaf, support, cut-vertex and simplicial sets together with the degree sequence.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct VertexRoles {
    pub leaves: VertexSet,
    pub supports: VertexSet,
    pub cut_vertices: VertexSet,
    pub simplicial: VertexSet,
    pub degrees: Vec<usize>,
}

pub fn vertex_roles(g: &Graph) -> VertexRoles {
    let degrees: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    let leaves: VertexSet = (0..g.order()).filter(|&v| degrees[v] == 1).collect();
    let supports = leaves.iter().fold(VertexSet::EMPTY, |acc, l| acc | g.neighbors(l));
    let simplicial = (0..g.order()).filter(|&v| g.is_clique(g.neighbors(v))).collect();
    VertexRoles { leaves, supports, cut_vertices: cut_vertices(g), simplicial, degrees }
}

pub fn cut_vertices(g: &Graph) -> VertexSet {
    Lowpoint::run(g).cut
}

/// Biconnected blocks (isolated vertices form singleton blocks) and bridges.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<VertexSet>,
    pub bridges: Vec<(usize, usize)>,
}

pub fn blocks_and_bridges(g: &Graph) -> BlockDecomposition {
    let mut blocks = Lowpoint::run(g).blocks;
    blocks.sort();
    let mut bridges: Vec<(usize, usize)> = blocks
        .iter()
        .filter(|b| b.len() == 2)
        .map(|b| {
            let v = b.to_vec();
            (v[0], v[1])
        })
        .collect();
    bridges.sort();
    BlockDecomposition { blocks, bridges }
}

const UNVISITED: u32 = u32::MAX;

/// Hopcroft–Tarjan lowpoint search with an edge stack.
struct Lowpoint<'g> {
    g: &'g Graph,
    disc: Vec<u32>,
    low: Vec<u32>,
    clock: u32,
    edges: Vec<(usize, usize)>,
    blocks: Vec<VertexSet>,
    cut: VertexSet,
}

impl<'g> Lowpoint<'g> {
    fn run(g: &'g Graph) -> Self {
        let n = g.order();
        let mut state = Lowpoint {
            g,
            disc: vec![UNVISITED; n],
            low: vec![0; n],
            clock: 0,
            edges: Vec::new(),
            blocks: Vec::new(),
            cut: VertexSet::EMPTY,
        };
        for root in 0..n {
            if state.disc[root] == UNVISITED {
                if g.degree(root) == 0 {
                    state.disc[root] = state.clock;
                    state.clock += 1;
                    state.blocks.push(VertexSet::singleton(root));
                } else {
                    state.visit(root, None);
                }
            }
        }
        state
    }

    fn visit(&mut self, u: usize, parent: Option<usize>) {
        self.disc[u] = self.clock;
        self.low[u] = self.clock;
        self.clock += 1;
        let mut children = 0;
        for v in self.g.neighbors(u) {
            if self.disc[v] == UNVISITED {
                children += 1;
                self.edges.push((u, v));
                self.visit(v, Some(u));
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    if parent.is_some() || children > 1 {
                        self.cut.insert(u);
                    }
                    let mut block = VertexSet::EMPTY;
                    while let Some((a, b)) = self.edges.pop() {
                        block = block.with(a).with(b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if Some(v) != parent && self.disc[v] < self.disc[u] {
                self.edges.push((u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{complete, cycle, path, star};

    fn bowtie() -> Graph {
        Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap()
    }

    fn paw() -> Graph {
        Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap()
    }

    #[test]
    fn path_roles() {
        let r = vertex_roles(&path(3).unwrap());
        let mid = VertexSet::singleton(1);
        let ends = VertexSet::from_vertices([0, 2]);
        assert_eq!((r.cut_vertices, r.leaves, r.supports, r.simplicial), (mid, ends, mid, ends));
    }

    #[test]
    fn cycle_roles() {
        let r = vertex_roles(&cycle(5).unwrap());
        assert!(r.leaves.is_empty() && r.supports.is_empty() && r.cut_vertices.is_empty() && r.simplicial.is_empty());
        assert_eq!(r.degrees, vec![2; 5]);
    }

    #[test]
    fn star_roles() {
        let r = vertex_roles(&star(4).unwrap());
        let center = VertexSet::singleton(0);
        let outer = VertexSet::from_vertices(1..5);
        assert_eq!((r.supports, r.cut_vertices, r.leaves, r.simplicial), (center, center, outer, outer));
    }

    #[test]
    fn block_examples() {
        let b = blocks_and_bridges(&bowtie());
        assert_eq!((b.blocks.len(), b.bridges.len()), (2, 0));
        let b = blocks_and_bridges(&path(4).unwrap());
        assert_eq!((b.blocks.len(), b.bridges), (3, vec![(0, 1), (1, 2), (2, 3)]));
        let b = blocks_and_bridges(&paw());
        assert_eq!((b.blocks.len(), b.bridges), (2, vec![(2, 3)]));
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(blocks_and_bridges(&k1).blocks, vec![VertexSet::singleton(0)]);
    }

    #[test]
    fn induced_examples() {
        let c6 = cycle(6).unwrap();
        let (whole, map) = induced_subgraph(&c6, c6.vertices()).unwrap();
        assert_eq!(whole, c6);
        assert_eq!(map, (0..6).collect::<Vec<_>>());
        let (p3, _) = induced_subgraph(&c6, VertexSet::from_vertices([0, 1, 2])).unwrap();
        assert_eq!(p3, path(3).unwrap());
        let (two, map) = induced_subgraph(&cycle(5).unwrap(), VertexSet::from_vertices([0, 2])).unwrap();
        assert_eq!((two.size(), map), (0, vec![0, 2]));
        assert!(!is_connected(&two));
        assert_eq!(induced_subgraph(&c6, VertexSet::EMPTY).unwrap_err(), DomError::EmptySet);
    }

    #[test]
    fn connectivity() {
        assert!(is_connected(&Graph::empty(1).unwrap()));
        let two = Graph::empty(2).unwrap();
        assert!(!is_connected(&two));
        assert_eq!(components(&two).len(), 2);
        assert!(is_connected(&complete(5).unwrap()));
    }
}
