use crate::error::{DomError, Result};
use crate::graph::{blocks_and_bridges, distance_matrix, induced_subgraph, is_connected, Graph, VertexSet};

fn require_connected(g: &Graph) -> Result<()> {
    if is_connected(g) {
        Ok(())
    } else {
        Err(DomError::Disconnected)
    }
}

fn edges_inside(g: &Graph, set: VertexSet) -> usize {
    set.iter().map(|v| (g.neighbors(v) & set).len()).sum::<usize>() / 2
}

/// Every block is a single edge or a cycle (a 2-connected block whose edge
/// count equals its vertex count).
pub fn is_cactus(g: &Graph) -> Result<bool> {
    require_connected(g)?;
    Ok(blocks_and_bridges(g).blocks.iter().all(|&b| b.len() <= 2 || edges_inside(g, b) == b.len()))
}

/// Every block is a clique.
pub fn is_block_graph(g: &Graph) -> Result<bool> {
    require_connected(g)?;
    Ok(blocks_and_bridges(g).blocks.iter().all(|&b| g.is_clique(b)))
}

/// An induced `P_4` as `[a, b, c, d]`, if any.
pub fn find_induced_p4(g: &Graph) -> Option<[usize; 4]> {
    for (b, c) in g.edges() {
        for (b, c) in [(b, c), (c, b)] {
            let left = g.neighbors(b) - g.closed_neighbors(c);
            let right = g.neighbors(c) - g.closed_neighbors(b);
            for a in left.iter() {
                if let Some(d) = (right - g.closed_neighbors(a)).first() {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

/// No induced `P_4`.
pub fn is_cograph(g: &Graph) -> bool {
    find_induced_p4(g).is_none()
}

/// One reduction step on the remaining vertex set: a false twin, then a true
/// twin, then a pendant vertex, lowest index first.
fn reducible_vertex(g: &Graph, alive: VertexSet) -> Option<usize> {
    let open = |v: usize| g.neighbors(v) & alive;
    let closed = |v: usize| g.closed_neighbors(v) & alive;
    let twin = |same: &dyn Fn(usize, usize) -> bool| {
        alive.iter().find(|&u| alive.iter().any(|w| w != u && same(u, w)))
    };
    twin(&|u, w| open(u) == open(w))
        .or_else(|| twin(&|u, w| closed(u) == closed(w)))
        .or_else(|| alive.iter().find(|&v| open(v).len() == 1))
}

/// Recognition by pruning pendant vertices and twins; the graph is
/// distance-hereditary iff it shrinks to one vertex.
pub fn is_distance_hereditary(g: &Graph) -> Result<bool> {
    require_connected(g)?;
    let mut alive = g.vertices();
    while alive.len() > 1 {
        match reducible_vertex(g, alive) {
            Some(v) => alive = alive.without(v),
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// Largest order [`is_distance_hereditary_by_definition`] accepts.
pub const DH_ORACLE_TIER: usize = 12;

/// Checks the definition directly: every connected induced subgraph keeps
/// host distances.
pub fn is_distance_hereditary_by_definition(g: &Graph) -> Result<bool> {
    require_connected(g)?;
    if g.order() > DH_ORACLE_TIER {
        return Err(DomError::TierExceeded { order: g.order(), limit: DH_ORACLE_TIER });
    }
    let host = distance_matrix(g);
    for bits in 1..(1u64 << g.order()) {
        let set = VertexSet::from_bits(bits);
        let (sub, map) = induced_subgraph(g, set)?;
        if !is_connected(&sub) {
            continue;
        }
        let inner = distance_matrix(&sub);
        for i in 0..map.len() {
            for j in i + 1..map.len() {
                if inner.get(i, j) != host.get(map[i], map[j]) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Maximum cardinality search order (first visited first).
pub fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut weight = vec![0usize; n];
    let mut visited = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (g.vertices() - visited).iter().max_by_key(|&v| (weight[v], std::cmp::Reverse(v))).expect("vertex left");
        visited = visited.with(v);
        order.push(v);
        for w in (g.neighbors(v) - visited).iter() {
            weight[w] += 1;
        }
    }
    order
}

/// Reversed MCS order is a perfect elimination ordering iff the graph is chordal.
pub fn is_chordal(g: &Graph) -> bool {
    let mut earlier = VertexSet::EMPTY;
    for v in maximum_cardinality_search(g) {
        if !g.is_clique(g.neighbors(v) & earlier) {
            return false;
        }
        earlier = earlier.with(v);
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{complete, cycle, h_star, path, random_tree, star};

    fn bowtie() -> Graph {
        Graph::from_edge_list(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
    }

    fn paw() -> Graph {
        Graph::from_edge_list(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn cactus_examples() {
        assert!(is_cactus(&paw()).unwrap());
        assert!(!is_cactus(&complete(4).unwrap()).unwrap());
        assert!(is_cactus(&random_tree(12, 3).unwrap()).unwrap());
        assert!(is_cactus(&bowtie()).unwrap());
        let diamond = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(!is_cactus(&diamond).unwrap());
        assert_eq!(is_cactus(&Graph::empty(2).unwrap()), Err(DomError::Disconnected));
    }

    #[test]
    fn block_graph_examples() {
        assert!(is_block_graph(&bowtie()).unwrap());
        assert!(!is_block_graph(&cycle(4).unwrap()).unwrap());
        assert!(is_block_graph(&Graph::empty(1).unwrap()).unwrap());
    }

    #[test]
    fn cograph_examples() {
        assert!(!is_cograph(&path(4).unwrap()));
        assert!(is_cograph(&complete(4).unwrap()));
        assert!(is_cograph(&cycle(4).unwrap()));
        assert!(!is_cograph(&cycle(5).unwrap()));
    }

    #[test]
    fn distance_hereditary_examples() {
        for g in [random_tree(10, 1).unwrap(), star(5).unwrap(), cycle(4).unwrap(), complete(5).unwrap()] {
            assert!(is_distance_hereditary(&g).unwrap());
            assert!(is_distance_hereditary_by_definition(&g).unwrap());
        }
        for g in [cycle(5).unwrap(), cycle(6).unwrap(), h_star().unwrap().graph] {
            assert!(!is_distance_hereditary(&g).unwrap());
            assert!(!is_distance_hereditary_by_definition(&g).unwrap());
        }
    }

    #[test]
    fn chordal_examples() {
        assert!(is_chordal(&complete(4).unwrap()));
        assert!(!is_chordal(&cycle(4).unwrap()));
        assert!(is_chordal(&h_star().unwrap().graph));
        assert!(is_chordal(&path(6).unwrap()));
        assert!(!is_chordal(&cycle(7).unwrap()));
    }
}
