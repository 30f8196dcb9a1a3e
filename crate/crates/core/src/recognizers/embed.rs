use crate::gadgets::h_star;
use crate::graph::{Graph, VertexSet};

/// An induced copy of `h` in `g`: `result[i]` is the image of vertex `i` of
/// `h`. The first embedding in lexicographic order of images is returned, after
/// checking it preserves both adjacency and non-adjacency.
pub fn contains_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if h.order() > g.order() {
        return None;
    }
    let order = search_order(h);
    let mut image = vec![usize::MAX; h.order()];
    let found = place(g, h, &order, 0, VertexSet::EMPTY, &mut image);
    if found {
        assert!(is_induced_embedding(g, h, &image), "embedding search returned a bad map");
        Some(image)
    } else {
        None
    }
}

/// Pattern vertices ordered so each one (after the first of its component)
/// has an earlier neighbour, highest degree first.
fn search_order(h: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(h.order());
    let mut placed = VertexSet::EMPTY;
    while order.len() < h.order() {
        let frontier = h.closed_neighborhood_of(placed) - placed;
        let pool = if frontier.is_empty() { h.vertices() - placed } else { frontier };
        let next = pool.iter().max_by_key(|&v| (h.degree(v), std::cmp::Reverse(v))).expect("vertex left");
        order.push(next);
        placed = placed.with(next);
    }
    order
}

fn place(g: &Graph, h: &Graph, order: &[usize], depth: usize, used: VertexSet, image: &mut [usize]) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let mut candidates = g.vertices() - used;
    for &u in &order[..depth] {
        let nbrs = g.neighbors(image[u]);
        candidates = if h.has_edge(u, v) { candidates & nbrs } else { candidates - nbrs };
    }
    for c in candidates.iter().filter(|&c| g.degree(c) >= h.degree(v)) {
        image[v] = c;
        if place(g, h, order, depth + 1, used.with(c), image) {
            return true;
        }
    }
    image[v] = usize::MAX;
    false
}

pub fn is_induced_embedding(g: &Graph, h: &Graph, image: &[usize]) -> bool {
    let distinct = VertexSet::from_vertices(image.iter().copied().filter(|&x| x < g.order())).len() == h.order();
    distinct
        && image.len() == h.order()
        && (0..h.order()).all(|i| (i + 1..h.order()).all(|j| h.has_edge(i, j) == g.has_edge(image[i], image[j])))
}

/// The image of an induced `H*`, if there is one.
pub fn find_h_star(g: &Graph) -> Option<VertexSet> {
    let hs = h_star().expect("fixed gadget builds").graph;
    contains_induced(g, &hs).map(VertexSet::from_vertices)
}

pub fn is_h_star_free(g: &Graph) -> bool {
    find_h_star(g).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{complete, cycle, gap_gadget, h_prime_a, path, random_connected};

    #[test]
    fn spec_examples() {
        assert!(contains_induced(&cycle(5).unwrap(), &path(4).unwrap()).is_some());
        assert!(contains_induced(&complete(4).unwrap(), &cycle(4).unwrap()).is_none());
        let hs = h_star().unwrap().graph;
        let img = contains_induced(&hs, &h_prime_a().unwrap().graph).unwrap();
        assert!(is_induced_embedding(&hs, &h_prime_a().unwrap().graph, &img));
        assert!(!is_h_star_free(&hs));
        assert_eq!(find_h_star(&hs), Some(hs.vertices()));
    }

    #[test]
    fn small_graphs_are_h_star_free() {
        for seed in 0..50 {
            assert!(is_h_star_free(&random_connected(8, 0.4, seed).unwrap()));
        }
    }

    #[test]
    fn gap_gadget_h_star_status() {
        // Frozen from the checker. The gadget has a single triangle (x1 v1 u1)
        // while H* has three, so no induced copy can exist.
        assert!(is_h_star_free(&gap_gadget(6).unwrap().graph));
    }

    #[test]
    fn pattern_larger_than_host() {
        assert!(contains_induced(&path(3).unwrap(), &path(4).unwrap()).is_none());
    }
}
