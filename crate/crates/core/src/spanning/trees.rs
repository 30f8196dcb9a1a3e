use crate::error::{DomError, Result};
use crate::graph::{is_connected, Graph};

/// Default bound on how many spanning trees a stream may yield.
pub const TREE_CAP: u64 = 1_000_000;

struct Frame {
    next_edge: usize,
    forest: Vec<u64>,
    remaining: Vec<u64>,
    tree_edges: usize,
}

/// Lazily enumerates spanning trees by branching on each edge in order:
/// include it (unless it would close a cycle) or drop it (unless it is a
/// bridge of what remains). Every branch ends in exactly one tree.
pub struct SpanningTrees {
    n: usize,
    edges: Vec<(usize, usize)>,
    stack: Vec<Frame>,
    yielded: u64,
    cap: u64,
    failed: bool,
}

pub fn spanning_trees(g: &Graph) -> Result<SpanningTrees> {
    spanning_trees_capped(g, TREE_CAP)
}

pub fn spanning_trees_capped(g: &Graph, cap: u64) -> Result<SpanningTrees> {
    if !is_connected(g) {
        return Err(DomError::Disconnected);
    }
    let start = Frame { next_edge: 0, forest: vec![0; g.order()], remaining: g.masks().to_vec(), tree_edges: 0 };
    Ok(SpanningTrees { n: g.order(), edges: g.edges(), stack: vec![start], yielded: 0, cap, failed: false })
}

/// Vertices reachable from `start` along `masks`.
fn reach(masks: &[u64], start: usize) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = masks[v] & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen
}

fn connected_masks(masks: &[u64]) -> bool {
    reach(masks, 0).count_ones() as usize == masks.len()
}

fn joined(forest: &[u64], u: usize, v: usize) -> bool {
    reach(forest, u) >> v & 1 == 1
}

impl Iterator for SpanningTrees {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        while let Some(frame) = self.stack.pop() {
            if frame.tree_edges + 1 == self.n {
                if self.yielded == self.cap {
                    self.failed = true;
                    return Some(Err(DomError::TreeCountCapExceeded(self.cap)));
                }
                self.yielded += 1;
                return Some(Ok(Graph::from_masks(frame.forest).expect("forest masks are symmetric")));
            }
            let (u, v) = self.edges[frame.next_edge];
            let mut dropped = frame.remaining.clone();
            dropped[u] &= !(1 << v);
            dropped[v] &= !(1 << u);
            // Pushed in reverse so the include branch is explored first.
            if connected_masks(&dropped) {
                self.stack.push(Frame {
                    next_edge: frame.next_edge + 1,
                    forest: frame.forest.clone(),
                    remaining: dropped,
                    tree_edges: frame.tree_edges,
                });
            }
            if !joined(&frame.forest, u, v) {
                let mut forest = frame.forest;
                forest[u] |= 1 << v;
                forest[v] |= 1 << u;
                self.stack.push(Frame {
                    next_edge: frame.next_edge + 1,
                    forest,
                    remaining: frame.remaining,
                    tree_edges: frame.tree_edges + 1,
                });
            }
        }
        None
    }
}

/// Weakly convex domination number of a tree: `n - n_L`, or 1 below three vertices.
pub fn tree_gamma_wcon(t: &Graph) -> Result<usize> {
    if !crate::recognizers::is_tree(t) {
        return Err(DomError::NotATree);
    }
    let n = t.order();
    if n <= 2 {
        return Ok(1);
    }
    Ok(n - (0..n).filter(|&v| t.degree(v) == 1).count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::{minimum_wcon_dominating, SolverConfig};
    use crate::gadgets::{complete, cycle, random_tree, spider, star};
    use crate::recognizers::is_tree;

    fn count(g: &Graph) -> usize {
        spanning_trees(g).unwrap().map(|t| t.unwrap()).inspect(|t| assert!(is_tree(t))).count()
    }

    #[test]
    fn tree_counts() {
        for (n, want) in [(1, 1), (2, 1), (3, 3), (4, 16), (5, 125)] {
            assert_eq!(count(&complete(n).unwrap()), want);
        }
        for n in 3..9 {
            assert_eq!(count(&cycle(n).unwrap()), n);
        }
        assert_eq!(count(&random_tree(9, 2).unwrap()), 1);
    }

    #[test]
    fn trees_are_distinct() {
        let mut seen: Vec<Vec<(usize, usize)>> = spanning_trees(&complete(5).unwrap()).unwrap().map(|t| t.unwrap().edges()).collect();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 125);
    }

    #[test]
    fn cap_is_enforced() {
        let mut it = spanning_trees_capped(&complete(5).unwrap(), 10).unwrap();
        assert_eq!(it.by_ref().take(10).filter(|t| t.is_ok()).count(), 10);
        assert_eq!(it.next().unwrap().unwrap_err(), DomError::TreeCountCapExceeded(10));
        assert!(it.next().is_none());
        assert!(spanning_trees(&Graph::empty(2).unwrap()).is_err());
    }

    #[test]
    fn tree_formula() {
        assert_eq!(tree_gamma_wcon(&crate::gadgets::path(5).unwrap()).unwrap(), 3);
        assert_eq!(tree_gamma_wcon(&star(6).unwrap()).unwrap(), 1);
        assert_eq!(tree_gamma_wcon(&spider(3, 2).unwrap()).unwrap(), 4);
        assert_eq!(tree_gamma_wcon(&cycle(4).unwrap()), Err(DomError::NotATree));
        let cfg = SolverConfig::default();
        for seed in 0..40 {
            let t = random_tree(3 + (seed as usize % 15), seed).unwrap();
            assert_eq!(tree_gamma_wcon(&t).unwrap(), minimum_wcon_dominating(&t, &cfg).unwrap().value);
        }
    }
}
