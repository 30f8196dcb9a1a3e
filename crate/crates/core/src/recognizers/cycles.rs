use serde::Serialize;

use crate::error::{DomError, Result};
use crate::graph::{Graph, VertexSet};

/// Default bound on the number of cycles [`enumerate_cycles`] may produce.
pub const CYCLE_CAP: u64 = 1_000_000;

/// A simple cycle listed in traversal order, starting at its smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleWitness {
    pub vertices: Vec<usize>,
    pub induced: bool,
}

impl CycleWitness {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Self {
        let induced = is_induced_cycle(g, &vertices);
        CycleWitness { vertices, induced }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn set(&self) -> VertexSet {
        VertexSet::from_vertices(self.vertices.iter().copied())
    }

    /// Cycle neighbours of the vertex at `position`.
    pub fn around(&self, position: usize) -> (usize, usize) {
        let k = self.vertices.len();
        (self.vertices[(position + k - 1) % k], self.vertices[(position + 1) % k])
    }

    /// Consecutive, distinct, closed up, at least three long.
    pub fn is_cycle_of(&self, g: &Graph) -> bool {
        let k = self.vertices.len();
        k >= 3 && self.set().len() == k && (0..k).all(|i| g.has_edge(self.vertices[i], self.vertices[(i + 1) % k]))
    }
}

fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let set = VertexSet::from_vertices(cycle.iter().copied());
    cycle.iter().all(|&v| (g.neighbors(v) & set).len() == 2)
}

/// Some induced cycle on at least `min_len` vertices, the first one met by a
/// search that grows induced paths from each start vertex in index order.
pub fn has_induced_cycle_at_least(g: &Graph, min_len: usize) -> Option<CycleWitness> {
    let min_len = min_len.max(3);
    for s in 0..g.order() {
        let mut path = vec![s];
        if let Some(c) = extend_induced(g, &mut path, VertexSet::EMPTY, min_len) {
            return Some(CycleWitness::new(g, c));
        }
    }
    None
}

/// `path` is an induced path starting at its minimum vertex; `interior_nbhd`
/// is the union of neighbourhoods of all path vertices except the first and last.
fn extend_induced(g: &Graph, path: &mut Vec<usize>, interior_nbhd: VertexSet, min_len: usize) -> Option<Vec<usize>> {
    let s = path[0];
    let last = *path.last().expect("nonempty path");
    let on_path = VertexSet::from_vertices(path.iter().copied());
    let candidates = (g.neighbors(last) - on_path - interior_nbhd).iter().filter(|&w| w > s);
    for w in candidates {
        if path.len() >= 2 && g.has_edge(w, s) {
            if path.len() + 1 >= min_len {
                let mut cycle = path.clone();
                cycle.push(w);
                return Some(cycle);
            }
            continue;
        }
        let grown = if path.len() >= 2 { interior_nbhd | g.neighbors(last) } else { interior_nbhd };
        path.push(w);
        let found = extend_induced(g, path, grown, min_len);
        path.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// All simple cycles whose length is in `lengths`, each reported once,
/// starting from its smallest vertex and oriented so the second vertex is
/// smaller than the last.
pub fn enumerate_cycles(g: &Graph, lengths: &[usize]) -> Result<Vec<CycleWitness>> {
    enumerate_cycles_capped(g, lengths, CYCLE_CAP)
}

pub fn enumerate_cycles_capped(g: &Graph, lengths: &[usize], cap: u64) -> Result<Vec<CycleWitness>> {
    let longest = lengths.iter().copied().max().unwrap_or(0);
    let mut out = Vec::new();
    if longest < 3 {
        return Ok(out);
    }
    for s in 0..g.order() {
        let mut path = vec![s];
        simple_paths(g, &mut path, longest, lengths, cap, &mut out)?;
    }
    Ok(out)
}

fn simple_paths(g: &Graph, path: &mut Vec<usize>, longest: usize, lengths: &[usize], cap: u64, out: &mut Vec<CycleWitness>) -> Result<()> {
    let s = path[0];
    let last = *path.last().expect("nonempty path");
    if path.len() >= 3 && lengths.contains(&path.len()) && g.has_edge(last, s) && path[1] < last {
        if out.len() as u64 >= cap {
            return Err(DomError::CycleCapExceeded(cap));
        }
        out.push(CycleWitness::new(g, path.clone()));
    }
    if path.len() == longest {
        return Ok(());
    }
    let on_path = VertexSet::from_vertices(path.iter().copied());
    for w in (g.neighbors(last) - on_path).iter().filter(|&w| w > s) {
        path.push(w);
        simple_paths(g, path, longest, lengths, cap, out)?;
        path.pop();
    }
    Ok(())
}
