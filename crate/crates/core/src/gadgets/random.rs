//! Seeded samplers for property-test and harness corpora. All of them are
//! deterministic per seed (ChaCha8).

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{DomError, Result};
use crate::graph::{distance_matrix, Distance, Graph};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn tree_edges(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    match n {
        1 => Vec::new(),
        2 => vec![(0, 1)],
        _ => {
            // Uniform labeled tree from a random Prüfer sequence.
            let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            let mut degree = vec![1usize; n];
            for &c in &code {
                degree[c] += 1;
            }
            let mut edges = Vec::with_capacity(n - 1);
            for &c in &code {
                let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
                edges.push((leaf, c));
                degree[leaf] -= 1;
                degree[c] -= 1;
            }
            let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
            edges.push((rest[0], rest[1]));
            edges
        }
    }
}

pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(DomError::ParameterOutOfRange("tree needs n >= 1".into()));
    }
    Graph::from_edge_list(n, &tree_edges(n, &mut rng(seed)))
}

/// Random spanning tree plus every other pair independently with probability `p`.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 || !(0.0..=1.0).contains(&p) {
        return Err(DomError::ParameterOutOfRange("connected sampler needs n >= 1 and p in [0, 1]".into()));
    }
    let mut r = rng(seed);
    let mut g = Graph::from_edge_list(n, &tree_edges(n, &mut r))?;
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && r.gen_bool(p) {
                g = g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Random tree plus one random non-edge, closing exactly one cycle.
pub fn random_unicyclic(n: usize, seed: u64) -> Result<Graph> {
    if n < 3 {
        return Err(DomError::ParameterOutOfRange("unicyclic graph needs n >= 3".into()));
    }
    let mut r = rng(seed);
    let tree = Graph::from_edge_list(n, &tree_edges(n, &mut r))?;
    let non_edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !tree.has_edge(u, v)).collect();
    let &(u, v) = non_edges.choose(&mut r).expect("a tree on >= 3 vertices has a non-edge");
    tree.add_edge(u, v)
}

/// Connected cactus grown by repeatedly picking an existing vertex and hanging
/// either a pendant edge or (with probability `cycle_bias`) a fresh cycle of
/// length 3..=9 off it.
pub fn random_cactus(n: usize, cycle_bias: f64, seed: u64) -> Result<Graph> {
    if n == 0 || !(0.0..=1.0).contains(&cycle_bias) {
        return Err(DomError::ParameterOutOfRange("cactus sampler needs n >= 1 and bias in [0, 1]".into()));
    }
    let mut r = rng(seed);
    let mut edges = Vec::new();
    let mut count = 1;
    while count < n {
        let anchor = r.gen_range(0..count);
        let room = n - count;
        if room >= 2 && r.gen_bool(cycle_bias) {
            let len = r.gen_range(3..=(room + 1).min(9));
            let mut prev = anchor;
            for _ in 0..len - 1 {
                edges.push((prev, count));
                prev = count;
                count += 1;
            }
            edges.push((prev, anchor));
        } else {
            edges.push((anchor, count));
            count += 1;
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// Random tree with up to `extra_edges` chords added, each between vertices at
/// distance at least `min_girth - 1`, so the result has girth `>= min_girth`.
pub fn random_high_girth(n: usize, extra_edges: usize, min_girth: u32, seed: u64) -> Result<Graph> {
    if n == 0 || min_girth < 3 {
        return Err(DomError::ParameterOutOfRange("high-girth sampler needs n >= 1 and min_girth >= 3".into()));
    }
    let mut r = rng(seed);
    let mut g = Graph::from_edge_list(n, &tree_edges(n, &mut r))?;
    for _ in 0..extra_edges {
        let dm = distance_matrix(&g);
        let far: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| matches!(dm.get(u, v), Distance::Finite(d) if d + 1 >= min_girth))
            .collect();
        match far.choose(&mut r) {
            Some(&(u, v)) => g = g.add_edge(u, v)?,
            None => break,
        }
    }
    Ok(g)
}
