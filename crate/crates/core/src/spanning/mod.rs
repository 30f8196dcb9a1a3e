//! Spanning-tree spectra of the weakly convex domination number and
//! edge-removal sweeps.

mod trees;

use rayon::prelude::*;
use serde::Serialize;

pub use trees::{spanning_trees, spanning_trees_capped, tree_gamma_wcon, SpanningTrees, TREE_CAP};

use crate::domination::{gamma_gap, graph_hash, SolverConfig};
use crate::error::{DomError, Result};
use crate::graph::{blocks_and_bridges, is_connected, vertex_roles, Graph};
use crate::recognizers::is_unicyclic;

/// `γ_wcon` over all spanning trees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub graph_hash: String,
    /// Sorted, with multiplicity.
    pub values: Vec<usize>,
    pub is_interval: bool,
    pub tree_count: u64,
}

/// True when the distinct values form a run of consecutive integers.
pub fn is_interval(sorted: &[usize]) -> bool {
    sorted.windows(2).all(|w| w[1] - w[0] <= 1)
}

pub fn wcon_spectrum(g: &Graph) -> Result<SpectrumReport> {
    wcon_spectrum_capped(g, TREE_CAP)
}

pub fn wcon_spectrum_capped(g: &Graph, cap: u64) -> Result<SpectrumReport> {
    let mut values = Vec::new();
    for tree in spanning_trees_capped(g, cap)? {
        values.push(tree_gamma_wcon(&tree?)?);
    }
    values.sort_unstable();
    Ok(SpectrumReport { graph_hash: graph_hash(g), is_interval: is_interval(&values), tree_count: values.len() as u64, values })
}

/// Domination numbers before and after deleting one edge. Bridges carry no
/// after-values since the remainder is disconnected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeRemovalRecord {
    pub edge: (usize, usize),
    pub is_bridge: bool,
    pub gamma_c_before: usize,
    pub gamma_wcon_before: usize,
    pub gamma_c_after: Option<usize>,
    pub gamma_wcon_after: Option<usize>,
    pub delta_c: Option<i64>,
    pub delta_wcon: Option<i64>,
    /// Bounds this record breaks; empty when every checked bound holds.
    pub violations: Vec<String>,
}

fn record(g: &Graph, edge: (usize, usize), is_bridge: bool, before: (usize, usize), cfg: &SolverConfig) -> Result<EdgeRemovalRecord> {
    let mut rec = EdgeRemovalRecord {
        edge,
        is_bridge,
        gamma_c_before: before.0,
        gamma_wcon_before: before.1,
        gamma_c_after: None,
        gamma_wcon_after: None,
        delta_c: None,
        delta_wcon: None,
        violations: Vec::new(),
    };
    if !is_bridge {
        let after = gamma_gap(&g.remove_edge(edge.0, edge.1)?, cfg)?;
        rec.gamma_c_after = Some(after.gamma_c);
        rec.gamma_wcon_after = Some(after.gamma_wcon);
        rec.delta_c = Some(after.gamma_c as i64 - before.0 as i64);
        rec.delta_wcon = Some(after.gamma_wcon as i64 - before.1 as i64);
    }
    Ok(rec)
}

/// One record per cycle edge of a unicyclic graph, flagging any change of
/// `γ_wcon` larger than 2 in absolute value.
pub fn unicyclic_cycle_edge_analysis(g: &Graph, cfg: &SolverConfig) -> Result<Vec<EdgeRemovalRecord>> {
    if !is_unicyclic(g) {
        return Err(DomError::NotUnicyclic);
    }
    let before = gamma_gap(g, cfg)?;
    let bridges = blocks_and_bridges(g).bridges;
    let cycle_edges: Vec<_> = g.edges().into_iter().filter(|e| !bridges.contains(e)).collect();
    cycle_edges
        .into_par_iter()
        .map(|e| {
            let mut rec = record(g, e, false, (before.gamma_c, before.gamma_wcon), cfg)?;
            if rec.delta_wcon.is_some_and(|d| d.abs() > 2) {
                rec.violations.push("|delta_wcon| > 2 on a unicyclic cycle edge".into());
            }
            Ok(rec)
        })
        .collect()
}

/// Every vertex is simplicial or a cut-vertex.
pub fn all_simplicial_or_cut(g: &Graph) -> bool {
    let roles = vertex_roles(g);
    (roles.simplicial | roles.cut_vertices) == g.vertices()
}

/// One record per edge. Non-bridges are checked against
/// `0 <= delta_c <= 2`; when every vertex is simplicial or a cut-vertex (and
/// `n >= 3`), additionally `delta_c <= 1` and `γ_c(G - e) = γ_wcon(G - e)`.
pub fn edge_removal_sweep(g: &Graph, cfg: &SolverConfig) -> Result<Vec<EdgeRemovalRecord>> {
    if !is_connected(g) {
        return Err(DomError::Disconnected);
    }
    let before = gamma_gap(g, cfg)?;
    let bridges = blocks_and_bridges(g).bridges;
    let special = g.order() >= 3 && all_simplicial_or_cut(g);
    g.edges()
        .into_par_iter()
        .map(|e| {
            let mut rec = record(g, e, bridges.contains(&e), (before.gamma_c, before.gamma_wcon), cfg)?;
            if let Some(d) = rec.delta_c {
                if !(0..=2).contains(&d) {
                    rec.violations.push(format!("delta_c = {d} outside 0..=2"));
                }
                if special && d > 1 {
                    rec.violations.push(format!("delta_c = {d} above 1 although every vertex is simplicial or a cut-vertex"));
                }
                if special && rec.gamma_c_after != rec.gamma_wcon_after {
                    rec.violations.push("gamma_c(G-e) != gamma_wcon(G-e) although every vertex is simplicial or a cut-vertex".into());
                }
            }
            Ok(rec)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{cycle, edge_gap_gadget, path, random_tree};

    fn paw() -> Graph {
        Graph::from_edge_list(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap()
    }

    fn bowtie() -> Graph {
        Graph::from_edge_list(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
    }

    #[test]
    fn spectra() {
        let paw = wcon_spectrum(&paw()).unwrap();
        assert_eq!((paw.values.clone(), paw.is_interval, paw.tree_count), (vec![1, 2, 2], true, 3));
        let c7 = wcon_spectrum(&cycle(7).unwrap()).unwrap();
        assert_eq!(c7.values, vec![5; 7]);
        let t = wcon_spectrum(&random_tree(10, 5).unwrap()).unwrap();
        assert_eq!(t.tree_count, 1);
        assert!(t.is_interval);
        assert!(!is_interval(&[1, 3]));
    }

    #[test]
    fn unicyclic_records() {
        let cfg = SolverConfig::default();
        let c7 = unicyclic_cycle_edge_analysis(&cycle(7).unwrap(), &cfg).unwrap();
        assert_eq!(c7.len(), 7);
        assert!(c7.iter().all(|r| r.delta_wcon == Some(-2) && r.violations.is_empty()));
        let c5 = unicyclic_cycle_edge_analysis(&cycle(5).unwrap(), &cfg).unwrap();
        assert!(c5.iter().all(|r| r.delta_wcon == Some(0)));
        let paw = unicyclic_cycle_edge_analysis(&paw(), &cfg).unwrap();
        assert_eq!(paw.len(), 3);
        assert!(paw.iter().all(|r| matches!(r.delta_wcon, Some(0) | Some(1))));
        assert_eq!(unicyclic_cycle_edge_analysis(&path(4).unwrap(), &cfg), Err(DomError::NotUnicyclic));
    }

    #[test]
    fn sweeps() {
        let cfg = SolverConfig::default();
        let bow = edge_removal_sweep(&bowtie(), &cfg).unwrap();
        let r = bow.iter().find(|r| r.edge == (0, 2)).unwrap();
        assert_eq!((r.gamma_c_before, r.gamma_c_after, r.gamma_wcon_after), (1, Some(2), Some(2)));
        assert!(bow.iter().all(|r| r.violations.is_empty()));
        let c6 = edge_removal_sweep(&cycle(6).unwrap(), &cfg).unwrap();
        assert!(c6.iter().all(|r| r.delta_c == Some(0)));
        let p = edge_removal_sweep(&path(4).unwrap(), &cfg).unwrap();
        assert!(p.iter().all(|r| r.is_bridge && r.gamma_c_after.is_none()));
        let gadget = edge_gap_gadget(3).unwrap();
        let e = gadget.special_edge.unwrap();
        let sweep = edge_removal_sweep(&gadget.graph, &cfg).unwrap();
        let r = sweep.iter().find(|r| r.edge == e).unwrap();
        assert_eq!(r.delta_wcon, Some(3));
        assert!(r.violations.is_empty());
    }
}
