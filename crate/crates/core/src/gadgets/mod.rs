//! Generators for the fixed and parametric constructions, each bundled with
//! the domination values it is built to exhibit.
//!
//! Vertex numbering is part of the contract: cycle vertices come first in the
//! order they are listed below, pendant vertices after them. graph6 output of
//! every gadget is therefore reproducible byte for byte.

mod families;
mod random;

use std::collections::BTreeMap;

use serde::Serialize;

pub use families::{complete, corona_k1, cycle, path, spider, standard_family, star};
pub use random::{random_cactus, random_connected, random_high_girth, random_tree, random_unicyclic};

use crate::error::{DomError, Result};
use crate::graph::{graph6_encode, Graph};

/// Values a gadget is constructed to have. `None` means no value is claimed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Predictions {
    pub gamma_c: Option<usize>,
    pub gamma_wcon: Option<usize>,
    pub gamma_wcon_after_removal: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GadgetDescriptor {
    pub name: String,
    pub parameter: Option<i64>,
    #[serde(skip)]
    pub graph: Graph,
    pub labels: BTreeMap<String, usize>,
    pub special_edge: Option<(usize, usize)>,
    pub predictions: Predictions,
}

impl GadgetDescriptor {
    pub fn label(&self, name: &str) -> usize {
        self.labels[name]
    }

    /// Per-vertex label strings, empty where a vertex is unnamed.
    pub fn vertex_names(&self) -> Vec<String> {
        let mut names = vec![String::new(); self.graph.order()];
        for (name, &v) in &self.labels {
            names[v] = name.clone();
        }
        names
    }

    /// JSON metadata including the graph6 encoding and order/size.
    pub fn metadata(&self) -> serde_json::Value {
        let mut meta = serde_json::to_value(self).expect("descriptor serializes");
        meta["graph6"] = graph6_encode(&self.graph).into();
        meta["n"] = self.graph.order().into();
        meta["m"] = self.graph.size().into();
        meta
    }
}

struct Builder {
    labels: BTreeMap<String, usize>,
    edges: Vec<(usize, usize)>,
    next: usize,
}

impl Builder {
    fn new() -> Self {
        Builder { labels: BTreeMap::new(), edges: Vec::new(), next: 0 }
    }

    fn vertex(&mut self, name: impl Into<String>) -> usize {
        let v = self.next;
        self.labels.insert(name.into(), v);
        self.next += 1;
        v
    }

    fn edge(&mut self, a: &str, b: &str) {
        self.edges.push((self.labels[a], self.labels[b]));
    }

    fn finish(self, name: &str, parameter: Option<i64>, special_edge: Option<(&str, &str)>, predictions: Predictions) -> Result<GadgetDescriptor> {
        let graph = Graph::from_edge_list(self.next, &self.edges)?;
        let special_edge = special_edge.map(|(a, b)| {
            let (u, v) = (self.labels[a], self.labels[b]);
            (u.min(v), u.max(v))
        });
        Ok(GadgetDescriptor { name: name.into(), parameter, graph, labels: self.labels, special_edge, predictions })
    }
}

/// The ladder-with-pendants construction on the cycle
/// `(x1, v1..v_{k+2}, x2, u_{k+2}..u1)`, with rungs `v_i u_i`, the extra edge
/// `v1 u3`, and pendants `x1'`, `v1'..v_{k+2}'`, `x2'`. Valid for `k >= 1`.
///
/// Numbering: `x1 = 0`, `v_i = i`, `x2 = k+3`, `u_i = 2k+6-i`, then
/// `x1' = 2k+6`, `v_i' = 2k+6+i`, `x2' = 3k+9`.
pub fn gap_construction(k: usize) -> Result<GadgetDescriptor> {
    if k < 1 {
        return Err(DomError::ParameterOutOfRange("construction needs k >= 1".into()));
    }
    let len = k + 2;
    let mut b = Builder::new();
    b.vertex("x1");
    for i in 1..=len {
        b.vertex(format!("v{i}"));
    }
    b.vertex("x2");
    for i in (1..=len).rev() {
        b.vertex(format!("u{i}"));
    }
    b.vertex("x1'");
    for i in 1..=len {
        b.vertex(format!("v{i}'"));
    }
    b.vertex("x2'");

    let ring: Vec<String> = std::iter::once("x1".to_string())
        .chain((1..=len).map(|i| format!("v{i}")))
        .chain(std::iter::once("x2".to_string()))
        .chain((1..=len).rev().map(|i| format!("u{i}")))
        .collect();
    for i in 0..ring.len() {
        b.edge(&ring[i], &ring[(i + 1) % ring.len()]);
    }
    b.edge("x1", "x1'");
    b.edge("x2", "x2'");
    for i in 1..=len {
        b.edge(&format!("v{i}"), &format!("v{i}'"));
        b.edge(&format!("v{i}"), &format!("u{i}"));
    }
    b.edge("v1", "u3");
    b.finish("gap-construction", Some(k as i64), None, Predictions::default())
}

/// Graph whose weakly convex and connected domination numbers differ by `k`
/// (`k >= 6`): `γ_c = k + 4`, `γ_wcon = 2k + 4`, `n = 3k + 10`, `m = 4k + 13`.
pub fn gap_gadget(k: usize) -> Result<GadgetDescriptor> {
    if k < 6 {
        return Err(DomError::ParameterOutOfRange(format!("gap gadget needs k >= 6, got {k}")));
    }
    let mut d = gap_construction(k)?;
    d.name = "gap".into();
    d.predictions = Predictions { gamma_c: Some(k + 4), gamma_wcon: Some(2 * k + 4), gamma_wcon_after_removal: None };
    assert_eq!((d.graph.order(), d.graph.size()), (3 * k + 10, 4 * k + 13));
    Ok(d)
}

/// Graph with a non-bridge edge whose removal changes `γ_wcon` by exactly `k`.
///
/// * `k = 0`: the triangle, special edge `01`.
/// * `k > 0`: cycle `(x1, v1..v_k, x2, u_k..u1)` with rungs `v_i u_i` and
///   pendants `x1'`, `x2'`, `v_i'`; special edge `x1 v1`; `γ_wcon = k + 2`,
///   after removal `2k + 2`. Numbering: `x1 = 0`, `v_i = i`, `x2 = k+1`,
///   `u_i = 2k+2-i`, `x1' = 2k+2`, `x2' = 2k+3`, `v_i' = 2k+3+i`.
/// * `k < 0`: [`gap_construction`] with parameter `|k|`, special edge
///   `u_{|k|+2} x2`; `γ_wcon = 2|k| + 4`, after removal `|k| + 4`.
pub fn edge_gap_gadget(k: i64) -> Result<GadgetDescriptor> {
    match k {
        0 => {
            let mut b = Builder::new();
            for name in ["a", "b", "c"] {
                b.vertex(name);
            }
            b.edge("a", "b");
            b.edge("b", "c");
            b.edge("c", "a");
            let p = Predictions { gamma_c: Some(1), gamma_wcon: Some(1), gamma_wcon_after_removal: Some(1) };
            b.finish("edge-gap", Some(0), Some(("a", "b")), p)
        }
        k if k > 0 => {
            let k = k as usize;
            let mut b = Builder::new();
            b.vertex("x1");
            for i in 1..=k {
                b.vertex(format!("v{i}"));
            }
            b.vertex("x2");
            for i in (1..=k).rev() {
                b.vertex(format!("u{i}"));
            }
            b.vertex("x1'");
            b.vertex("x2'");
            for i in 1..=k {
                b.vertex(format!("v{i}'"));
            }
            let ring: Vec<String> = std::iter::once("x1".to_string())
                .chain((1..=k).map(|i| format!("v{i}")))
                .chain(std::iter::once("x2".to_string()))
                .chain((1..=k).rev().map(|i| format!("u{i}")))
                .collect();
            for i in 0..ring.len() {
                b.edge(&ring[i], &ring[(i + 1) % ring.len()]);
            }
            b.edge("x1", "x1'");
            b.edge("x2", "x2'");
            for i in 1..=k {
                b.edge(&format!("v{i}"), &format!("v{i}'"));
                b.edge(&format!("v{i}"), &format!("u{i}"));
            }
            let p = Predictions {
                gamma_c: None,
                gamma_wcon: Some(k + 2),
                gamma_wcon_after_removal: Some(2 * k + 2),
            };
            let d = b.finish("edge-gap", Some(k as i64), Some(("x1", "v1")), p)?;
            assert_eq!(d.graph.order(), 3 * k + 4);
            Ok(d)
        }
        k => {
            let a = k.unsigned_abs() as usize;
            let mut d = gap_construction(a)?;
            let (u, x2) = (d.label(&format!("u{}", a + 2)), d.label("x2"));
            d.name = "edge-gap".into();
            d.parameter = Some(k);
            d.special_edge = Some((u.min(x2), u.max(x2)));
            d.predictions = Predictions {
                gamma_c: None,
                gamma_wcon: Some(2 * a + 4),
                gamma_wcon_after_removal: Some(a + 4),
            };
            Ok(d)
        }
    }
}

/// The 9-vertex chordal obstruction.
///
/// Drawing coordinates, labels and indices:
///
/// | coordinate   | label | index |
/// |--------------|-------|-------|
/// | (0, 1)       | A     | 0     |
/// | (1.5, 2)     | B     | 1     |
/// | (3, 1)       | C     | 2     |
/// | (2.2, -0.2)  | D     | 3     |
/// | (0.8, -0.2)  | E     | 4     |
/// | (-0.5, 2)    | A'    | 5     |
/// | (1.5, 3)     | B'    | 6     |
/// | (3, 2)       | C'    | 7     |
/// | (0, -0.5)    | E'    | 8     |
///
/// Edges: the 5-cycle `A B C D E`, chords `AD` and `BD`, and one pendant on
/// each of `A, B, C, E`.
pub fn h_star() -> Result<GadgetDescriptor> {
    let mut b = Builder::new();
    for name in ["A", "B", "C", "D", "E", "A'", "B'", "C'", "E'"] {
        b.vertex(name);
    }
    for (x, y) in [("A", "B"), ("B", "C"), ("C", "D"), ("D", "E"), ("E", "A"), ("A", "D"), ("B", "D")] {
        b.edge(x, y);
    }
    for x in ["A", "B", "C", "E"] {
        b.edge(x, &format!("{x}'"));
    }
    b.finish("h-star", None, None, Predictions::default())
}

/// [`h_star`] without its pendants, with `x`, `y`, `a` standing for `E`, `C`,
/// `D` respectively: `x` and `y` are at distance 2 through `a` but at distance
/// 3 inside `{A, B, C, E}`.
pub fn h_prime_a() -> Result<GadgetDescriptor> {
    let mut b = Builder::new();
    for name in ["A", "B", "y", "a", "x"] {
        b.vertex(name);
    }
    for (p, q) in [("A", "B"), ("B", "y"), ("y", "a"), ("a", "x"), ("x", "A"), ("A", "a"), ("B", "a")] {
        b.edge(p, q);
    }
    b.finish("h-prime-a", None, None, Predictions::default())
}

/// The 12-vertex graph that meets both necessary conditions for
/// `(γ_c − γ_wcon)`-perfection without being perfect.
///
/// | coordinate | label | index |
/// |------------|-------|-------|
/// | (0, 1)     | a     | 0     |
/// | (1, 1)     | b     | 1     |
/// | (2, 0)     | c     | 2     |
/// | (1, -1)    | d     | 3     |
/// | (0, -1)    | e     | 4     |
/// | (-1, 0)    | f     | 5     |
/// | (-1, 1)    | g     | 6     |
/// | (3, 0)     | c'    | 7     |
/// | (1, -2)    | d'    | 8     |
/// | (0, -2)    | e'    | 9     |
/// | (-2, 0)    | f'    | 10    |
/// | (-2, 1)    | g'    | 11    |
///
/// Edges: 6-cycle `a b c d e f`, chord `bd`, `g` adjacent to `a` and `f`,
/// pendants on `c, d, e, f, g`.
pub fn fig_example_not_perfect() -> Result<GadgetDescriptor> {
    let mut b = Builder::new();
    for name in ["a", "b", "c", "d", "e", "f", "g", "c'", "d'", "e'", "f'", "g'"] {
        b.vertex(name);
    }
    for (p, q) in [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "f"), ("f", "a"), ("b", "d"), ("g", "a"), ("g", "f")] {
        b.edge(p, q);
    }
    for x in ["c", "d", "e", "f", "g"] {
        b.edge(x, &format!("{x}'"));
    }
    let p = Predictions { gamma_c: Some(5), gamma_wcon: Some(7), gamma_wcon_after_removal: None };
    b.finish("not-perfect", None, None, p)
}

/// Looks a gadget up by its CLI name.
pub fn gadget_by_name(name: &str, k: Option<i64>, seed: u64, n: Option<usize>) -> Result<GadgetDescriptor> {
    let need_k = || k.ok_or_else(|| DomError::ParameterOutOfRange(format!("gadget {name} needs --k")));
    match name {
        "gap" => {
            let k = need_k()?;
            if k < 0 {
                return Err(DomError::ParameterOutOfRange(format!("gap gadget needs k >= 6, got {k}")));
            }
            gap_gadget(k as usize)
        }
        "gap-construction" => {
            let k = need_k()?;
            if k < 1 {
                return Err(DomError::ParameterOutOfRange(format!("construction needs k >= 1, got {k}")));
            }
            gap_construction(k as usize)
        }
        "edge-gap" => edge_gap_gadget(need_k()?),
        "h-star" => h_star(),
        "h-prime-a" => h_prime_a(),
        "not-perfect" => fig_example_not_perfect(),
        "random-cactus" => {
            let n = n.unwrap_or(12);
            let graph = random_cactus(n, 0.5, seed)?;
            Ok(GadgetDescriptor {
                name: name.into(),
                parameter: Some(n as i64),
                graph,
                labels: BTreeMap::new(),
                special_edge: None,
                predictions: Predictions::default(),
            })
        }
        other => {
            let graph = match k {
                Some(k) => standard_family(&format!("{other}:{k}"))?,
                None => standard_family(other)?,
            };
            Ok(GadgetDescriptor {
                name: other.into(),
                parameter: k,
                graph,
                labels: BTreeMap::new(),
                special_edge: None,
                predictions: Predictions::default(),
            })
        }
    }
}
