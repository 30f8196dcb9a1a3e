use crate::error::{DomError, Result};
use crate::graph::Graph;

fn need(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(DomError::ParameterOutOfRange(msg.to_string()))
    }
}

/// `P_n`, vertices in path order.
pub fn path(n: usize) -> Result<Graph> {
    need(n >= 1, "path needs n >= 1")?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &edges)
}

/// `C_n` for `n >= 3`, vertices in cyclic order.
pub fn cycle(n: usize) -> Result<Graph> {
    need(n >= 3, "cycle needs n >= 3")?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    need(n >= 1, "complete graph needs n >= 1")?;
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::from_edge_list(n, &edges)
}

/// `K_{1,leaves}` with the center at vertex 0.
pub fn star(leaves: usize) -> Result<Graph> {
    need(leaves >= 1, "star needs at least one leaf")?;
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::from_edge_list(leaves + 1, &edges)
}

/// `G ∘ K_1`: vertex `v + n` is the new pendant of `v`.
pub fn corona_k1(g: &Graph) -> Result<Graph> {
    let n = g.order();
    need(2 * n <= crate::graph::MAX_TIER, "corona exceeds the vertex tier")?;
    let mut edges = g.edges();
    edges.extend((0..n).map(|v| (v, v + n)));
    Graph::from_edge_list(2 * n, &edges)
}

/// A spider: center 0 with `legs` paths of `leg_len` vertices each.
pub fn spider(legs: usize, leg_len: usize) -> Result<Graph> {
    need(legs >= 1 && leg_len >= 1, "spider needs legs >= 1 and leg length >= 1")?;
    let mut edges = Vec::new();
    let mut next = 1;
    for _ in 0..legs {
        let mut prev = 0;
        for _ in 0..leg_len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edge_list(next, &edges)
}

/// Named standard graphs accepted by the CLI: `path:N`, `cycle:N`,
/// `complete:N`, `star:N`, `corona-cycle:N`, `spider:LEGS:LEN`.
pub fn standard_family(spec: &str) -> Result<Graph> {
    let parts: Vec<&str> = spec.split(':').collect();
    let num = |i: usize| -> Result<usize> {
        parts
            .get(i)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| DomError::ParameterOutOfRange(format!("bad family spec {spec:?}")))
    };
    match parts[0] {
        "path" => path(num(1)?),
        "cycle" => cycle(num(1)?),
        "complete" => complete(num(1)?),
        "star" => star(num(1)?),
        "corona-cycle" => corona_k1(&cycle(num(1)?)?),
        "spider" => spider(num(1)?, num(2)?),
        other => Err(DomError::ParameterOutOfRange(format!("unknown family {other:?}"))),
    }
}
