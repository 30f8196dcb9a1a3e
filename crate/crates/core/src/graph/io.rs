//! graph6, edge-list and DOT serialization.
//!
//! graph6 reference: <https://users.cecs.anu.edu.au/~bdm/data/formats.txt>

use std::fmt::Write as _;
use std::io::BufRead;

use super::{Graph, Tier};
use crate::error::{DomError, Result};

const HEADER: &str = ">>graph6<<";

fn malformed(msg: impl Into<String>) -> DomError {
    DomError::MalformedGraph6(msg.into())
}

/// Encodes a graph as a single graph6 line (no header, no newline).
pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|x| 63 + x as u8));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn graph6_decode(text: &str) -> Result<Graph> {
    graph6_decode_with_limit(text, Tier::DEFAULT)
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and trailing
/// whitespace are tolerated; padding bits must be zero.
pub fn graph6_decode_with_limit(text: &str, tier: Tier) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(malformed("empty input"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(malformed(format!("byte {b} outside 63..=126")));
    }
    let data: Vec<u8> = bytes.iter().map(|b| b - 63).collect();
    let (n, body) = if data[0] < 63 {
        (data[0] as usize, &data[1..])
    } else if data.len() >= 4 && data[1] < 63 {
        let n = ((data[1] as usize) << 12) | ((data[2] as usize) << 6) | data[3] as usize;
        (n, &data[4..])
    } else {
        return Err(DomError::TierExceeded { order: usize::MAX, limit: tier.limit() });
    };
    if n == 0 {
        return Err(malformed("graph of order 0"));
    }
    tier.admit(n)?;
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(malformed(format!("expected {expected} edge bytes for n={n}, found {}", body.len())));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if body[k / 6] >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let pad = 6 - bits % 6;
        if body[expected - 1] & ((1 << pad) - 1) != 0 {
            return Err(malformed("nonzero padding bits"));
        }
    }
    Graph::from_edge_list_with_tier(n, &edges, tier)
}

/// Reads a graph6 stream, one graph per line. Blank lines are skipped. Errors
/// carry the 1-based line number.
pub fn read_graph6_lines<R: BufRead>(reader: R, tier: Tier) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| DomError::CorpusRead(format!("line {}: {e}", i + 1)))?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed == HEADER {
            continue;
        }
        let g = graph6_decode_with_limit(trimmed, tier)
            .map_err(|e| DomError::CorpusRead(format!("line {}: {e}", i + 1)))?;
        graphs.push(g);
    }
    Ok(graphs)
}

fn bad_edges(msg: impl Into<String>) -> DomError {
    DomError::MalformedEdgeList(msg.into())
}

/// Parses the `n m` / `u v` edge-list format. `#` starts a comment.
pub fn edge_list_decode(text: &str, tier: Tier) -> Result<Graph> {
    let mut rows = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let parse_pair = |lineno: usize, line: &str| -> Result<(usize, usize)> {
        let mut it = line.split_whitespace().map(|t| t.parse::<usize>());
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(bad_edges(format!("line {lineno}: expected two integers, got {line:?}"))),
        }
    };
    let (lineno, header) = rows.next().ok_or_else(|| bad_edges("missing `n m` header"))?;
    let (n, m) = parse_pair(lineno, header)?;
    let edges = rows.map(|(i, l)| parse_pair(i, l)).collect::<Result<Vec<_>>>()?;
    if edges.len() != m {
        return Err(bad_edges(format!("header declares {m} edges, found {}", edges.len())));
    }
    if n == 0 {
        return Err(bad_edges("graph of order 0"));
    }
    Graph::from_edge_list_with_tier(n, &edges, tier)
}

pub fn edge_list_encode(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Layout-free DOT rendering; `labels[v]`, when given, becomes the node label.
pub fn to_dot(g: &Graph, labels: Option<&[String]>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        match labels.and_then(|l| l.get(v)) {
            Some(label) if !label.is_empty() => {
                let _ = writeln!(out, "  {v} [label=\"{label}\"];");
            }
            _ => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
