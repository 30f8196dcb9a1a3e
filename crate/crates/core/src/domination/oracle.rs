use super::strategy::check_input;
use super::{DominationCertificate, DominationKind, DominationSolver, SolverConfig};
use crate::error::{DomError, Result};
use crate::graph::{is_connected, Graph, VertexSet};

/// Largest order the oracle accepts by default.
pub const ORACLE_TIER: usize = 14;

const INF: u32 = u32::MAX / 4;

// Everything below deliberately avoids the solver's mask machinery: adjacency
// is queried pair by pair and distances come from Floyd-Warshall.

fn floyd(g: &Graph, members: &[usize]) -> Vec<Vec<u32>> {
    let k = members.len();
    let mut d = vec![vec![INF; k]; k];
    for i in 0..k {
        d[i][i] = 0;
        for j in 0..k {
            if i != j && g.has_edge(members[i], members[j]) {
                d[i][j] = 1;
            }
        }
    }
    for via in 0..k {
        for i in 0..k {
            for j in 0..k {
                let alt = d[i][via] + d[via][j];
                if alt < d[i][j] {
                    d[i][j] = alt;
                }
            }
        }
    }
    d
}

fn naive_dominating(g: &Graph, members: &[usize]) -> bool {
    (0..g.order()).all(|v| members.contains(&v) || members.iter().any(|&u| g.has_edge(u, v)))
}

fn naive_connected(g: &Graph, members: &[usize]) -> bool {
    let mut seen = vec![false; members.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..members.len() {
            if !seen[j] && g.has_edge(members[i], members[j]) {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.iter().all(|&s| s)
}

fn naive_isometric(members: &[usize], host: &[Vec<u32>], g: &Graph) -> bool {
    let inner = floyd(g, members);
    for (i, &a) in members.iter().enumerate() {
        for (j, &b) in members.iter().enumerate() {
            if inner[i][j] != host[a][b] {
                return false;
            }
        }
    }
    true
}

fn next_combination(c: u64) -> u64 {
    let low = c & c.wrapping_neg();
    let ripple = c + low;
    (((ripple ^ c) >> 2) / low) | ripple
}

/// Every minimum set of `kind`, in increasing mask order.
pub fn all_minimum_sets_oracle(g: &Graph, kind: DominationKind) -> Result<Vec<VertexSet>> {
    all_minimum_sets_oracle_with_tier(g, kind, ORACLE_TIER)
}

pub fn all_minimum_sets_oracle_with_tier(g: &Graph, kind: DominationKind, tier: usize) -> Result<Vec<VertexSet>> {
    let n = g.order();
    if n > tier {
        return Err(DomError::TierExceeded { order: n, limit: tier });
    }
    if !is_connected(g) {
        return Err(DomError::Disconnected);
    }
    let all: Vec<usize> = (0..n).collect();
    let host = floyd(g, &all);
    for size in 1..=n {
        let mut found = Vec::new();
        let mut c: u64 = (1 << size) - 1;
        while c < 1 << n {
            let members: Vec<usize> = (0..n).filter(|&v| c >> v & 1 == 1).collect();
            let ok = naive_dominating(g, &members)
                && match kind {
                    DominationKind::Dominating => true,
                    DominationKind::Connected => naive_connected(g, &members),
                    DominationKind::WeaklyConvex => naive_isometric(&members, &host, g),
                };
            if ok {
                found.push(VertexSet::from_bits(c));
            }
            c = next_combination(c);
        }
        if !found.is_empty() {
            return Ok(found);
        }
    }
    unreachable!("the whole vertex set of a connected graph always qualifies")
}

/// The oracle exposed as a strategy; answers the smallest minimum mask.
#[derive(Clone, Copy, Debug)]
pub struct ExhaustiveSolver {
    pub tier: usize,
}

impl Default for ExhaustiveSolver {
    fn default() -> Self {
        ExhaustiveSolver { tier: ORACLE_TIER }
    }
}

impl DominationSolver for ExhaustiveSolver {
    fn name(&self) -> &'static str {
        "exhaustive"
    }

    fn solve(&self, g: &Graph, kind: DominationKind, cfg: &SolverConfig) -> Result<DominationCertificate> {
        check_input(self, g, kind, cfg)?;
        let sets = all_minimum_sets_oracle_with_tier(g, kind, self.tier)?;
        let visited: u64 = (1..=sets[0].len()).map(|s| binomial(g.order(), s)).sum();
        Ok(DominationCertificate::new(g, kind, sets[0], true, visited, self.name()))
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{complete, cycle, path};

    fn sets(v: &[&[usize]]) -> Vec<VertexSet> {
        v.iter().map(|s| VertexSet::from_vertices(s.iter().copied())).collect()
    }

    #[test]
    fn spec_examples() {
        assert_eq!(all_minimum_sets_oracle(&path(3).unwrap(), DominationKind::Connected).unwrap(), sets(&[&[1]]));
        let c4 = all_minimum_sets_oracle(&cycle(4).unwrap(), DominationKind::WeaklyConvex).unwrap();
        assert_eq!(c4, sets(&[&[0, 1], &[1, 2], &[0, 3], &[2, 3]]));
        let c5 = all_minimum_sets_oracle(&cycle(5).unwrap(), DominationKind::Connected).unwrap();
        assert_eq!(c5, sets(&[&[0, 1, 2], &[1, 2, 3], &[0, 1, 4], &[0, 3, 4], &[2, 3, 4]]));
    }

    #[test]
    fn tier_and_connectivity() {
        assert!(matches!(
            all_minimum_sets_oracle(&path(15).unwrap(), DominationKind::Connected),
            Err(DomError::TierExceeded { order: 15, limit: 14 })
        ));
        assert_eq!(all_minimum_sets_oracle(&Graph::empty(3).unwrap(), DominationKind::Connected), Err(DomError::Disconnected));
        assert_eq!(all_minimum_sets_oracle(&complete(4).unwrap(), DominationKind::WeaklyConvex).unwrap().len(), 4);
    }

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(14, 7), 3432);
    }
}
