use super::strategy::{check_input, fallback_set, trivial_answer};
use super::{forcing, DominationCertificate, DominationKind, DominationSolver, SearchContext, SolverConfig};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

/// Cardinality-layered search: for `s = 1, 2, ...` try every `s`-set that
/// contains the forced vertices and avoids the excluded ones, in increasing
/// mask order. The first hit is optimal and numerically smallest.
#[derive(Clone, Copy, Debug, Default)]
pub struct LayeredSolver;

/// Spreads the low bits of `compact` onto the positions listed in `slots`.
fn deposit(compact: u128, slots: &[usize]) -> u64 {
    let mut out = 0u64;
    let mut rest = compact;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        out |= 1 << slots[i];
        rest &= rest - 1;
    }
    out
}

/// Next integer with the same popcount (Gosper's hack).
fn next_combination(c: u128) -> u128 {
    let low = c & c.wrapping_neg();
    let ripple = c + low;
    (((ripple ^ c) >> 2) / low) | ripple
}

impl DominationSolver for LayeredSolver {
    fn name(&self) -> &'static str {
        "layered"
    }

    fn solve(&self, g: &Graph, kind: DominationKind, cfg: &SolverConfig) -> Result<DominationCertificate> {
        check_input(self, g, kind, cfg)?;
        if let Some(single) = trivial_answer(g) {
            return Ok(DominationCertificate::new(g, kind, single, true, 1, self.name()));
        }
        let ctx = SearchContext::new(g);
        let f = forcing(g, kind, cfg.use_forced_pruning);
        let base = f.forced_in.bits();
        let slots: Vec<usize> = (g.vertices() - f.forced_in - f.forced_out).to_vec();
        let limit = 1u128 << slots.len();
        let mut nodes = 0u64;

        for size in f.forced_in.len().max(1)..=g.order() {
            let extra = size - f.forced_in.len();
            if extra > slots.len() {
                break;
            }
            let mut comb: u128 = (1u128 << extra) - 1;
            while comb < limit {
                nodes += 1;
                if nodes > cfg.node_budget {
                    let best = fallback_set(&ctx, kind);
                    return Ok(DominationCertificate::new(g, kind, best, false, nodes - 1, self.name()));
                }
                let set = base | deposit(comb, &slots);
                if ctx.accepts(kind, set) {
                    return Ok(DominationCertificate::new(g, kind, VertexSet::from_bits(set), true, nodes, self.name()));
                }
                if extra == 0 {
                    break;
                }
                comb = next_combination(comb);
            }
        }
        // Unreachable for connected inputs: the whole vertex set always qualifies.
        Ok(DominationCertificate::new(g, kind, g.vertices(), true, nodes, self.name()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{complete, corona_k1, cycle, path, spider, star};

    fn solve(g: &Graph, kind: DominationKind) -> DominationCertificate {
        LayeredSolver.solve(g, kind, &SolverConfig::default()).unwrap()
    }

    #[test]
    fn gosper_enumerates_in_order() {
        let mut c = 0b111u128;
        let mut seen = vec![];
        while c < 1 << 5 {
            seen.push(c);
            c = next_combination(c);
        }
        assert_eq!(seen.len(), 10);
        assert!(seen.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(deposit(0b101, &[2, 5, 9]), (1 << 2) | (1 << 9));
    }

    #[test]
    fn known_values() {
        assert_eq!(solve(&complete(6).unwrap(), DominationKind::Connected).value, 1);
        assert_eq!(solve(&cycle(7).unwrap(), DominationKind::WeaklyConvex).value, 7);
        assert_eq!(solve(&cycle(7).unwrap(), DominationKind::Connected).value, 5);
        assert_eq!(solve(&path(6).unwrap(), DominationKind::WeaklyConvex).value, 4);
        assert_eq!(solve(&star(6).unwrap(), DominationKind::WeaklyConvex).value, 1);
        assert_eq!(solve(&spider(3, 2).unwrap(), DominationKind::WeaklyConvex).value, 4);
        assert_eq!(solve(&corona_k1(&cycle(7).unwrap()).unwrap(), DominationKind::WeaklyConvex).value, 7);
        assert_eq!(solve(&cycle(6).unwrap(), DominationKind::Dominating).value, 2);
        assert_eq!(solve(&Graph::empty(1).unwrap(), DominationKind::WeaklyConvex).value, 1);
        assert_eq!(solve(&complete(2).unwrap(), DominationKind::WeaklyConvex).value, 1);
    }

    #[test]
    fn smallest_mask_wins() {
        let c5 = solve(&cycle(5).unwrap(), DominationKind::Connected);
        assert_eq!(c5.set, VertexSet::from_vertices([0, 1, 2]));
    }

    #[test]
    fn budget_returns_flagged_bound() {
        let cfg = SolverConfig { node_budget: 3, use_forced_pruning: false, ..SolverConfig::default() };
        let g = cycle(8).unwrap();
        let cert = LayeredSolver.solve(&g, DominationKind::Connected, &cfg).unwrap();
        assert!(!cert.optimal);
        assert!(cert.verify(&g));
        assert!(cert.value >= 6);
    }

    #[test]
    fn pruning_does_not_change_values() {
        let off = SolverConfig { use_forced_pruning: false, ..SolverConfig::default() };
        for g in [spider(3, 2).unwrap(), corona_k1(&path(4).unwrap()).unwrap(), cycle(6).unwrap()] {
            for kind in [DominationKind::Connected, DominationKind::WeaklyConvex] {
                let a = solve(&g, kind);
                let b = LayeredSolver.solve(&g, kind, &off).unwrap();
                assert_eq!(a.value, b.value);
            }
        }
    }
}
