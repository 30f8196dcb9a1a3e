use super::strategy::{check_input, fallback_set, trivial_answer};
use super::{forcing, DominationCertificate, DominationKind, DominationSolver, SearchContext, SolverConfig};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

/// Connected-growth branch and bound: grows connected vertex sets from a seed
/// by include/exclude branching on boundary vertices, so every connected set
/// containing the seed is visited at most once. Only connected kinds apply.
#[derive(Clone, Copy, Debug, Default)]
pub struct GrowSolver;

struct Search<'a, 'g> {
    ctx: &'a SearchContext<'g>,
    kind: DominationKind,
    target: usize,
    forced_in: u64,
    max_cover: usize,
    first_only: bool,
    budget: u64,
    nodes: u64,
    best: Option<u64>,
    exhausted: bool,
}

impl Search<'_, '_> {
    fn record(&mut self, set: u64) {
        self.best = Some(self.best.map_or(set, |b| b.min(set)));
    }

    /// `chosen` is connected; `banned` may never be added.
    fn grow(&mut self, chosen: u64, banned: u64) {
        if self.exhausted || (self.first_only && self.best.is_some()) {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        let size = chosen.count_ones() as usize;
        let missing_forced = (self.forced_in & !chosen).count_ones() as usize;
        if size + missing_forced > self.target {
            return;
        }
        if size == self.target {
            if self.ctx.accepts(self.kind, chosen) {
                self.record(chosen);
            }
            return;
        }
        let all = self.ctx.g.vertices().bits();
        let undominated = all & !self.ctx.coverage(chosen);
        let picks = self.target - size;
        if undominated.count_ones() as usize > picks * self.max_cover {
            return;
        }
        // Each undominated vertex needs an available dominator.
        let available = all & !banned & !chosen;
        let mut rest = undominated;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.ctx.closed(u) & available == 0 {
                return;
            }
        }
        let boundary = self.ctx.coverage(chosen) & !chosen & !banned;
        if boundary == 0 {
            return;
        }
        let w = boundary.trailing_zeros() as usize;
        self.grow(chosen | (1 << w), banned);
        if self.forced_in & (1 << w) == 0 {
            self.grow(chosen, banned | (1 << w));
        }
    }
}

impl DominationSolver for GrowSolver {
    fn name(&self) -> &'static str {
        "grow"
    }

    fn supports(&self, kind: DominationKind) -> bool {
        kind != DominationKind::Dominating
    }

    fn solve(&self, g: &Graph, kind: DominationKind, cfg: &SolverConfig) -> Result<DominationCertificate> {
        check_input(self, g, kind, cfg)?;
        if let Some(single) = trivial_answer(g) {
            return Ok(DominationCertificate::new(g, kind, single, true, 1, self.name()));
        }
        let ctx = SearchContext::new(g);
        let f = forcing(g, kind, cfg.use_forced_pruning);
        let mut search = Search {
            ctx: &ctx,
            kind,
            target: 0,
            forced_in: f.forced_in.bits(),
            max_cover: g.max_degree() + 1,
            first_only: !cfg.deterministic,
            budget: cfg.node_budget,
            nodes: 0,
            best: None,
            exhausted: false,
        };
        for target in f.forced_in.len().max(1)..=g.order() {
            search.target = target;
            match f.forced_in.first() {
                Some(seed) => search.grow(1 << seed, f.forced_out.bits()),
                None => {
                    for seed in (g.vertices() - f.forced_out).iter() {
                        let below = VertexSet::full(seed).bits();
                        search.grow(1 << seed, f.forced_out.bits() | below);
                    }
                }
            }
            if search.exhausted {
                let best = fallback_set(&ctx, kind);
                return Ok(DominationCertificate::new(g, kind, best, false, search.nodes - 1, self.name()));
            }
            if let Some(set) = search.best {
                return Ok(DominationCertificate::new(g, kind, VertexSet::from_bits(set), true, search.nodes, self.name()));
            }
        }
        Ok(DominationCertificate::new(g, kind, g.vertices(), true, search.nodes, self.name()))
    }
}
