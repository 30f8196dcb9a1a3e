use std::collections::BTreeMap;
use std::sync::Arc;

use super::{forcing, DominationCertificate, DominationKind, ExhaustiveSolver, GrowSolver, LayeredSolver, SearchContext, SolverConfig};
use crate::error::{DomError, Result};
use crate::graph::{is_connected, Graph, VertexSet};

pub const DEFAULT_SOLVER: &str = "layered";

/// An exact minimum-set search. Implementations must return a certificate
/// whose set satisfies the predicate for `kind`; `optimal` may only be set when
/// no smaller set exists.
pub trait DominationSolver: Send + Sync {
    fn name(&self) -> &'static str;

    fn supports(&self, _kind: DominationKind) -> bool {
        true
    }

    fn solve(&self, g: &Graph, kind: DominationKind, cfg: &SolverConfig) -> Result<DominationCertificate>;
}

/// Solvers addressable by name.
#[derive(Clone)]
pub struct SolverRegistry {
    solvers: BTreeMap<&'static str, Arc<dyn DominationSolver>>,
}

impl SolverRegistry {
    pub fn empty() -> Self {
        SolverRegistry { solvers: BTreeMap::new() }
    }

    /// `layered` (default), `grow` and `exhaustive`.
    pub fn builtin() -> Self {
        let mut r = Self::empty();
        r.register(Arc::new(LayeredSolver));
        r.register(Arc::new(GrowSolver));
        r.register(Arc::new(ExhaustiveSolver::default()));
        r
    }

    /// Adds a solver, returning the one it replaced under the same name.
    pub fn register(&mut self, solver: Arc<dyn DominationSolver>) -> Option<Arc<dyn DominationSolver>> {
        self.solvers.insert(solver.name(), solver)
    }

    pub fn get(&self, name: &str) -> Result<Arc<dyn DominationSolver>> {
        self.solvers.get(name).cloned().ok_or_else(|| DomError::UnknownSolver(name.to_string()))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.solvers.keys().copied().collect()
    }
}

impl Default for SolverRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}

impl std::fmt::Debug for SolverRegistry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.solvers.keys()).finish()
    }
}

/// Shared precondition checks for every strategy.
pub(crate) fn check_input(solver: &dyn DominationSolver, g: &Graph, kind: DominationKind, cfg: &SolverConfig) -> Result<()> {
    cfg.validate()?;
    if !solver.supports(kind) {
        return Err(DomError::UnsupportedKind { solver: solver.name().into(), kind: kind.to_string() });
    }
    if kind != DominationKind::Dominating && !is_connected(g) {
        return Err(DomError::Disconnected);
    }
    Ok(())
}

/// Answer for graphs whose minimum is a single vertex found without search:
/// `K_1`, or any graph with a universal vertex (which is trivially weakly convex).
pub(crate) fn trivial_answer(g: &Graph) -> Option<VertexSet> {
    (0..g.order()).find(|&v| g.closed_neighbors(v) == g.vertices()).map(VertexSet::singleton)
}

/// Feasible fallback when the budget runs out: all non-simplicial vertices if
/// they qualify, otherwise the whole vertex set.
pub(crate) fn fallback_set(ctx: &SearchContext<'_>, kind: DominationKind) -> VertexSet {
    let f = forcing(ctx.g, DominationKind::Connected, true);
    let trimmed = ctx.g.vertices() - f.forced_out;
    if !trimmed.is_empty() && ctx.accepts(kind, trimmed.bits()) {
        trimmed
    } else {
        ctx.g.vertices()
    }
}
