//! Binary partition with from-scratch candidate sets.
//!
//! Every iteration outputs its solution `S`, computes the candidate set by
//! testing each remaining element with the girth oracle, and recurses on
//! `S ∪ {x}` for each candidate `x` in ascending order. Candidates already
//! branched on at this level are excluded from later siblings' subtrees,
//! which makes the subtrees disjoint.

use super::{insert_sorted, Connectivity, EnumConfig, EnumSummary, Emitter, Mode, SolutionSink};
use crate::girth::{view_girth_unweighted, view_girth_weighted};
use crate::graph::SubgraphView;
use crate::{Error, Graph, IdSet};

/// Partial solution plus the elements excluded along the current path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaselineState {
    /// Vertex ids in induced mode, edge ids in edge mode.
    pub solution: IdSet,
    pub excluded: IdSet,
}

impl BaselineState {
    pub fn empty(g: &Graph, mode: Mode) -> BaselineState {
        let universe = match mode {
            Mode::Induced => g.n(),
            Mode::Edge => g.m(),
        };
        BaselineState { solution: IdSet::new(universe), excluded: IdSet::new(universe) }
    }
}

/// Whether the subgraph selected by `elements` is a solution under `cfg`.
pub(crate) fn is_solution(g: &Graph, elements: &IdSet, cfg: &EnumConfig) -> bool {
    let view = match cfg.mode {
        Mode::Induced => SubgraphView::induced(g, elements),
        Mode::Edge => SubgraphView::edge_induced(g, elements),
    };
    if cfg.connectivity == Connectivity::Connected && !view.is_connected() {
        return false;
    }
    let girth = if cfg.weighted {
        view_girth_weighted(&view)
    } else {
        view_girth_unweighted(&view)
    };
    girth >= cfg.k
}

/// Elements outside `S` and not excluded whose addition yields a solution,
/// ascending. Each element is checked from scratch.
pub fn candidate_set_naive(g: &Graph, state: &BaselineState, cfg: &EnumConfig) -> Vec<usize> {
    let mut trial = state.solution.clone();
    let mut out = Vec::new();
    for x in 0..state.solution.universe() {
        if state.solution.contains(x) || state.excluded.contains(x) {
            continue;
        }
        trial.insert(x);
        if is_solution(g, &trial, cfg) {
            out.push(x);
        }
        trial.remove(x);
    }
    out
}

struct Baseline<'a, 'g, S: SolutionSink + ?Sized> {
    g: &'g Graph,
    cfg: &'a EnumConfig,
    state: BaselineState,
    ordered: Vec<usize>,
    out: Emitter<'a, S>,
}

impl<S: SolutionSink + ?Sized> Baseline<'_, '_, S> {
    fn explore(&mut self, depth: usize) {
        if depth > 0 || self.cfg.include_empty {
            if !self.out.emit(&self.ordered, depth) {
                return;
            }
        } else {
            self.out.visit(depth);
        }
        let candidates = candidate_set_naive(self.g, &self.state, self.cfg);
        let mut done = Vec::with_capacity(candidates.len());
        for x in candidates {
            self.state.solution.insert(x);
            insert_sorted(&mut self.ordered, x);
            self.explore(depth + 1);
            self.state.solution.remove(x);
            let pos = self.ordered.binary_search(&x).expect("x was inserted");
            self.ordered.remove(pos);
            if self.out.stopped {
                break;
            }
            self.state.excluded.insert(x);
            done.push(x);
        }
        for x in done {
            self.state.excluded.remove(x);
        }
    }
}

/// Enumerates every solution of `cfg` in `g` exactly once.
///
/// Works for both modes, weighted girth and disconnected solutions. Output
/// order is the depth-first order of the recursion with ascending
/// candidates.
pub fn enumerate_baseline<S>(g: &Graph, cfg: &EnumConfig, sink: &mut S) -> Result<EnumSummary, Error>
where
    S: SolutionSink + ?Sized,
{
    cfg.validate_for(g)?;
    let mut run = Baseline {
        g,
        cfg,
        state: BaselineState::empty(g, cfg.mode),
        ordered: Vec::new(),
        out: Emitter::new(sink, cfg.limit),
    };
    run.explore(0);
    Ok(run.out.summary())
}
