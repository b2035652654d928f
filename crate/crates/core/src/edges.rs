//! Fast enumeration of connected edge subgraphs of bounded girth.
//!
//! Candidate edges are split into *inner* ones (both endpoints already in
//! the solution's vertex set) and *outer* ones (exactly one endpoint in
//! it). Inner candidates are always branched on first; with that order an
//! iteration never holds more inner candidates than solution vertices.
//!
//! Each level keeps the hop distances `dist[x][y]` between all vertices of
//! the current solution graph, which turns every girth re-validation into a
//! constant-time lookup.

use crate::enumerate::{check_threshold, insert_sorted, EnumSummary, Emitter, SolutionSink};
use crate::table::Table;
use crate::{EdgeId, Error, Graph, Length, VertexId};

/// What the engine did to get into an iteration.
#[derive(Clone, Copy, Debug)]
pub struct Transition<'a> {
    /// Edge added by the step.
    pub chosen: EdgeId,
    /// Whether `chosen` was an inner candidate of the parent.
    pub inner: bool,
    /// The parent's inner candidates that were still live when `chosen`
    /// was picked (`chosen` first).
    pub parent_inner: &'a [EdgeId],
    /// Same for the outer candidates.
    pub parent_outer: &'a [EdgeId],
    pub parent_vertices: usize,
}

/// Read-only look at one iteration's state.
pub struct EdgeStateView<'a> {
    graph: &'a Graph,
    k: Length,
    depth: usize,
    level: &'a Level,
    in_solv: &'a [bool],
    done: &'a [bool],
    transition: Option<Transition<'a>>,
}

impl<'a> EdgeStateView<'a> {
    pub fn graph(&self) -> &'a Graph {
        self.graph
    }

    pub fn k(&self) -> Length {
        self.k
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Solution edges, ascending.
    pub fn solution(&self) -> &'a [EdgeId] {
        &self.level.solution
    }

    /// Vertices of the solution graph, ascending.
    pub fn vertices(&self) -> &'a [VertexId] {
        &self.level.solv
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.in_solv[v]
    }

    pub fn inner_candidates(&self) -> &'a [EdgeId] {
        &self.level.cin
    }

    pub fn outer_candidates(&self) -> &'a [EdgeId] {
        &self.level.cout
    }

    /// Whether `e` was branched on by an ancestor's earlier sibling.
    pub fn is_excluded(&self, e: EdgeId) -> bool {
        self.done[e]
    }

    /// Hop distance in the solution graph; infinite off its vertex set.
    pub fn dist(&self, x: VertexId, y: VertexId) -> Length {
        if !self.in_solv[x] || !self.in_solv[y] {
            Length::INFINITE
        } else if x == y {
            Length::ZERO
        } else {
            self.level.dist.get(x, y)
        }
    }

    /// Solution vertices incident to at least one candidate edge.
    pub fn attachment_vertices(&self) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = Vec::new();
        for &e in self.level.cin.iter().chain(&self.level.cout) {
            let ed = self.graph.edge(e);
            for x in [ed.u, ed.v] {
                if self.in_solv[x] {
                    out.push(x);
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Edges outside the solution, not excluded, with no endpoint in it.
    pub fn untouched_edges(&self) -> usize {
        self.graph
            .edges()
            .iter()
            .enumerate()
            .filter(|&(e, ed)| !self.done[e] && !self.in_solv[ed.u] && !self.in_solv[ed.v])
            .count()
    }

    pub fn transition(&self) -> Option<Transition<'a>> {
        self.transition
    }
}

/// Whether the iteration's children are explored.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Expand {
    Children,
    Prune,
}

/// Hooks into a run: testing, and pruning for the extremal search.
pub trait EdgeProbe {
    fn observe(&mut self, _state: &EdgeStateView<'_>) -> Expand {
        Expand::Children
    }
}

impl EdgeProbe for () {}

/// The edge branched on next: lowest inner candidate, else lowest outer.
pub fn select_edge(state: &EdgeStateView<'_>) -> Result<EdgeId, Error> {
    state
        .inner_candidates()
        .first()
        .or_else(|| state.outer_candidates().first())
        .copied()
        .ok_or_else(|| Error::Contract("no candidate edge to select".into()))
}

/// Whether `G[S ∪ {e, f}]` still has girth at least `k`, given that both
/// `S ∪ {e}` and `S ∪ {f}` do. Answered from the distance table of `S`.
/// An `e` already in `S` counts as a no-op.
pub fn pair_girth_ok(state: &EdgeStateView<'_>, e: EdgeId, f: EdgeId) -> bool {
    let g = state.graph;
    let k = state.k;
    let (x, y) = (g.edge(f).u, g.edge(f).v);
    let (a, b) = (g.edge(e).u, g.edge(e).v);
    let ins = |v: VertexId| state.in_solv[v];
    if e == f {
        return true;
    }
    if state.level.solution.binary_search(&e).is_ok() || (ins(a) && ins(b)) {
        if !(ins(x) && ins(y)) {
            // f hangs off the solution; it closes no cycle.
            return true;
        }
        let d = state.dist(x, y);
        let through_e = if ins(a) && ins(b) && state.level.solution.binary_search(&e).is_err() {
            (state.dist(x, a) + Length::ONE + state.dist(b, y)).min(state.dist(x, b) + Length::ONE + state.dist(a, y))
        } else {
            Length::INFINITE
        };
        return Length::ONE + d.min(through_e) >= k;
    }
    // e is outer: its new endpoint v has degree one in S ∪ {e}.
    let (u, v) = if ins(a) { (a, b) } else { (b, a) };
    if x == v || y == v {
        let w = if x == v { y } else { x };
        if !ins(w) {
            return true;
        }
        return Length::new(2) + state.dist(u, w) >= k;
    }
    if ins(x) && ins(y) {
        Length::ONE + state.dist(x, y) >= k
    } else {
        true
    }
}

struct Level {
    solution: Vec<EdgeId>,
    solv: Vec<VertexId>,
    cin: Vec<EdgeId>,
    cout: Vec<EdgeId>,
    dist: Table,
}

impl Level {
    fn new(n: usize) -> Level {
        Level { solution: Vec::new(), solv: Vec::new(), cin: Vec::new(), cout: Vec::new(), dist: Table::new(n) }
    }
}

/// Configured run of the edge engine.
#[derive(Clone, Debug)]
pub struct EdgeEnumerator<'g> {
    graph: &'g Graph,
    k: Length,
    include_empty: bool,
    limit: Option<u64>,
}

impl<'g> EdgeEnumerator<'g> {
    /// Fails on thresholds below 3 and on weighted graphs.
    pub fn new(graph: &'g Graph, k: Length) -> Result<Self, Error> {
        check_threshold(k)?;
        if graph.is_weighted() {
            return Err(Error::InvalidConfig(
                "the fast edge engine measures hop girth only; use the baseline engine for weights".into(),
            ));
        }
        Ok(EdgeEnumerator { graph, k, include_empty: true, limit: None })
    }

    pub fn include_empty(mut self, include: bool) -> Self {
        self.include_empty = include;
        self
    }

    pub fn limit(mut self, limit: Option<u64>) -> Self {
        self.limit = limit;
        self
    }

    pub fn run<S: SolutionSink + ?Sized>(&self, sink: &mut S) -> EnumSummary {
        self.run_probed(sink, &mut ())
    }

    pub fn run_probed<S, P>(&self, sink: &mut S, probe: &mut P) -> EnumSummary
    where
        S: SolutionSink + ?Sized,
        P: EdgeProbe + ?Sized,
    {
        let g = self.graph;
        let mut run = Run {
            g,
            k: self.k,
            include_empty: self.include_empty,
            levels: vec![Level::new(g.n())],
            in_solv: vec![false; g.n()],
            done: vec![false; g.m()],
            out: Emitter::new(sink, self.limit),
            probe,
        };
        run.explore(0, None);
        run.out.summary()
    }
}

/// Enumerates every connected edge subgraph of `g` with girth at least
/// `k`, the empty one included, each exactly once.
pub fn enumerate_edges_fast<S>(g: &Graph, k: Length, sink: &mut S) -> Result<EnumSummary, Error>
where
    S: SolutionSink + ?Sized,
{
    Ok(EdgeEnumerator::new(g, k)?.run(sink))
}

#[derive(Clone, Copy)]
struct Step {
    chosen: EdgeId,
    inner: bool,
    cin_from: usize,
    cout_from: usize,
}

struct Run<'a, 'g, S: SolutionSink + ?Sized, P: EdgeProbe + ?Sized> {
    g: &'g Graph,
    k: Length,
    include_empty: bool,
    levels: Vec<Level>,
    in_solv: Vec<bool>,
    done: Vec<bool>,
    out: Emitter<'a, S>,
    probe: &'a mut P,
}

impl<S: SolutionSink + ?Sized, P: EdgeProbe + ?Sized> Run<'_, '_, S, P> {
    fn explore(&mut self, d: usize, step: Option<Step>) {
        if d > 0 || self.include_empty {
            if !self.out.emit(&self.levels[d].solution, d) {
                return;
            }
        } else {
            self.out.visit(d);
        }
        let transition = step.map(|s| {
            let p = &self.levels[d - 1];
            Transition {
                chosen: s.chosen,
                inner: s.inner,
                parent_inner: &p.cin[s.cin_from..],
                parent_outer: &p.cout[s.cout_from..],
                parent_vertices: p.solv.len(),
            }
        });
        let view = EdgeStateView {
            graph: self.g,
            k: self.k,
            depth: d,
            level: &self.levels[d],
            in_solv: &self.in_solv,
            done: &self.done,
            transition,
        };
        if self.probe.observe(&view) == Expand::Prune {
            return;
        }
        if self.levels.len() == d + 1 {
            self.levels.push(Level::new(self.g.n()));
        }

        let mut marked = Vec::new();
        if d == 0 {
            for e in 0..self.g.m() {
                let ed = self.g.edge(e);
                self.seed(e);
                self.explore(1, None);
                self.in_solv[ed.u] = false;
                self.in_solv[ed.v] = false;
                if self.out.stopped {
                    break;
                }
                self.done[e] = true;
                marked.push(e);
            }
        } else {
            for i in 0..self.levels[d].cin.len() {
                let e = self.levels[d].cin[i];
                self.inner_step(d, i);
                self.explore(d + 1, Some(Step { chosen: e, inner: true, cin_from: i, cout_from: 0 }));
                if self.out.stopped {
                    break;
                }
                self.done[e] = true;
                marked.push(e);
            }
            if !self.out.stopped {
                let ncin = self.levels[d].cin.len();
                for j in 0..self.levels[d].cout.len() {
                    let e = self.levels[d].cout[j];
                    let v = self.outer_step(d, j);
                    self.explore(d + 1, Some(Step { chosen: e, inner: false, cin_from: ncin, cout_from: j }));
                    self.in_solv[v] = false;
                    if self.out.stopped {
                        break;
                    }
                    self.done[e] = true;
                    marked.push(e);
                }
            }
        }
        for e in marked {
            self.done[e] = false;
        }
    }

    /// Level 1 state for the single edge `e`.
    fn seed(&mut self, e: EdgeId) {
        let g = self.g;
        let ed = g.edge(e);
        let c = &mut self.levels[1];
        c.solution.clear();
        c.solution.push(e);
        c.solv.clear();
        c.solv.extend([ed.u, ed.v]);
        c.cin.clear();
        c.cout.clear();
        for x in [ed.u, ed.v] {
            c.dist.set(x, x, Length::ZERO);
            for &(_, f) in g.neighbors(x) {
                if f != e && !self.done[f] {
                    c.cout.push(f);
                }
            }
        }
        c.cout.sort_unstable();
        c.dist.set_sym(ed.u, ed.v, Length::ONE);
        self.in_solv[ed.u] = true;
        self.in_solv[ed.v] = true;
    }

    /// Adds the inner candidate `cin[i]` of level `d`.
    fn inner_step(&mut self, d: usize, i: usize) {
        let g = self.g;
        let k = self.k;
        let (lo, hi) = self.levels.split_at_mut(d + 1);
        let p = &lo[d];
        let c = &mut hi[0];
        let e = p.cin[i];
        let (a, b) = (g.edge(e).u, g.edge(e).v);

        c.solution.clone_from(&p.solution);
        insert_sorted(&mut c.solution, e);
        c.solv.clone_from(&p.solv);
        for &x in &p.solv {
            let (xa, xb) = (p.dist.get(x, a), p.dist.get(x, b));
            for &y in &p.solv {
                let via = (xa + Length::ONE + p.dist.get(b, y)).min(xb + Length::ONE + p.dist.get(a, y));
                c.dist.set(x, y, p.dist.get(x, y).min(via));
            }
        }
        c.cin.clear();
        for &f in &p.cin[i + 1..] {
            let (x, y) = (g.edge(f).u, g.edge(f).v);
            if Length::ONE + c.dist.get(x, y) >= k {
                c.cin.push(f);
            }
        }
        c.cout.clone_from(&p.cout);
    }

    /// Adds the outer candidate `cout[j]` of level `d`; returns the vertex
    /// it brings in.
    fn outer_step(&mut self, d: usize, j: usize) -> VertexId {
        let g = self.g;
        let k = self.k;
        let (lo, hi) = self.levels.split_at_mut(d + 1);
        let p = &lo[d];
        let c = &mut hi[0];
        let e = p.cout[j];
        let ed = g.edge(e);
        let (a, v) = if self.in_solv[ed.u] { (ed.u, ed.v) } else { (ed.v, ed.u) };

        c.solution.clone_from(&p.solution);
        insert_sorted(&mut c.solution, e);
        c.solv.clone_from(&p.solv);
        insert_sorted(&mut c.solv, v);
        for &x in &p.solv {
            for &y in &p.solv {
                c.dist.set(x, y, p.dist.get(x, y));
            }
            c.dist.set_sym(x, v, p.dist.get(x, a) + Length::ONE);
        }
        c.dist.set(v, v, Length::ZERO);

        // Every live inner candidate of the parent is done by now.
        c.cin.clear();
        let mut fresh = Vec::new();
        for &(w, f) in g.neighbors(v) {
            if f == e || self.done[f] {
                continue;
            }
            if self.in_solv[w] {
                if Length::new(2) + p.dist.get(a, w) >= k {
                    c.cin.push(f);
                }
            } else {
                fresh.push(f);
            }
        }
        c.cin.sort_unstable();
        fresh.sort_unstable();
        c.cout.clear();
        let rest = p.cout[j + 1..].iter().copied().filter(|&f| {
            let fd = g.edge(f);
            fd.u != v && fd.v != v
        });
        let mut rest = rest.peekable();
        let mut fresh = fresh.into_iter().peekable();
        loop {
            let next = match (rest.peek(), fresh.peek()) {
                (Some(&x), Some(&y)) if x < y => rest.next(),
                (Some(_), Some(_)) => fresh.next(),
                (Some(_), None) => rest.next(),
                (None, Some(_)) => fresh.next(),
                (None, None) => break,
            };
            c.cout.push(next.expect("peeked"));
        }
        self.in_solv[v] = true;
        v
    }
}
