//! Fast enumeration of connected induced subgraphs of bounded girth.
//!
//! Every level of the recursion holds its own copy of the state: the
//! solution `S`, the candidate list, a per-vertex status, and two tables
//! over candidates,
//!
//! * `dist[x][u]`: distance between `x ∈ S ∪ cand` and `u ∈ cand` in
//!   `G[S ∪ {x, u}]`;
//! * `tad[u][w]`: the same distance once the first edge of a shortest path
//!   from `u` is deleted (the second distance).
//!
//! Adding `v` keeps an old candidate `u` iff `dist[u][v] + tad[u][v] ≥ k`.
//! The new candidates are the unreached neighbours of `v`. Both tables are
//! then updated incrementally instead of recomputed.

use crate::enumerate::{check_threshold, insert_sorted, EnumSummary, Emitter, SolutionSink};
use crate::table::Table;
use crate::{Error, Graph, Length, VertexId};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum VertexStatus {
    InSolution,
    Candidate,
    /// Adding the vertex would close a cycle shorter than `k`. Absorbing.
    GirthExcluded,
    /// Branched on by an earlier sibling. Absorbing within the subtree.
    DoneExcluded,
    /// Not adjacent to the solution yet.
    Unreached,
}

/// Read-only look at one iteration's state.
pub struct InducedStateView<'a> {
    graph: &'a Graph,
    k: Length,
    depth: usize,
    level: &'a Level,
}

impl<'a> InducedStateView<'a> {
    pub fn graph(&self) -> &'a Graph {
        self.graph
    }

    pub fn k(&self) -> Length {
        self.k
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// The solution, ascending.
    pub fn solution(&self) -> &'a [VertexId] {
        &self.level.solution
    }

    /// Current candidates, ascending.
    pub fn candidates(&self) -> Vec<VertexId> {
        let status = &self.level.status;
        self.level.cand.iter().copied().filter(|&u| status[u] == VertexStatus::Candidate).collect()
    }

    pub fn status(&self, v: VertexId) -> VertexStatus {
        self.level.status[v]
    }

    /// `dist[x][u]`; infinite unless `x ∈ S ∪ cand` and `u ∈ cand`.
    pub fn dist(&self, x: VertexId, u: VertexId) -> Length {
        let st = &self.level.status;
        let x_ok = matches!(st[x], VertexStatus::InSolution | VertexStatus::Candidate);
        if st[u] != VertexStatus::Candidate || !x_ok {
            return Length::INFINITE;
        }
        if x == u {
            return Length::ZERO;
        }
        self.level.dist.get(x, u)
    }

    /// `tad[u][w]`; infinite unless `u ≠ w` are both candidates.
    pub fn tad(&self, u: VertexId, w: VertexId) -> Length {
        let st = &self.level.status;
        if u == w || st[u] != VertexStatus::Candidate || st[w] != VertexStatus::Candidate {
            return Length::INFINITE;
        }
        self.level.tad.get(u, w)
    }
}

/// Hooks into a run, mostly for testing.
pub trait InducedProbe {
    /// Called once per iteration, before its children.
    fn observe(&mut self, _state: &InducedStateView<'_>) {}

    /// Called for each old candidate `u` tested when `added` joins the
    /// solution of `parent`; `kept` is the outcome of the table test.
    fn filtered(&mut self, _parent: &InducedStateView<'_>, _added: VertexId, _u: VertexId, _kept: bool) {}
}

impl InducedProbe for () {}

/// How the second-distance table was refreshed over a run.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct TadStats {
    /// Constant-time update where the old shortest path stays shortest.
    pub kept_shortest: u64,
    /// Constant-time update where the path through the added vertex is
    /// at least as short.
    pub via_added: u64,
    /// Old pairs recomputed from the neighbours of `u`.
    pub recomputed: u64,
    /// Pairs involving a freshly adopted candidate.
    pub fresh: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct InducedReport {
    pub summary: EnumSummary,
    pub tad: TadStats,
    /// Old candidates tested against the table.
    pub candidate_tests: u64,
    /// `dist` cells written.
    pub dist_updates: u64,
}

struct Level {
    status: Vec<VertexStatus>,
    solution: Vec<VertexId>,
    cand: Vec<VertexId>,
    dist: Table,
    tad: Table,
    old: Vec<VertexId>,
    fresh: Vec<VertexId>,
}

impl Level {
    fn new(n: usize) -> Level {
        Level {
            status: vec![VertexStatus::Unreached; n],
            solution: Vec::new(),
            cand: Vec::new(),
            dist: Table::new(n),
            tad: Table::new(n),
            old: Vec::new(),
            fresh: Vec::new(),
        }
    }
}

/// Configured run of the induced engine.
#[derive(Clone, Debug)]
pub struct InducedEnumerator<'g> {
    graph: &'g Graph,
    k: Length,
    include_empty: bool,
    limit: Option<u64>,
}

impl<'g> InducedEnumerator<'g> {
    /// Fails on thresholds below 3 and on weighted graphs.
    pub fn new(graph: &'g Graph, k: Length) -> Result<Self, Error> {
        check_threshold(k)?;
        if graph.is_weighted() {
            return Err(Error::InvalidConfig(
                "the fast induced engine measures hop girth only; use the baseline engine for weights".into(),
            ));
        }
        Ok(InducedEnumerator { graph, k, include_empty: true, limit: None })
    }

    pub fn include_empty(mut self, include: bool) -> Self {
        self.include_empty = include;
        self
    }

    pub fn limit(mut self, limit: Option<u64>) -> Self {
        self.limit = limit;
        self
    }

    pub fn run<S: SolutionSink + ?Sized>(&self, sink: &mut S) -> InducedReport {
        self.run_probed(sink, &mut ())
    }

    pub fn run_probed<S, P>(&self, sink: &mut S, probe: &mut P) -> InducedReport
    where
        S: SolutionSink + ?Sized,
        P: InducedProbe + ?Sized,
    {
        let mut run = Run {
            g: self.graph,
            k: self.k,
            include_empty: self.include_empty,
            levels: Vec::new(),
            out: Emitter::new(sink, self.limit),
            probe,
            report: InducedReport::default(),
        };
        run.levels.push(root_level(self.graph));
        run.explore(0);
        let mut report = run.report;
        report.summary = run.out.summary();
        report
    }
}

/// Enumerates every connected induced subgraph of `g` with girth at least
/// `k`, the empty one included, each exactly once.
pub fn enumerate_induced_fast<S>(g: &Graph, k: Length, sink: &mut S) -> Result<EnumSummary, Error>
where
    S: SolutionSink + ?Sized,
{
    Ok(InducedEnumerator::new(g, k)?.run(sink).summary)
}

fn root_level(g: &Graph) -> Level {
    let n = g.n();
    let mut lv = Level::new(n);
    lv.status.fill(VertexStatus::Candidate);
    lv.cand = (0..n).collect();
    for x in 0..n {
        lv.dist.set(x, x, Length::ZERO);
        for &(y, _) in g.neighbors(x) {
            lv.dist.set(x, y, Length::ONE);
        }
    }
    lv
}

struct Run<'a, 'g, S: SolutionSink + ?Sized, P: InducedProbe + ?Sized> {
    g: &'g Graph,
    k: Length,
    include_empty: bool,
    levels: Vec<Level>,
    out: Emitter<'a, S>,
    probe: &'a mut P,
    report: InducedReport,
}

impl<S: SolutionSink + ?Sized, P: InducedProbe + ?Sized> Run<'_, '_, S, P> {
    fn explore(&mut self, d: usize) {
        if d > 0 || self.include_empty {
            if !self.out.emit(&self.levels[d].solution, d) {
                return;
            }
        } else {
            self.out.visit(d);
        }
        self.probe.observe(&InducedStateView { graph: self.g, k: self.k, depth: d, level: &self.levels[d] });

        if self.levels.len() == d + 1 {
            self.levels.push(Level::new(self.g.n()));
        }
        for i in 0..self.levels[d].cand.len() {
            let v = self.levels[d].cand[i];
            self.descend(d, v);
            self.explore(d + 1);
            if self.out.stopped {
                return;
            }
            self.levels[d].status[v] = VertexStatus::DoneExcluded;
        }
    }

    /// Builds the state of `S ∪ {v}` from level `d` into level `d + 1`.
    fn descend(&mut self, d: usize, v: VertexId) {
        use VertexStatus::*;
        let g = self.g;
        let k = self.k;
        let (lo, hi) = self.levels.split_at_mut(d + 1);
        let p = &lo[d];
        let c = &mut hi[0];
        let root = p.solution.is_empty();

        c.status.copy_from_slice(&p.status);
        c.status[v] = InSolution;
        c.solution.clone_from(&p.solution);
        insert_sorted(&mut c.solution, v);

        c.old.clear();
        c.fresh.clear();
        for &u in &p.cand {
            if u == v || p.status[u] != Candidate {
                continue;
            }
            if root {
                // From a single vertex the candidates are just its neighbours.
                if g.adjacent(u, v) {
                    c.old.push(u);
                } else {
                    c.status[u] = Unreached;
                }
                continue;
            }
            self.report.candidate_tests += 1;
            let kept = p.dist.get(u, v) + p.tad.get(u, v) >= k;
            let view = InducedStateView { graph: g, k, depth: d, level: p };
            self.probe.filtered(&view, v, u, kept);
            if kept {
                c.old.push(u);
            } else {
                c.status[u] = GirthExcluded;
            }
        }
        if !root {
            for &(w, _) in g.neighbors(v) {
                if p.status[w] == Unreached {
                    c.fresh.push(w);
                    c.status[w] = Candidate;
                }
            }
        }
        c.cand.clear();
        merge_into(&mut c.cand, &c.old, &c.fresh);

        // Distances: relax through v for old pairs, attach fresh vertices via v.
        let mut writes = 0u64;
        for &u in &c.old {
            let dvu = p.dist.get(v, u);
            for &x in &p.solution {
                c.dist.set(x, u, p.dist.get(x, u).min(p.dist.get(x, v) + dvu));
            }
            c.dist.set(v, u, dvu);
            c.dist.set(u, u, Length::ZERO);
            writes += p.solution.len() as u64 + 1;
        }
        for (i, &u) in c.old.iter().enumerate() {
            for &u2 in &c.old[i + 1..] {
                let via = p.dist.get(u, v) + p.dist.get(v, u2);
                c.dist.set_sym(u, u2, p.dist.get(u, u2).min(via));
                writes += 1;
            }
        }
        for (i, &w) in c.fresh.iter().enumerate() {
            for &x in &p.solution {
                c.dist.set(x, w, p.dist.get(x, v) + Length::ONE);
            }
            c.dist.set(v, w, Length::ONE);
            c.dist.set(w, w, Length::ZERO);
            for &u in &c.old {
                let val = if g.adjacent(u, w) { Length::ONE } else { p.dist.get(u, v) + Length::ONE };
                c.dist.set_sym(u, w, val);
            }
            for &w2 in &c.fresh[i + 1..] {
                let val = if g.adjacent(w, w2) { Length::ONE } else { Length::new(2) };
                c.dist.set_sym(w, w2, val);
            }
            writes += (p.solution.len() + c.old.len() + c.fresh.len() - i) as u64;
        }
        self.report.dist_updates += writes;

        // Second distances.
        let stats = &mut self.report.tad;
        for &u in &c.cand {
            let u_old = p.status[u] == Candidate;
            for &w in &c.cand {
                if u == w {
                    continue;
                }
                let val = if u_old && p.status[w] == Candidate && !root {
                    let p1 = p.dist.get(u, w);
                    let p3 = p.tad.get(u, w);
                    if p1 + p3 < k {
                        let p2 = p.dist.get(u, v) + p.dist.get(v, w);
                        if p1 < p2 {
                            stats.kept_shortest += 1;
                        } else {
                            stats.via_added += 1;
                        }
                        p1.max(p2).min(p3)
                    } else {
                        stats.recomputed += 1;
                        second_from_neighbors(g, c, u, w)
                    }
                } else {
                    stats.fresh += 1;
                    second_from_neighbors(g, c, u, w)
                };
                c.tad.set(u, w, val);
            }
        }
    }
}

/// Second distance from `u` to `w` out of the already updated `dist`:
/// the shortest `y → w` continuation over the neighbours `y` of `u`
/// inside the pair graph, skipping the first edge of a shortest path.
fn second_from_neighbors(g: &Graph, lv: &Level, u: VertexId, w: VertexId) -> Length {
    let d = lv.dist.get(u, w);
    if !d.is_finite() {
        return Length::INFINITE;
    }
    let mut skipped = false;
    let mut best = Length::INFINITE;
    for &(y, _) in g.neighbors(u) {
        let dy = if y == w {
            Length::ZERO
        } else if lv.status[y] == VertexStatus::InSolution {
            lv.dist.get(y, w)
        } else {
            continue;
        };
        let via = dy + Length::ONE;
        if !skipped && via == d {
            skipped = true;
            continue;
        }
        best = best.min(via);
    }
    best
}

fn merge_into(out: &mut Vec<usize>, a: &[usize], b: &[usize]) {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] < b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
}
