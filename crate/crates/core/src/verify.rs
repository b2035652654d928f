//! Cross-checks of the engines against the exhaustive oracles.
//!
//! [`verify_matrix`] compares whole solution sets over a graph corpus;
//! [`check_induced_run`] and [`check_edge_run`] compare every intermediate
//! state of a fast run with values recomputed from scratch.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::edges::{EdgeEnumerator, EdgeProbe, EdgeStateView, Expand};
use crate::enumerate::baseline::{candidate_set_naive, enumerate_baseline, BaselineState};
use crate::enumerate::brute::brute_force_enumerate;
use crate::enumerate::{Collector, Connectivity, Counter, EnumConfig, Mode};
use crate::girth::{pair_distance, second_distance, view_girth_unweighted};
use crate::graph::{random_gnp, SubgraphView};
use crate::induced::{InducedEnumerator, InducedProbe, InducedStateView};
use crate::{EdgeSet, Graph, IdSet, Length, VertexId, VertexSet};

/// Every labelled connected graph on `n` vertices. Meant for `n ≤ 6`.
pub fn all_connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    assert!(pairs.len() < 32, "too many vertices for exhaustive generation");
    (0u32..1 << pairs.len())
        .map(|mask| {
            let edges = pairs.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p);
            Graph::from_edges(n, edges).expect("simple by construction")
        })
        .filter(Graph::is_connected)
        .collect()
}

/// `count` random graphs with 1..=`max_n` vertices and varying density.
pub fn random_corpus(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let p = rng.gen_range(0.2..0.9);
            random_gnp(n, p, &mut rng)
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Exhaustive corpus: all connected graphs on up to this many vertices.
    pub exhaustive_n: usize,
    pub random_graphs: usize,
    pub random_max_n: usize,
    /// Edge-mode cases are limited to graphs with at most this many edges.
    pub edge_max_m: usize,
    pub ks: Vec<Length>,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            exhaustive_n: 5,
            random_graphs: 50,
            random_max_n: 6,
            edge_max_m: 7,
            ks: vec![Length::new(3), Length::new(4), Length::new(5), Length::INFINITE],
            seed: 0x6972_7468,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub graph: String,
    pub k: Length,
    pub mode: Mode,
    pub connectivity: Connectivity,
    pub engine: &'static str,
    pub expected: usize,
    pub got: usize,
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub graphs: usize,
    /// (graph, k, mode, connectivity, engine) comparisons made.
    pub comparisons: u64,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graphs={}", self.graphs);
        let _ = writeln!(out, "comparisons={}", self.comparisons);
        let _ = writeln!(out, "mismatches={}", self.mismatches.len());
        for m in &self.mismatches {
            let _ = writeln!(
                out,
                "mismatch engine={} mode={:?} connectivity={:?} k={} expected={} got={} graph=[{}]",
                m.engine, m.mode, m.connectivity, m.k, m.expected, m.got, m.graph
            );
        }
        let _ = writeln!(out, "status={}", if self.passed() { "PASSED" } else { "FAILED" });
        out
    }
}

fn describe(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|e| format!("{}-{}", e.u, e.v)).collect();
    format!("n={} {}", g.n(), edges.join(" "))
}

/// Engines that apply to `cfg`, each run to completion and sorted.
fn engine_outputs(g: &Graph, cfg: &EnumConfig) -> Vec<(&'static str, Vec<Vec<usize>>)> {
    let mut outs = Vec::new();
    let mut c = Collector::default();
    enumerate_baseline(g, cfg, &mut c).expect("valid config");
    outs.push(("baseline", c.into_sorted()));
    if cfg.connectivity == Connectivity::Connected {
        let mut c = Collector::default();
        match cfg.mode {
            Mode::Induced => {
                InducedEnumerator::new(g, cfg.k).expect("unweighted").run(&mut c);
            }
            Mode::Edge => {
                EdgeEnumerator::new(g, cfg.k).expect("unweighted").run(&mut c);
            }
        }
        outs.push(("fast", c.into_sorted()));
    }
    outs
}

/// Compares one graph under every mode, connectivity and threshold.
pub fn verify_graph(g: &Graph, opts: &VerifyOptions, report: &mut VerifyReport) {
    for &k in &opts.ks {
        for mode in [Mode::Induced, Mode::Edge] {
            if mode == Mode::Edge && g.m() > opts.edge_max_m {
                continue;
            }
            for conn in [Connectivity::Connected, Connectivity::Any] {
                let cfg = EnumConfig::new(k, mode).connectivity(conn);
                let expected = brute_force_enumerate(g, &cfg).expect("corpus within budget");
                for (engine, got) in engine_outputs(g, &cfg) {
                    report.comparisons += 1;
                    if got != expected {
                        report.mismatches.push(Mismatch {
                            graph: describe(g),
                            k,
                            mode,
                            connectivity: conn,
                            engine,
                            expected: expected.len(),
                            got: got.len(),
                        });
                    }
                }
            }
        }
    }
    report.graphs += 1;
}

/// Runs the full equivalence matrix.
pub fn verify_matrix(opts: &VerifyOptions) -> VerifyReport {
    let mut report = VerifyReport::default();
    for n in 0..=opts.exhaustive_n {
        for g in all_connected_graphs(n) {
            verify_graph(&g, opts, &mut report);
        }
    }
    for g in random_corpus(opts.random_graphs, opts.random_max_n, opts.seed) {
        verify_graph(&g, opts, &mut report);
    }
    report
}

/// Outcome of a state-by-state check of one fast run.
#[derive(Clone, Debug, Default)]
pub struct FidelityReport {
    pub iterations: u64,
    /// Checks made, by invariant.
    pub checks: BTreeMap<&'static str, u64>,
    /// Failed checks, by invariant.
    pub failures: BTreeMap<&'static str, u64>,
    /// The first few failures in detail.
    pub examples: Vec<String>,
}

impl FidelityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn checked(&self, invariant: &str) -> u64 {
        self.checks.get(invariant).copied().unwrap_or(0)
    }

    pub fn failed(&self, invariant: &str) -> u64 {
        self.failures.get(invariant).copied().unwrap_or(0)
    }

    fn check(&mut self, invariant: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        *self.checks.entry(invariant).or_default() += 1;
        if !ok {
            *self.failures.entry(invariant).or_default() += 1;
            if self.examples.len() < 20 {
                self.examples.push(format!("{invariant}: {}", detail()));
            }
        }
    }
}

struct InducedChecker(FidelityReport);

impl InducedProbe for InducedChecker {
    fn observe(&mut self, s: &InducedStateView<'_>) {
        let g = s.graph();
        let r = &mut self.0;
        r.iterations += 1;
        let sol = VertexSet::from_ids(g.n(), s.solution().iter().copied()).expect("in range");
        let cand = s.candidates();

        let mut state = BaselineState::empty(g, Mode::Induced);
        state.solution = sol.clone();
        for v in 0..g.n() {
            if s.status(v) == crate::induced::VertexStatus::DoneExcluded {
                state.excluded.insert(v);
            }
        }
        let naive = candidate_set_naive(g, &state, &EnumConfig::induced(s.k()));
        r.check("candidates", naive == cand, || format!("S={:?} got {cand:?} want {naive:?}", s.solution()));

        let rows: Vec<VertexId> = s.solution().iter().copied().chain(cand.iter().copied()).collect();
        for &x in &rows {
            for &u in &cand {
                let want = if x == u { Length::ZERO } else { pair_distance(g, &sol, x, u) };
                let got = s.dist(x, u);
                r.check("dist", got == want, || format!("S={:?} dist[{x}][{u}]={got} want {want}", s.solution()));
            }
        }
        for &u in &cand {
            for &w in &cand {
                if u != w {
                    let want = second_distance(g, &sol, u, w).expect("u, w outside S");
                    let got = s.tad(u, w);
                    r.check("tad", got == want, || format!("S={:?} tad[{u}][{w}]={got} want {want}", s.solution()));
                }
            }
        }
    }

    fn filtered(&mut self, p: &InducedStateView<'_>, v: VertexId, u: VertexId, kept: bool) {
        let g = p.graph();
        let ids = p.solution().iter().copied().chain([v, u]);
        let vs = VertexSet::from_ids(g.n(), ids).expect("in range");
        let ok = view_girth_unweighted(&SubgraphView::induced(g, &vs)) >= p.k();
        self.0.check("filter", kept == ok, || format!("S={:?} + {v}: kept {u} = {kept}, girth test says {ok}", p.solution()));
    }
}

/// Runs the induced engine on `g` for at most `limit` iterations, checking
/// the candidate list, both tables and every candidate test.
pub fn check_induced_run(g: &Graph, k: Length, limit: Option<u64>) -> Result<FidelityReport, crate::Error> {
    let mut checker = InducedChecker(FidelityReport::default());
    InducedEnumerator::new(g, k)?.limit(limit).run_probed(&mut Counter::default(), &mut checker);
    Ok(checker.0)
}

struct EdgeChecker(FidelityReport);

fn incident(g: &Graph, sol: &[usize], x: VertexId) -> usize {
    sol.iter().filter(|&&f| g.edge(f).u == x || g.edge(f).v == x).count()
}

impl EdgeProbe for EdgeChecker {
    fn observe(&mut self, s: &EdgeStateView<'_>) -> Expand {
        let g = s.graph();
        let r = &mut self.0;
        r.iterations += 1;
        if s.depth() == 0 {
            return Expand::Children;
        }
        let mut state = BaselineState::empty(g, Mode::Edge);
        state.solution = IdSet::from_ids(g.m(), s.solution().iter().copied()).expect("in range");
        state.excluded = IdSet::from_ids(g.m(), (0..g.m()).filter(|&e| s.is_excluded(e))).expect("in range");
        let naive = candidate_set_naive(g, &state, &EnumConfig::edge(s.k()));
        let (inner, outer): (Vec<usize>, Vec<usize>) = naive.into_iter().partition(|&f| {
            let e = g.edge(f);
            s.contains_vertex(e.u) && s.contains_vertex(e.v)
        });
        r.check("inner", s.inner_candidates() == inner.as_slice(), || {
            format!("S={:?} got {:?} want {inner:?}", s.solution(), s.inner_candidates())
        });
        r.check("outer", s.outer_candidates() == outer.as_slice(), || {
            format!("S={:?} got {:?} want {outer:?}", s.solution(), s.outer_candidates())
        });

        let es = EdgeSet::from_ids(g.m(), s.solution().iter().copied()).expect("in range");
        let view = SubgraphView::edge_induced(g, &es);
        for &x in s.vertices() {
            let bfs = bfs(&view, x, g.n());
            for &y in s.vertices() {
                r.check("dist", s.dist(x, y) == bfs[y], || {
                    format!("S={:?} dist[{x}][{y}]={} want {}", s.solution(), s.dist(x, y), bfs[y])
                });
            }
        }
        r.check("inner-bound", s.inner_candidates().len() <= s.vertices().len(), || {
            format!("S={:?} |cin|={} |V|={}", s.solution(), s.inner_candidates().len(), s.vertices().len())
        });

        if let Some(t) = s.transition() {
            if t.inner {
                r.check("inner-step-outer-unchanged", t.parent_outer == s.outer_candidates(), || {
                    format!("S={:?} outer {:?} -> {:?}", s.solution(), t.parent_outer, s.outer_candidates())
                });
                r.check("inner-step-shrinks", s.inner_candidates().len() < t.parent_inner.len(), || {
                    format!("S={:?} inner {:?} -> {:?}", s.solution(), t.parent_inner, s.inner_candidates())
                });
            } else {
                let removed = t.parent_outer.iter().filter(|f| !s.outer_candidates().contains(f)).count();
                let added = s.outer_candidates().iter().filter(|f| !t.parent_outer.contains(f)).count();
                let e = g.edge(t.chosen);
                let v = if incident(g, s.solution(), e.u) == 1 { e.u } else { e.v };
                r.check("outer-step-removed", removed <= s.vertices().len(), || {
                    format!("S={:?} removed {removed} > |V|={}", s.solution(), s.vertices().len())
                });
                r.check("outer-step-added", added < g.degree(v), || {
                    format!("S={:?} added {added}, new vertex {v} of degree {}", s.solution(), g.degree(v))
                });
            }
        }
        Expand::Children
    }
}

fn bfs(view: &SubgraphView<'_>, root: VertexId, n: usize) -> Vec<Length> {
    let mut dist = vec![Length::INFINITE; n];
    dist[root] = Length::ZERO;
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(a) = queue.pop_front() {
        for (b, _) in view.neighbors(a) {
            if !dist[b].is_finite() {
                dist[b] = dist[a] + Length::ONE;
                queue.push_back(b);
            }
        }
    }
    dist
}

/// Runs the edge engine on `g` for at most `limit` iterations, checking the
/// candidate partition, the distance table and the candidate-size bounds.
pub fn check_edge_run(g: &Graph, k: Length, limit: Option<u64>) -> Result<FidelityReport, crate::Error> {
    let mut checker = EdgeChecker(FidelityReport::default());
    EdgeEnumerator::new(g, k)?.limit(limit).run_probed(&mut Counter::default(), &mut checker);
    Ok(checker.0)
}
