//! Densest `n`-vertex graphs of girth at least `k`.
//!
//! Every such graph is an edge subgraph of `K_n`, so the search enumerates
//! the edge subgraphs of `K_n` with girth at least `k` and keeps the largest.
//! A branch is cut once even taking every edge it could still reach would
//! not beat the best solution found so far.

use std::cell::Cell;
use std::fmt::Write as _;

use crate::edges::{EdgeEnumerator, EdgeProbe, EdgeStateView, Expand};
use crate::enumerate::baseline::enumerate_baseline;
use crate::enumerate::{check_threshold, Connectivity, EnumConfig, Flow};
use crate::graph::complete;
use crate::{EdgeId, EdgeSet, Error, Graph, Length};

/// Upper bound on the work of one search.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ExtremalBudget {
    /// Stop after this many subgraphs have been reported by the enumerator.
    pub max_explored: Option<u64>,
}

impl ExtremalBudget {
    pub fn unlimited() -> Self {
        ExtremalBudget { max_explored: None }
    }

    pub fn explored(limit: u64) -> Self {
        ExtremalBudget { max_explored: Some(limit) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalResult {
    pub n: usize,
    pub k: Length,
    pub max_edges: usize,
    /// Edge sets of `K_n` (as built by [`complete`]) with `max_edges` edges,
    /// ascending. Labelled graphs, not isomorphism classes.
    pub witnesses: Vec<Vec<EdgeId>>,
    /// Subgraphs reported by the enumerator.
    pub explored: u64,
    /// False when the budget ran out; `max_edges` is then a lower bound.
    pub complete: bool,
    pub connected_only: bool,
}

impl ExtremalResult {
    /// The witnesses as graphs on `0..n`.
    pub fn witness_graphs(&self) -> Vec<Graph> {
        let kn = complete(self.n);
        self.witnesses
            .iter()
            .map(|w| Graph::from_edges(self.n, w.iter().map(|&e| (kn.edge(e).u, kn.edge(e).v))).expect("subgraph of K_n"))
            .collect()
    }

    /// One witness per isomorphism class, in first-seen order. Limited to
    /// `n ≤ 8`.
    pub fn distinct_witnesses(&self) -> Result<Vec<Vec<EdgeId>>, Error> {
        if self.n > 8 {
            return Err(Error::InvalidConfig(format!("isomorphism filtering supports n ≤ 8, got {}", self.n)));
        }
        let mut reps: Vec<(Vec<usize>, Graph, Vec<EdgeId>)> = Vec::new();
        for (w, g) in self.witnesses.iter().zip(self.witness_graphs()) {
            let degs = degree_sequence(&g);
            if !reps.iter().any(|(d, h, _)| *d == degs && isomorphic(h, &g)) {
                reps.push((degs, g, w.clone()));
            }
        }
        Ok(reps.into_iter().map(|(_, _, w)| w).collect())
    }

    /// Plain `key=value` report followed by one line per witness.
    pub fn report(&self) -> String {
        let kn = complete(self.n);
        let mut out = String::new();
        let _ = writeln!(out, "n={}", self.n);
        let _ = writeln!(out, "k={}", self.k);
        let _ = writeln!(out, "max_edges={}", self.max_edges);
        let _ = writeln!(out, "explored={}", self.explored);
        let _ = writeln!(out, "complete={}", self.complete);
        let _ = writeln!(out, "connected_only={}", self.connected_only);
        let _ = writeln!(out, "witnesses={}", self.witnesses.len());
        for w in &self.witnesses {
            let pairs: Vec<String> = w.iter().map(|&e| format!("{}-{}", kn.edge(e).u, kn.edge(e).v)).collect();
            let _ = writeln!(out, "witness {}", pairs.join(" "));
        }
        out
    }
}

/// Configurable search; [`densest_girth_graphs`] covers the common case.
#[derive(Clone, Copy, Debug)]
pub struct ExtremalSearch {
    n: usize,
    k: Length,
    budget: ExtremalBudget,
    prune: bool,
    connectivity: Connectivity,
}

impl ExtremalSearch {
    pub fn new(n: usize, k: Length) -> Self {
        ExtremalSearch { n, k, budget: ExtremalBudget::default(), prune: true, connectivity: Connectivity::Connected }
    }

    pub fn budget(mut self, budget: ExtremalBudget) -> Self {
        self.budget = budget;
        self
    }

    /// Turn the bound off, e.g. to cross-check it.
    pub fn prune(mut self, prune: bool) -> Self {
        self.prune = prune;
        self
    }

    /// `Any` also admits disconnected witnesses; it runs on the baseline
    /// engine and never prunes.
    pub fn connectivity(mut self, connectivity: Connectivity) -> Self {
        self.connectivity = connectivity;
        self
    }

    pub fn run(&self) -> Result<ExtremalResult, Error> {
        if self.n == 0 {
            return Err(Error::InvalidConfig("extremal search needs n ≥ 1".into()));
        }
        check_threshold(self.k)?;
        let kn = complete(self.n);
        let best = Cell::new(0usize);
        let mut witnesses: Vec<Vec<EdgeId>> = Vec::new();
        let mut record = |sol: &[usize], _: u64| {
            if sol.len() > best.get() {
                best.set(sol.len());
                witnesses.clear();
            }
            if sol.len() == best.get() {
                witnesses.push(sol.to_vec());
            }
            Flow::Continue
        };
        let summary = match self.connectivity {
            Connectivity::Connected => {
                let mut bound = Bound { best: &best, prune: self.prune };
                EdgeEnumerator::new(&kn, self.k)?
                    .limit(self.budget.max_explored)
                    .run_probed(&mut record, &mut bound)
            }
            Connectivity::Any => {
                let cfg = EnumConfig::edge(self.k).connectivity(Connectivity::Any).limit(self.budget.max_explored);
                enumerate_baseline(&kn, &cfg, &mut record)?
            }
        };
        Ok(ExtremalResult {
            n: self.n,
            k: self.k,
            max_edges: best.get(),
            witnesses,
            explored: summary.solutions,
            complete: !summary.stopped,
            connected_only: self.connectivity == Connectivity::Connected,
        })
    }
}

/// Connected densest girth-`k` subgraphs of `K_n`, with pruning.
pub fn densest_girth_graphs(n: usize, k: Length, budget: ExtremalBudget) -> Result<ExtremalResult, Error> {
    ExtremalSearch::new(n, k).budget(budget).run()
}

struct Bound<'a> {
    best: &'a Cell<usize>,
    prune: bool,
}

impl EdgeProbe for Bound<'_> {
    fn observe(&mut self, s: &EdgeStateView<'_>) -> Expand {
        if !self.prune || s.depth() == 0 {
            return Expand::Children;
        }
        // Descendants only add current candidates or edges not yet touching
        // the solution.
        let reach = s.solution().len() + s.inner_candidates().len() + s.outer_candidates().len() + s.untouched_edges();
        if reach < self.best.get() {
            Expand::Prune
        } else {
            Expand::Children
        }
    }
}

fn degree_sequence(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}

/// Backtracking isomorphism test for small graphs.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.m() != b.m() || degree_sequence(a) != degree_sequence(b) {
        return false;
    }
    fn extend(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let x = map.len();
        if x == a.n() {
            return true;
        }
        for y in 0..b.n() {
            if used[y] || a.degree(x) != b.degree(y) {
                continue;
            }
            if (0..x).any(|p| a.adjacent(p, x) != b.adjacent(map[p], y)) {
                continue;
            }
            map.push(y);
            used[y] = true;
            if extend(a, b, map, used) {
                return true;
            }
            map.pop();
            used[y] = false;
        }
        false
    }
    extend(a, b, &mut Vec::with_capacity(a.n()), &mut vec![false; b.n()])
}

/// Whether `edges` (ids of `K_n`) form a graph of girth at least `k`.
pub fn witness_ok(n: usize, k: Length, edges: &[EdgeId]) -> bool {
    let kn = complete(n);
    match EdgeSet::from_ids(kn.m(), edges.iter().copied()) {
        Ok(set) => crate::girth::view_girth_unweighted(&crate::graph::SubgraphView::edge_induced(&kn, &set)) >= k,
        Err(_) => false,
    }
}
