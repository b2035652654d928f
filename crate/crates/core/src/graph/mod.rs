//! Immutable simple undirected graphs and read-only subgraph views.

mod generators;
mod io;

use std::collections::{HashSet, VecDeque};

use crate::{EdgeSet, GraphError, IdSet, VertexSet};

pub use generators::{complete, cycle, path, petersen, random_gnp, star};
pub use io::{parse_dimacs, parse_edge_list, read_graph_file, to_edge_list};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Edge {
    /// Smaller endpoint.
    pub u: VertexId,
    pub v: VertexId,
    pub weight: u64,
}

impl Edge {
    pub fn other(&self, x: VertexId) -> VertexId {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency lists hold `(neighbor, edge id)` pairs sorted by neighbor id.
/// Labels are the vertex names from the input file, kept for serialization.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
    edges: Vec<Edge>,
    labels: Vec<u64>,
    weighted: bool,
}

impl Graph {
    pub fn empty() -> Graph {
        Graph::from_edges(0, []).expect("empty graph is valid")
    }

    /// Unweighted graph on `n` vertices. Edge ids follow iteration order.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let edges = edges.into_iter().map(|(u, v)| (u, v, 1, None));
        Graph::build(n, edges, false, (0..n as u64).collect())
    }

    /// Weighted graph on `n` vertices; every weight must be at least 1.
    pub fn from_weighted_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId, i64)>,
    {
        let edges = edges.into_iter().map(|(u, v, w)| (u, v, w, None));
        Graph::build(n, edges, true, (0..n as u64).collect())
    }

    pub(crate) fn build<I>(
        n: usize,
        raw: I,
        weighted: bool,
        labels: Vec<u64>,
    ) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId, i64, Option<usize>)>,
    {
        debug_assert_eq!(labels.len(), n);
        let mut adjacency = vec![Vec::new(); n];
        let mut edges = Vec::new();
        let mut seen = HashSet::new();
        for (a, b, w, line) in raw {
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop { line, vertex: labels[a] });
            }
            let (u, v) = (a.min(b), a.max(b));
            if !seen.insert((u, v)) {
                return Err(GraphError::DuplicateEdge { line, u: labels[a], v: labels[b] });
            }
            if w < 1 {
                return Err(GraphError::InvalidWeight { line, weight: w });
            }
            let id = edges.len();
            edges.push(Edge { u, v, weight: if weighted { w as u64 } else { 1 } });
            adjacency[u].push((v, id));
            adjacency[v].push((u, id));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { adjacency, edges, labels, weighted })
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn is_weighted(&self) -> bool {
        self.weighted
    }

    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn edge(&self, e: EdgeId) -> Edge {
        self.edges[e]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn label(&self, v: VertexId) -> u64 {
        self.labels[v]
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let list = &self.adjacency[u];
        list.binary_search_by_key(&v, |&(w, _)| w).ok().map(|i| list[i].1)
    }

    #[inline]
    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// View of the whole graph.
    pub fn view(&self) -> SubgraphView<'_> {
        SubgraphView { graph: self, vertices: None, edges: None }
    }

    fn check_vertices(&self, s: &VertexSet) -> Result<(), GraphError> {
        match s.iter().find(|&v| v >= self.n()) {
            Some(vertex) => Err(GraphError::VertexOutOfRange { vertex, n: self.n() }),
            None => Ok(()),
        }
    }

    fn check_edges(&self, s: &EdgeSet) -> Result<(), GraphError> {
        match s.iter().find(|&e| e >= self.m()) {
            Some(edge) => Err(GraphError::EdgeOutOfRange { edge, m: self.m() }),
            None => Ok(()),
        }
    }

    /// `G[S]`: the vertices of `s` (renumbered in ascending order) and every
    /// edge of `self` with both endpoints in `s`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        self.check_vertices(s)?;
        let kept: Vec<VertexId> = s.iter().collect();
        let edges = self
            .edges
            .iter()
            .filter(|e| s.contains(e.u) && s.contains(e.v))
            .copied()
            .collect::<Vec<_>>();
        Ok(self.relabelled(&kept, &edges))
    }

    /// `G[E']`: the edges of `es` and exactly their endpoints.
    pub fn edge_subgraph(&self, es: &EdgeSet) -> Result<Graph, GraphError> {
        self.check_edges(es)?;
        let mut kept = IdSet::new(self.n());
        let edges: Vec<Edge> = es.iter().map(|e| self.edges[e]).collect();
        for e in &edges {
            kept.insert(e.u);
            kept.insert(e.v);
        }
        Ok(self.relabelled(&kept.to_vec(), &edges))
    }

    fn relabelled(&self, kept: &[VertexId], edges: &[Edge]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in kept.iter().enumerate() {
            index[v] = i;
        }
        let labels = kept.iter().map(|&v| self.labels[v]).collect();
        let raw = edges
            .iter()
            .map(|e| (index[e.u], index[e.v], e.weight as i64, None));
        Graph::build(kept.len(), raw, self.weighted, labels).expect("subgraph of a valid graph")
    }

    pub fn is_connected(&self) -> bool {
        self.view().is_connected()
    }
}

/// A read-only restriction of a [`Graph`] to a vertex set and/or edge set.
///
/// * vertices only: the induced subgraph `G[S]`;
/// * edges only: the edge subgraph `G[E']`, whose vertices are the endpoints;
/// * both: edges of `E'` with both endpoints in `S`, on vertex set `S`.
#[derive(Clone, Copy)]
pub struct SubgraphView<'g> {
    pub graph: &'g Graph,
    vertices: Option<&'g VertexSet>,
    edges: Option<&'g EdgeSet>,
}

impl<'g> SubgraphView<'g> {
    pub fn induced(graph: &'g Graph, vertices: &'g VertexSet) -> Self {
        SubgraphView { graph, vertices: Some(vertices), edges: None }
    }

    pub fn edge_induced(graph: &'g Graph, edges: &'g EdgeSet) -> Self {
        SubgraphView { graph, vertices: None, edges: Some(edges) }
    }

    #[inline]
    pub fn has_edge(&self, e: EdgeId) -> bool {
        match (self.vertices, self.edges) {
            (_, Some(es)) if !es.contains(e) => false,
            (Some(vs), _) => {
                let edge = self.graph.edges[e];
                vs.contains(edge.u) && vs.contains(edge.v)
            }
            _ => true,
        }
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        match (self.vertices, self.edges) {
            (Some(vs), _) => vs.contains(v),
            (None, Some(_)) => self.graph.adjacency[v].iter().any(|&(_, e)| self.has_edge(e)),
            (None, None) => true,
        }
    }

    pub fn vertex_ids(&self) -> Vec<VertexId> {
        match (self.vertices, self.edges) {
            (Some(vs), _) => vs.iter().collect(),
            (None, Some(es)) => {
                let mut vs = IdSet::new(self.graph.n());
                for e in es.iter() {
                    let edge = self.graph.edges[e];
                    vs.insert(edge.u);
                    vs.insert(edge.v);
                }
                vs.to_vec()
            }
            (None, None) => (0..self.graph.n()).collect(),
        }
    }

    /// Neighbors of `v` through edges of the view.
    #[inline]
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = (VertexId, EdgeId)> + '_ {
        self.graph.adjacency[v].iter().copied().filter(move |&(_, e)| self.has_edge(e))
    }

    /// True iff every pair of view vertices is joined by a path; views with
    /// at most one vertex are connected.
    pub fn is_connected(&self) -> bool {
        let vs = self.vertex_ids();
        let Some(&start) = vs.first() else {
            return true;
        };
        let mut seen = vec![false; self.graph.n()];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        let mut reached = 1;
        while let Some(x) = queue.pop_front() {
            for (y, _) in self.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    queue.push_back(y);
                }
            }
        }
        reached == vs.len()
    }
}
