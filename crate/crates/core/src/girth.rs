//! Girth oracles and the pair-graph distance primitives.
//!
//! `pair_distance` and `second_distance` evaluate their definitions directly
//! by breadth-first search on `G[S ∪ {u, w}]`; the fast induced engine keeps
//! tables of these values incrementally and is checked against them.

use std::collections::VecDeque;

use crate::graph::SubgraphView;
use crate::{Error, Graph, Length, VertexId, VertexSet};

/// Hop-count girth of `g` (weights ignored); infinite for forests.
pub fn girth_unweighted(g: &Graph) -> Length {
    view_girth_unweighted(&g.view())
}

/// Minimum total edge weight over all cycles of `g`.
pub fn girth_weighted(g: &Graph) -> Length {
    view_girth_weighted(&g.view())
}

/// Girth of a view, counting edges.
///
/// Breadth-first search from every vertex. A non-tree edge `{x, y}` met
/// while searching from root `r` closes a cycle of length at most
/// `level(x) + level(y) + 1`; from a root on a shortest cycle the bound is
/// tight, so the minimum over all roots is exact.
pub fn view_girth_unweighted(view: &SubgraphView<'_>) -> Length {
    let g = view.graph;
    let n = g.n();
    let mut level = vec![u32::MAX; n];
    let mut parent_edge = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    let mut best = u64::MAX;
    for root in view.vertex_ids() {
        let mut touched = vec![root];
        level[root] = 0;
        queue.clear();
        queue.push_back(root);
        'bfs: while let Some(x) = queue.pop_front() {
            // Nothing deeper can improve on the current best.
            if 2 * level[x] as u64 + 1 >= best {
                break;
            }
            for (y, e) in view.neighbors(x) {
                if e == parent_edge[x] {
                    continue;
                }
                if level[y] == u32::MAX {
                    level[y] = level[x] + 1;
                    parent_edge[y] = e;
                    touched.push(y);
                    queue.push_back(y);
                } else {
                    best = best.min(level[x] as u64 + level[y] as u64 + 1);
                    if best == 3 {
                        break 'bfs;
                    }
                }
            }
        }
        for v in touched {
            level[v] = u32::MAX;
            parent_edge[v] = usize::MAX;
        }
        if best == 3 {
            break;
        }
    }
    if best == u64::MAX {
        Length::INFINITE
    } else {
        Length::new(best)
    }
}

/// Weighted girth of a view by the Floyd–Warshall minimum-cycle recurrence:
/// before vertex `k` becomes an intermediate, every pair `i, j` of earlier
/// neighbours of `k` closes the cycle `i ~> j -> k -> i` whose `i ~> j` part
/// only uses earlier vertices.
pub fn view_girth_weighted(view: &SubgraphView<'_>) -> Length {
    let vs = view.vertex_ids();
    let n = vs.len();
    let mut local = vec![usize::MAX; view.graph.n()];
    for (i, &v) in vs.iter().enumerate() {
        local[v] = i;
    }
    let mut w = vec![Length::INFINITE; n * n];
    for (i, &v) in vs.iter().enumerate() {
        for (y, e) in view.neighbors(v) {
            w[i * n + local[y]] = Length::new(view.graph.edge(e).weight);
        }
    }
    let mut d = w.clone();
    for i in 0..n {
        d[i * n + i] = Length::ZERO;
    }
    let mut best = Length::INFINITE;
    for k in 0..n {
        for i in 0..k {
            let wik = w[i * n + k];
            if !wik.is_finite() {
                continue;
            }
            for j in i + 1..k {
                let cyc = d[i * n + j] + wik + w[k * n + j];
                best = best.min(cyc);
            }
        }
        for i in 0..n {
            let dik = d[i * n + k];
            if !dik.is_finite() {
                continue;
            }
            for j in 0..n {
                let via = dik + d[k * n + j];
                if via < d[i * n + j] {
                    d[i * n + j] = via;
                }
            }
        }
    }
    best
}

fn pair_vertices(g: &Graph, s: &VertexSet, u: VertexId, w: VertexId) -> VertexSet {
    let mut vs = VertexSet::new(g.n());
    for x in s.iter() {
        vs.insert(x);
    }
    vs.insert(u);
    vs.insert(w);
    vs
}

/// Breadth-first distances from `src` inside `view`, skipping `banned` edge.
fn bfs_from(view: &SubgraphView<'_>, src: VertexId, banned: Option<usize>) -> Vec<Length> {
    let mut dist = vec![Length::INFINITE; view.graph.n()];
    dist[src] = Length::ZERO;
    let mut queue = VecDeque::from([src]);
    while let Some(x) = queue.pop_front() {
        for (y, e) in view.neighbors(x) {
            if Some(e) == banned || dist[y].is_finite() {
                continue;
            }
            dist[y] = dist[x] + Length::ONE;
            queue.push_back(y);
        }
    }
    dist
}

/// Hop distance between `u` and `w` in `G[S ∪ {u, w}]`.
pub fn pair_distance(g: &Graph, s: &VertexSet, u: VertexId, w: VertexId) -> Length {
    let vs = pair_vertices(g, s, u, w);
    bfs_from(&SubgraphView::induced(g, &vs), u, None)[w]
}

/// Second distance from `u` to `w`: the distance in `G[S ∪ {u, w}]` after
/// deleting `e0`, the first edge of a shortest `u`-`w` path. Among several
/// shortest paths, `e0` goes to the lowest-id neighbour of `u`; the value
/// does not depend on that choice.
pub fn second_distance(
    g: &Graph,
    s: &VertexSet,
    u: VertexId,
    w: VertexId,
) -> Result<Length, Error> {
    second_distance_with(g, s, u, w, TieBreak::Lowest)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TieBreak {
    Lowest,
    Highest,
}

/// [`second_distance`] with an explicit choice of `e0` among ties.
pub fn second_distance_with(
    g: &Graph,
    s: &VertexSet,
    u: VertexId,
    w: VertexId,
    tie: TieBreak,
) -> Result<Length, Error> {
    if u == w || s.contains(u) || s.contains(w) {
        return Err(Error::Contract(format!(
            "second distance needs distinct u, w outside S (u={u}, w={w})"
        )));
    }
    let vs = pair_vertices(g, s, u, w);
    let view = SubgraphView::induced(g, &vs);
    let from_w = bfs_from(&view, w, None);
    let d = from_w[u];
    if !d.is_finite() {
        return Ok(Length::INFINITE);
    }
    let on_shortest = view
        .neighbors(u)
        .filter(|&(y, _)| from_w[y] + Length::ONE == d);
    let e0 = match tie {
        TieBreak::Lowest => on_shortest.map(|(_, e)| e).next(),
        TieBreak::Highest => on_shortest.map(|(_, e)| e).last(),
    };
    Ok(bfs_from(&view, u, e0)[w])
}
