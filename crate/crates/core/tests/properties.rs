use std::collections::HashSet;

use girthscope::graph::SubgraphView;
use girthscope::*;
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn threshold() -> impl Strategy<Value = Length> {
    prop_oneof![(3u64..8).prop_map(Length::new), Just(Length::INFINITE)]
}

fn stream(g: &Graph, k: Length, mode: Mode, limit: Option<u64>) -> Vec<(u64, Vec<usize>)> {
    let mut out = Vec::new();
    let mut sink = |s: &[usize], i: u64| {
        out.push((i, s.to_vec()));
        Flow::Continue
    };
    match mode {
        Mode::Induced => {
            InducedEnumerator::new(g, k).unwrap().limit(limit).run(&mut sink);
        }
        Mode::Edge => {
            EdgeEnumerator::new(g, k).unwrap().limit(limit).run(&mut sink);
        }
    }
    out
}

fn sound(g: &Graph, k: Length, mode: Mode, sol: &[usize]) -> bool {
    let sub = match mode {
        Mode::Induced => g.induced_subgraph(&VertexSet::from_ids(g.n(), sol.iter().copied()).unwrap()),
        Mode::Edge => g.edge_subgraph(&EdgeSet::from_ids(g.m(), sol.iter().copied()).unwrap()),
    }
    .unwrap();
    sub.is_connected() && girth_unweighted(&sub) >= k
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn induced_engine_equals_brute_force(g in graph_strategy(7), k in threshold()) {
        let cfg = EnumConfig::induced(k);
        let mut fast: Vec<Vec<usize>> = stream(&g, k, Mode::Induced, None).into_iter().map(|p| p.1).collect();
        fast.sort();
        prop_assert_eq!(fast, brute_force_enumerate(&g, &cfg).unwrap());
    }

    #[test]
    fn edge_engine_equals_brute_force(g in graph_strategy(6), k in threshold()) {
        prop_assume!(g.m() <= 10);
        let cfg = EnumConfig::edge(k);
        let mut fast: Vec<Vec<usize>> = stream(&g, k, Mode::Edge, None).into_iter().map(|p| p.1).collect();
        fast.sort();
        prop_assert_eq!(fast, brute_force_enumerate(&g, &cfg).unwrap());
    }

    #[test]
    fn sink_contract(g in graph_strategy(7), k in threshold(), edge in any::<bool>()) {
        let mode = if edge { Mode::Edge } else { Mode::Induced };
        prop_assume!(!edge || g.m() <= 12);
        let out = stream(&g, k, mode, None);
        let mut seen = HashSet::new();
        for (i, (ordinal, sol)) in out.iter().enumerate() {
            prop_assert_eq!(*ordinal, i as u64);
            prop_assert!(sol.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(seen.insert(sol.clone()), "duplicate {:?}", sol);
            prop_assert!(sound(&g, k, mode, sol), "unsound {:?}", sol);
        }
        prop_assert_eq!(out.first().map(|p| p.1.clone()), Some(vec![]));
    }

    #[test]
    fn limits_cut_a_prefix(g in graph_strategy(6), k in threshold(), limit in 0u64..40, edge in any::<bool>()) {
        let mode = if edge { Mode::Edge } else { Mode::Induced };
        let full = stream(&g, k, mode, None);
        let cut = stream(&g, k, mode, Some(limit));
        prop_assert_eq!(cut.len(), full.len().min(limit as usize));
        prop_assert_eq!(&full[..cut.len()], &cut[..]);
    }

    #[test]
    fn fast_and_baseline_agree_in_order(g in graph_strategy(6), k in threshold()) {
        // Both visit candidates in ascending order, so the induced streams coincide.
        let fast: Vec<Vec<usize>> = stream(&g, k, Mode::Induced, None).into_iter().map(|p| p.1).collect();
        let mut base = Collector::default();
        enumerate_baseline(&g, &EnumConfig::induced(k), &mut base).unwrap();
        prop_assert_eq!(fast, base.solutions);
    }

    #[test]
    fn candidates_shrink_monotonically(g in graph_strategy(6), k in threshold()) {
        // A vertex that closes a short cycle with S keeps doing so for every superset.
        let cfg = EnumConfig::induced(k);
        for sol in brute_force_enumerate(&g, &cfg).unwrap() {
            let s = VertexSet::from_ids(g.n(), sol.iter().copied()).unwrap();
            for w in 0..g.n() {
                if s.contains(w) {
                    continue;
                }
                let mut t = s.clone();
                t.insert(w);
                if girthscope::girth::view_girth_unweighted(&SubgraphView::induced(&g, &t)) < k {
                    for x in 0..g.n() {
                        let mut u = t.clone();
                        u.insert(x);
                        prop_assert!(girthscope::girth::view_girth_unweighted(&SubgraphView::induced(&g, &u)) < k);
                    }
                }
            }
        }
    }
}
