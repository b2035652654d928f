//! End-to-end acceptance run: one PASS/FAIL line per criterion.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use girthscope::bench::{bench_compare, BenchOptions, Engine};
use girthscope::graph::{complete, cycle, path, petersen, random_gnp};
use girthscope::verify::{all_connected_graphs, check_edge_run, check_induced_run, random_corpus};
use girthscope::*;
use rand::{Rng, SeedableRng};

const KS: [Length; 5] = [Length::new(3), Length::new(4), Length::new(5), Length::new(6), Length::INFINITE];

fn corpus() -> Vec<Graph> {
    let mut graphs: Vec<Graph> = (0..=5).flat_map(all_connected_graphs).collect();
    graphs.extend(random_corpus(100, 6, 0xACCE));
    graphs
}

fn collect(f: impl FnOnce(&mut Collector)) -> Vec<Vec<usize>> {
    let mut c = Collector::default();
    f(&mut c);
    c.into_sorted()
}

fn three_way(g: &Graph, cfg: &EnumConfig) -> Result<(), String> {
    let brute = brute_force_enumerate(g, cfg).map_err(|e| e.to_string())?;
    let base = collect(|c| {
        enumerate_baseline(g, cfg, c).unwrap();
    });
    let fast = collect(|c| match cfg.mode {
        Mode::Induced => {
            enumerate_induced_fast(g, cfg.k, c).unwrap();
        }
        Mode::Edge => {
            enumerate_edges_fast(g, cfg.k, c).unwrap();
        }
    });
    if base != brute || fast != brute {
        return Err(format!(
            "{:?} k={} on {:?}: brute {} baseline {} fast {}",
            cfg.mode,
            cfg.k,
            g.edges().iter().map(|e| (e.u, e.v)).collect::<Vec<_>>(),
            brute.len(),
            base.len(),
            fast.len()
        ));
    }
    Ok(())
}

fn oracle_induced() -> Result<String, String> {
    let graphs = corpus();
    let mut cases = 0;
    for g in &graphs {
        for k in KS {
            three_way(g, &EnumConfig::induced(k))?;
            cases += 1;
        }
    }
    Ok(format!("{} graphs, {cases} cases", graphs.len()))
}

fn oracle_edge() -> Result<String, String> {
    let mut graphs: Vec<Graph> = corpus().into_iter().filter(|g| g.m() <= 7).collect();
    graphs.extend([cycle(4), complete(4), complete(3)]);
    let mut cases = 0;
    for g in &graphs {
        for k in KS {
            three_way(g, &EnumConfig::edge(k))?;
            cases += 1;
        }
    }
    Ok(format!("{} graphs, {cases} cases", graphs.len()))
}

fn fixture_counts() -> Result<String, String> {
    let fixtures: [(&str, Graph, Mode, Length, u64); 7] = [
        ("P3 induced k=inf", path(3), Mode::Induced, Length::INFINITE, 7),
        ("K3 induced k=3", complete(3), Mode::Induced, Length::new(3), 8),
        ("K3 induced k=4", complete(3), Mode::Induced, Length::new(4), 7),
        ("K3 edge k=3", complete(3), Mode::Edge, Length::new(3), 8),
        ("K3 edge k=4", complete(3), Mode::Edge, Length::new(4), 7),
        ("C4 induced k=4", cycle(4), Mode::Induced, Length::new(4), 14),
        ("C4 induced k=5", cycle(4), Mode::Induced, Length::new(5), 13),
    ];
    for (name, g, mode, k, want) in &fixtures {
        let cfg = EnumConfig::new(*k, *mode);
        let mut counts = vec![brute_force_enumerate(g, &cfg).unwrap().len() as u64];
        let mut c = Counter::default();
        enumerate_baseline(g, &cfg, &mut c).unwrap();
        counts.push(c.count);
        let mut c = Counter::default();
        match mode {
            Mode::Induced => enumerate_induced_fast(g, *k, &mut c).unwrap(),
            Mode::Edge => enumerate_edges_fast(g, *k, &mut c).unwrap(),
        };
        counts.push(c.count);
        if counts.iter().any(|x| x != want) {
            return Err(format!("{name}: expected {want}, brute/baseline/fast gave {counts:?}"));
        }
    }
    Ok(format!("{} fixtures", fixtures.len()))
}

fn state_fidelity() -> Result<String, String> {
    let mut iterations = 0;
    for (name, g) in [("C4", cycle(4)), ("K4", complete(4)), ("Petersen", petersen())] {
        for k in KS {
            for (engine, r) in [
                ("induced", check_induced_run(&g, k, Some(10_000)).unwrap()),
                ("edge", check_edge_run(&g, k, Some(10_000)).unwrap()),
            ] {
                if !r.passed() {
                    return Err(format!("{name} {engine} k={k}: {:?}", r.examples));
                }
                iterations += r.iterations;
            }
        }
    }
    Ok(format!("{iterations} iterations checked"))
}

fn candidate_invariants() -> Result<String, String> {
    let mut graphs = vec![cycle(4), complete(4), complete(5), petersen()];
    graphs.extend(random_corpus(100, 6, 0x1E77A));
    let mut totals = [0u64; 3];
    for g in &graphs {
        for k in KS {
            let e = check_edge_run(g, k, Some(10_000)).unwrap();
            let i = check_induced_run(g, k, Some(10_000)).unwrap();
            for (name, r) in [("inner-bound", &e), ("inner-step-outer-unchanged", &e), ("filter", &i)] {
                if r.failed(name) > 0 {
                    return Err(format!("{name} failed: {:?}", r.examples));
                }
            }
            totals[0] += e.checked("inner-bound");
            totals[1] += e.checked("inner-step-outer-unchanged");
            totals[2] += i.checked("filter");
        }
    }
    if totals.iter().any(|&t| t == 0) {
        return Err(format!("an invariant was never exercised: {totals:?}"));
    }
    Ok(format!(
        "|cin| ≤ |V| x{}, cout unchanged on inner steps x{}, table test = girth test x{}",
        totals[0], totals[1], totals[2]
    ))
}

fn extremal_values() -> Result<String, String> {
    let mut parts = Vec::new();
    for (n, k, want) in [(4, 4, 4), (5, 4, 6), (5, 5, 5), (6, 4, 9)] {
        let start = Instant::now();
        let r = densest_girth_graphs(n, Length::new(k), ExtremalBudget::unlimited()).unwrap();
        let secs = start.elapsed().as_secs_f64();
        if r.max_edges != want || !r.complete || secs > 60.0 {
            return Err(format!("(n={n}, k={k}): max_edges {} complete {} in {secs:.1}s", r.max_edges, r.complete));
        }
        parts.push(format!("({n},{k})={want}"));
    }
    Ok(parts.join(" "))
}

fn speedup() -> Result<String, String> {
    let opts = BenchOptions { baseline: false, brute_budget: 21, limit: None };
    let start = Instant::now();
    let r = bench_compare(&complete(7), "K7", Length::new(4), Mode::Edge, &opts).map_err(|e| e.to_string())?;
    let total = start.elapsed().as_secs_f64();
    let ratio = r.speedup().unwrap();
    let brute = r.run(Engine::BruteForce).unwrap();
    let fast = r.run(Engine::Fast).unwrap();
    let detail = format!(
        "K7 k=4 edge: {} solutions, brute {:.3}s, fast {:.4}s, ratio {ratio:.1}x (need ≥ 10x)",
        fast.solutions,
        brute.elapsed.as_secs_f64(),
        fast.elapsed.as_secs_f64()
    );
    if !r.passed() || ratio < 10.0 || total > 300.0 {
        return Err(detail);
    }
    Ok(detail)
}

/// Shortest cycle by depth-first search over simple paths that start and
/// end at their smallest vertex.
fn brute_girth(g: &Graph) -> Length {
    fn dfs(g: &Graph, start: usize, cur: usize, len: u64, seen: &mut [bool], best: &mut u64) {
        if len + 1 >= *best {
            return;
        }
        for &(y, _) in g.neighbors(cur) {
            if y == start && len >= 2 {
                *best = len + 1;
            } else if y > start && !seen[y] {
                seen[y] = true;
                dfs(g, start, y, len + 1, seen, best);
                seen[y] = false;
            }
        }
    }
    let mut best = u64::MAX;
    for s in 0..g.n() {
        let mut seen = vec![false; g.n()];
        seen[s] = true;
        dfs(g, s, s, 0, &mut seen, &mut best);
    }
    if best == u64::MAX {
        Length::INFINITE
    } else {
        Length::new(best)
    }
}

fn girth_oracles() -> Result<String, String> {
    let mut graphs = corpus();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x6177);
    for i in 0..300 {
        graphs.push(random_gnp(7 + i % 4, 0.15 + (i % 4) as f64 * 0.1, &mut rng));
    }
    graphs.extend([petersen(), complete(10), cycle(10)]);
    for g in &graphs {
        let want = brute_girth(g);
        let unit = Graph::from_weighted_edges(g.n(), g.edges().iter().map(|e| (e.u, e.v, 1))).unwrap();
        if girth_unweighted(g) != want || girth_weighted(&unit) != want {
            return Err(format!("girth mismatch on {:?}", g.edges().iter().map(|e| (e.u, e.v)).collect::<Vec<_>>()));
        }
    }
    let mut weighted_cycles = 0;
    for n in 3..=10 {
        let weights: Vec<i64> = (0..n).map(|_| rng.gen_range(1..20)).collect();
        let g = Graph::from_weighted_edges(n, (0..n).map(|i| (i, (i + 1) % n, weights[i]))).unwrap();
        let want = Length::new(weights.iter().sum::<i64>() as u64);
        if girth_weighted(&g) != want {
            return Err(format!("weighted C{n} with {weights:?}: got {}", girth_weighted(&g)));
        }
        weighted_cycles += 1;
    }
    Ok(format!("{} graphs, {weighted_cycles} weighted cycles", graphs.len()))
}

fn render(g: &Graph, cfg: &EnumConfig, fast: bool) -> Vec<u8> {
    let mut out = Vec::new();
    let mut sink = |sol: &[usize], i: u64| {
        let ids: Vec<String> = sol.iter().map(usize::to_string).collect();
        out.extend_from_slice(format!("{i}: {}\n", ids.join(" ")).as_bytes());
        Flow::Continue
    };
    if fast {
        match cfg.mode {
            Mode::Induced => enumerate_induced_fast(g, cfg.k, &mut sink).unwrap(),
            Mode::Edge => enumerate_edges_fast(g, cfg.k, &mut sink).unwrap(),
        };
    } else {
        enumerate_variant(g, cfg, &mut sink).unwrap();
    }
    out
}

fn determinism() -> Result<String, String> {
    let cases = [
        (petersen(), EnumConfig::induced(Length::new(6)), true),
        (complete(6), EnumConfig::edge(Length::new(4)), true),
        (cycle(6), EnumConfig::induced(Length::new(4)).connectivity(Connectivity::Any), false),
        (complete(5), EnumConfig::edge(Length::new(5)), false),
    ];
    let mut bytes = 0;
    for (g, cfg, fast) in &cases {
        let a = render(g, cfg, *fast);
        let b = render(g, cfg, *fast);
        if a != b {
            return Err(format!("{:?} k={} differs between runs", cfg.mode, cfg.k));
        }
        bytes += a.len();
    }
    Ok(format!("{} runs byte-identical ({bytes} bytes)", cases.len()))
}

type Criterion = (&'static str, fn() -> Result<String, String>);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("oracle equivalence, induced", oracle_induced),
        ("oracle equivalence, edge", oracle_edge),
        ("fixture counts", fixture_counts),
        ("state fidelity", state_fidelity),
        ("candidate-set invariants", candidate_invariants),
        ("extremal values", extremal_values),
        ("speedup over brute force", speedup),
        ("girth oracles", girth_oracles),
        ("determinism", determinism),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} [{name}]: PASS ({detail}; {secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} [{name}]: FAIL ({detail}; {secs:.2}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
