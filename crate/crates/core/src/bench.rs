//! Side-by-side timing of the engines on one input.

use std::fmt::{self, Write as _};
use std::time::{Duration, Instant};

use crate::edges::EdgeEnumerator;
use crate::enumerate::baseline::enumerate_baseline;
use crate::enumerate::brute::brute_force_into;
use crate::enumerate::{Counter, EnumConfig, EnumSummary, Mode};
use crate::induced::InducedEnumerator;
use crate::{Error, Graph, Length};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Engine {
    /// Filter over all vertex or edge subsets.
    BruteForce,
    Baseline,
    Fast,
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::BruteForce => "brute",
            Engine::Baseline => "baseline",
            Engine::Fast => "fast",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EngineRun {
    pub engine: Engine,
    pub solutions: u64,
    pub elapsed: Duration,
    /// Zero for the subset filter, which does not recurse.
    pub peak_depth: usize,
}

impl EngineRun {
    pub fn seconds_per_solution(&self) -> f64 {
        if self.solutions == 0 {
            0.0
        } else {
            self.elapsed.as_secs_f64() / self.solutions as f64
        }
    }
}

#[derive(Clone, Debug)]
pub struct BenchOptions {
    /// Also time the baseline engine.
    pub baseline: bool,
    /// Largest subset universe (`n` or `m`) the subset filter accepts.
    pub brute_budget: usize,
    /// Cap every engine at this many solutions.
    pub limit: Option<u64>,
}

impl Default for BenchOptions {
    fn default() -> Self {
        BenchOptions { baseline: false, brute_budget: 24, limit: None }
    }
}

#[derive(Clone, Debug)]
pub struct BenchReport {
    pub graph: String,
    pub k: Length,
    pub mode: Mode,
    pub runs: Vec<EngineRun>,
}

impl BenchReport {
    pub fn run(&self, engine: Engine) -> Option<&EngineRun> {
        self.runs.iter().find(|r| r.engine == engine)
    }

    /// Brute-force time over fast-engine time.
    pub fn speedup(&self) -> Option<f64> {
        let brute = self.run(Engine::BruteForce)?.elapsed.as_secs_f64();
        let fast = self.run(Engine::Fast)?.elapsed.as_secs_f64();
        Some(brute / fast.max(1e-9))
    }

    /// All engines reported the same number of solutions.
    pub fn passed(&self) -> bool {
        self.runs.windows(2).all(|w| w[0].solutions == w[1].solutions)
    }

    /// `key=value` lines.
    pub fn to_key_values(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph={}", self.graph);
        let _ = writeln!(out, "k={}", self.k);
        let mode = match self.mode {
            Mode::Induced => "induced",
            Mode::Edge => "edge",
        };
        let _ = writeln!(out, "mode={mode}");
        for r in &self.runs {
            let _ = writeln!(out, "{}.solutions={}", r.engine, r.solutions);
            let _ = writeln!(out, "{}.seconds={:.6}", r.engine, r.elapsed.as_secs_f64());
            let _ = writeln!(out, "{}.seconds_per_solution={:.3e}", r.engine, r.seconds_per_solution());
            let _ = writeln!(out, "{}.peak_depth={}", r.engine, r.peak_depth);
        }
        if let Some(s) = self.speedup() {
            let _ = writeln!(out, "speedup={s:.2}");
        }
        let _ = writeln!(out, "status={}", if self.passed() { "PASSED" } else { "FAILED" });
        out
    }
}

fn timed<F: FnOnce() -> Result<EnumSummary, Error>>(engine: Engine, f: F) -> Result<EngineRun, Error> {
    let start = Instant::now();
    let s = f()?;
    Ok(EngineRun { engine, solutions: s.solutions, elapsed: start.elapsed(), peak_depth: s.peak_depth })
}

/// Runs the subset filter, the fast engine for `mode` and optionally the
/// baseline on `g`, one after the other on the calling thread.
pub fn bench_compare(g: &Graph, graph: &str, k: Length, mode: Mode, opts: &BenchOptions) -> Result<BenchReport, Error> {
    let cfg = EnumConfig::new(k, mode).limit(opts.limit);
    cfg.validate_for(g)?;
    let mut runs = Vec::new();
    runs.push(timed(Engine::BruteForce, || {
        let s = brute_force_into(g, &cfg, opts.brute_budget, &mut Counter::default())?;
        Ok(EnumSummary { peak_depth: 0, ..s })
    })?);
    runs.push(timed(Engine::Fast, || {
        let mut c = Counter::default();
        Ok(match mode {
            Mode::Induced => InducedEnumerator::new(g, k)?.limit(opts.limit).run(&mut c).summary,
            Mode::Edge => EdgeEnumerator::new(g, k)?.limit(opts.limit).run(&mut c),
        })
    })?);
    if opts.baseline {
        runs.push(timed(Engine::Baseline, || enumerate_baseline(g, &cfg, &mut Counter::default()))?);
    }
    Ok(BenchReport { graph: graph.to_string(), k, mode, runs })
}
