//! Shared enumeration vocabulary and the reference engines.

pub mod baseline;
pub mod brute;
mod variant;

pub use variant::enumerate_variant;

use crate::{Error, Graph, Length};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Mode {
    /// Solutions are vertex sets `S`, inducing `G[S]`.
    Induced,
    /// Solutions are edge sets `E'`, inducing `G[E']`.
    Edge,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Connectivity {
    Connected,
    Any,
}

/// What to enumerate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumConfig {
    /// Girth threshold; [`Length::INFINITE`] asks for forests only.
    pub k: Length,
    pub mode: Mode,
    pub connectivity: Connectivity,
    /// Measure cycles by total edge weight instead of edge count.
    pub weighted: bool,
    /// Report the empty set as a solution.
    pub include_empty: bool,
    /// Stop after this many solutions.
    pub limit: Option<u64>,
}

impl EnumConfig {
    pub fn new(k: Length, mode: Mode) -> EnumConfig {
        EnumConfig {
            k,
            mode,
            connectivity: Connectivity::Connected,
            weighted: false,
            include_empty: true,
            limit: None,
        }
    }

    pub fn induced(k: Length) -> EnumConfig {
        EnumConfig::new(k, Mode::Induced)
    }

    pub fn edge(k: Length) -> EnumConfig {
        EnumConfig::new(k, Mode::Edge)
    }

    pub fn connectivity(mut self, c: Connectivity) -> Self {
        self.connectivity = c;
        self
    }

    pub fn weighted(mut self, weighted: bool) -> Self {
        self.weighted = weighted;
        self
    }

    pub fn include_empty(mut self, include: bool) -> Self {
        self.include_empty = include;
        self
    }

    pub fn limit(mut self, limit: Option<u64>) -> Self {
        self.limit = limit;
        self
    }

    pub fn validate(&self) -> Result<(), Error> {
        check_threshold(self.k)
    }

    /// [`validate`](Self::validate) plus compatibility with `g`.
    pub fn validate_for(&self, g: &Graph) -> Result<(), Error> {
        self.validate()?;
        if self.weighted && !g.is_weighted() {
            return Err(Error::InvalidConfig(
                "weighted girth requested on an unweighted graph".into(),
            ));
        }
        Ok(())
    }
}

pub(crate) fn check_threshold(k: Length) -> Result<(), Error> {
    if k.is_finite() && k < Length::new(3) {
        return Err(Error::InvalidConfig(format!("girth threshold must be at least 3, got {k}")));
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Flow {
    Continue,
    Stop,
}

/// Receives each solution of a run exactly once, as ascending ids, with
/// ordinals counting up from 0.
pub trait SolutionSink {
    fn accept(&mut self, solution: &[usize], ordinal: u64) -> Flow;
}

impl<F> SolutionSink for F
where
    F: FnMut(&[usize], u64) -> Flow,
{
    fn accept(&mut self, solution: &[usize], ordinal: u64) -> Flow {
        self(solution, ordinal)
    }
}

/// Keeps every solution in arrival order.
#[derive(Default, Debug)]
pub struct Collector {
    pub solutions: Vec<Vec<usize>>,
}

impl Collector {
    /// Solutions sorted lexicographically.
    pub fn into_sorted(mut self) -> Vec<Vec<usize>> {
        self.solutions.sort();
        self.solutions
    }
}

impl SolutionSink for Collector {
    fn accept(&mut self, solution: &[usize], _: u64) -> Flow {
        self.solutions.push(solution.to_vec());
        Flow::Continue
    }
}

#[derive(Default, Debug)]
pub struct Counter {
    pub count: u64,
}

impl SolutionSink for Counter {
    fn accept(&mut self, _: &[usize], _: u64) -> Flow {
        self.count += 1;
        Flow::Continue
    }
}

/// Outcome of one enumeration run.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct EnumSummary {
    pub solutions: u64,
    /// Deepest recursion level reached; the root is level 0.
    pub peak_depth: usize,
    /// True when the sink or the limit ended the run early.
    pub stopped: bool,
}

/// Wraps a sink with ordinals, the solution cap and the stop signal.
pub(crate) struct Emitter<'a, S: SolutionSink + ?Sized> {
    sink: &'a mut S,
    limit: Option<u64>,
    pub(crate) count: u64,
    pub(crate) stopped: bool,
    pub(crate) peak_depth: usize,
}

impl<'a, S: SolutionSink + ?Sized> Emitter<'a, S> {
    pub(crate) fn new(sink: &'a mut S, limit: Option<u64>) -> Self {
        Emitter { sink, limit, count: 0, stopped: limit == Some(0), peak_depth: 0 }
    }

    /// Returns false once the run must stop.
    #[inline]
    pub(crate) fn emit(&mut self, solution: &[usize], depth: usize) -> bool {
        if self.stopped {
            return false;
        }
        self.peak_depth = self.peak_depth.max(depth);
        let flow = self.sink.accept(solution, self.count);
        self.count += 1;
        if flow == Flow::Stop || self.limit == Some(self.count) {
            self.stopped = true;
        }
        !self.stopped
    }

    #[inline]
    pub(crate) fn visit(&mut self, depth: usize) {
        self.peak_depth = self.peak_depth.max(depth);
    }

    pub(crate) fn summary(&self) -> EnumSummary {
        EnumSummary { solutions: self.count, peak_depth: self.peak_depth, stopped: self.stopped }
    }
}

/// Inserts `x` into the ascending vector `v`.
#[inline]
pub(crate) fn insert_sorted(v: &mut Vec<usize>, x: usize) {
    let pos = v.partition_point(|&y| y < x);
    v.insert(pos, x);
}
