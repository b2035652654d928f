use super::baseline::enumerate_baseline;
use super::{EnumConfig, EnumSummary, SolutionSink};
use crate::{Error, Graph};

/// Weighted and/or disconnected variants, run on the baseline engine.
///
/// With `cfg.weighted` the girth is the minimum total edge weight of a
/// cycle; with [`Connectivity::Any`](super::Connectivity::Any) the
/// connectivity requirement on solutions is dropped.
pub fn enumerate_variant<S>(g: &Graph, cfg: &EnumConfig, sink: &mut S) -> Result<EnumSummary, Error>
where
    S: SolutionSink + ?Sized,
{
    cfg.validate_for(g)?;
    enumerate_baseline(g, cfg, sink)
}
