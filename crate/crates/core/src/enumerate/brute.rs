use super::baseline::is_solution;
use super::{Collector, EnumConfig, EnumSummary, Emitter, Mode, SolutionSink};
use crate::{Error, Graph, IdSet};

/// Largest element count the exhaustive search accepts by default.
pub const DEFAULT_BRUTE_FORCE_BUDGET: usize = 20;

/// Every solution of `cfg`, found by testing all subsets, sorted
/// lexicographically.
pub fn brute_force_enumerate(g: &Graph, cfg: &EnumConfig) -> Result<Vec<Vec<usize>>, Error> {
    let mut c = Collector::default();
    brute_force_into(g, cfg, DEFAULT_BRUTE_FORCE_BUDGET, &mut c)?;
    Ok(c.into_sorted())
}

/// Streams the solutions found by the subset filter to `sink`, in increasing
/// bitmask order. Refuses inputs with more than `budget` elements.
pub fn brute_force_into<S>(
    g: &Graph,
    cfg: &EnumConfig,
    budget: usize,
    sink: &mut S,
) -> Result<EnumSummary, Error>
where
    S: SolutionSink + ?Sized,
{
    cfg.validate_for(g)?;
    let universe = match cfg.mode {
        Mode::Induced => g.n(),
        Mode::Edge => g.m(),
    };
    if universe > budget.min(63) {
        return Err(Error::BudgetExceeded { elements: universe, budget: budget.min(63) });
    }
    let mut out = Emitter::new(sink, cfg.limit);
    let mut ids = Vec::with_capacity(universe);
    for mask in 0u64..1 << universe {
        if mask == 0 {
            if cfg.include_empty && !out.emit(&[], 0) {
                break;
            }
            continue;
        }
        let set = IdSet::from_word(universe, mask);
        if is_solution(g, &set, cfg) {
            ids.clear();
            ids.extend(set.iter());
            if !out.emit(&ids, 0) {
                break;
            }
        }
    }
    Ok(out.summary())
}
