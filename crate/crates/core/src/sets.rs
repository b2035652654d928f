use std::fmt;

/// A set of dense ids `0..universe` with a cached cardinality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IdSet {
    words: Vec<u64>,
    universe: usize,
    len: usize,
}

/// A set of vertex ids of some host graph.
pub type VertexSet = IdSet;
/// A set of edge ids of some host graph.
pub type EdgeSet = IdSet;

impl IdSet {
    pub fn new(universe: usize) -> IdSet {
        IdSet {
            words: vec![0; universe.div_ceil(64)],
            universe,
            len: 0,
        }
    }

    pub fn full(universe: usize) -> IdSet {
        let mut s = IdSet::new(universe);
        for id in 0..universe {
            s.insert(id);
        }
        s
    }

    /// Builds a set from ids. Returns the first offending id if any is
    /// outside `0..universe`.
    pub fn from_ids<I: IntoIterator<Item = usize>>(universe: usize, ids: I) -> Result<IdSet, usize> {
        let mut s = IdSet::new(universe);
        for id in ids {
            if id >= universe {
                return Err(id);
            }
            s.insert(id);
        }
        Ok(s)
    }

    /// Set over a universe of at most 64 ids whose members are the bits of
    /// `mask`.
    pub(crate) fn from_word(universe: usize, mask: u64) -> IdSet {
        debug_assert!(universe <= 64 && (universe == 64 || mask >> universe == 0));
        let mut words = vec![0; universe.div_ceil(64)];
        if let Some(w) = words.first_mut() {
            *w = mask;
        }
        IdSet { words, universe, len: mask.count_ones() as usize }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn contains(&self, id: usize) -> bool {
        id < self.universe && self.words[id / 64] & (1 << (id % 64)) != 0
    }

    /// Panics if `id` is outside the universe.
    pub fn insert(&mut self, id: usize) -> bool {
        assert!(id < self.universe, "id {id} outside universe {}", self.universe);
        let word = &mut self.words[id / 64];
        let bit = 1 << (id % 64);
        let fresh = *word & bit == 0;
        *word |= bit;
        self.len += fresh as usize;
        fresh
    }

    pub fn remove(&mut self, id: usize) -> bool {
        if id >= self.universe {
            return false;
        }
        let word = &mut self.words[id / 64];
        let bit = 1 << (id % 64);
        let present = *word & bit != 0;
        *word &= !bit;
        self.len -= present as usize;
        present
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + bit)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for IdSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
