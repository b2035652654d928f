use crate::Length;

/// Square matrix of lengths indexed by global vertex id.
#[derive(Clone, Debug)]
pub(crate) struct Table {
    n: usize,
    cells: Vec<Length>,
}

impl Table {
    pub(crate) fn new(n: usize) -> Table {
        Table {
            n,
            cells: vec![Length::INFINITE; n * n],
        }
    }

    #[inline]
    pub(crate) fn get(&self, i: usize, j: usize) -> Length {
        self.cells[i * self.n + j]
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize, j: usize, v: Length) {
        self.cells[i * self.n + j] = v;
    }

    #[inline]
    pub(crate) fn set_sym(&mut self, i: usize, j: usize, v: Length) {
        self.cells[i * self.n + j] = v;
        self.cells[j * self.n + i] = v;
    }
}
