use std::sync::{Arc, RwLock};

/// Grow-only table of rows. Row `n` is built from the rows before it under
/// the write lock, so every reader sees each row computed exactly once.
pub(crate) struct RowMemo<T> {
    rows: RwLock<Vec<Arc<T>>>,
    build: fn(usize, &[Arc<T>]) -> T,
}

impl<T> RowMemo<T> {
    pub(crate) const fn new(build: fn(usize, &[Arc<T>]) -> T) -> Self {
        RowMemo { rows: RwLock::new(Vec::new()), build }
    }

    pub(crate) fn row(&self, n: usize) -> Arc<T> {
        if let Some(r) = self.rows.read().expect("memo lock").get(n) {
            return Arc::clone(r);
        }
        let mut rows = self.rows.write().expect("memo lock");
        while rows.len() <= n {
            let next = (self.build)(rows.len(), &rows);
            rows.push(Arc::new(next));
        }
        Arc::clone(&rows[n])
    }
}

/// Grow-only sequence whose values are refreshed in blocks (used when the
/// primary route computes many terms at once, like EGF coefficients).
pub(crate) struct BlockMemo<T> {
    values: RwLock<Vec<T>>,
    build: fn(usize) -> Vec<T>,
}

impl<T: Clone> BlockMemo<T> {
    pub(crate) const fn new(build: fn(usize) -> Vec<T>) -> Self {
        BlockMemo { values: RwLock::new(Vec::new()), build }
    }

    pub(crate) fn get(&self, n: usize) -> T {
        if let Some(v) = self.values.read().expect("memo lock").get(n) {
            return v.clone();
        }
        let mut values = self.values.write().expect("memo lock");
        if values.len() <= n {
            let want = (n + 1).max(2 * values.len()).max(32);
            *values = (self.build)(want);
        }
        values[n].clone()
    }
}
