use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::{Field, GfError};

/// A sparse vector: `(column, value)` pairs sorted by column, no zeros.
pub type SparseVec<F> = Vec<(usize, F)>;

/// Matrix over `F` stored as coordinate triplets.
///
/// Keys are unique and no stored entry is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix<F> {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), F>,
}

impl<F: Field> SparseMatrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    /// Builds a matrix from triplets; repeated keys are summed and zeros dropped.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, F)>,
    ) -> Result<Self, GfError> {
        let mut m = Self::zeros(rows, cols);
        for (r, c, x) in triplets {
            m.add_entry(r, c, x)?;
        }
        Ok(m)
    }

    pub fn from_dense(data: &[Vec<F>]) -> Result<Self, GfError> {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        if data.iter().any(|r| r.len() != cols) {
            return Err(GfError::RaggedRows);
        }
        Self::from_triplets(
            rows,
            cols,
            data.iter()
                .enumerate()
                .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &x)| (r, c, x))),
        )
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries.insert((i, i), F::one());
        }
        m
    }

    pub fn add_entry(&mut self, row: usize, col: usize, x: F) -> Result<(), GfError> {
        if row >= self.rows || col >= self.cols {
            return Err(GfError::IndexOutOfBounds {
                row,
                col,
                rows: self.rows,
                cols: self.cols,
            });
        }
        let slot = self.entries.entry((row, col)).or_insert_with(F::zero);
        *slot += x;
        if slot.is_zero() {
            self.entries.remove(&(row, col));
        }
        Ok(())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> F {
        self.entries
            .get(&(row, col))
            .copied()
            .unwrap_or_else(F::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, F)> + '_ {
        self.entries.iter().map(|(&(r, c), &x)| (r, c, x))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    fn sparse_rows(&self) -> Vec<SparseVec<F>> {
        let mut out = vec![Vec::new(); self.rows];
        for (&(r, c), &x) in &self.entries {
            out[r].push((c, x));
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in mul_vec");
        let mut out = vec![F::zero(); self.rows];
        for (&(r, c), &x) in &self.entries {
            out[r] += x * v[c];
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut red = RowReducer::new(self.cols);
        for row in self.sparse_rows() {
            red.insert(row);
        }
        red.rank()
    }

    /// Basis of `{v : Mv = 0}` as dense vectors.
    ///
    /// One vector per non-pivot column, in ascending column order; vector `k`
    /// has a `1` in its free column, zeros in the other free columns, so the
    /// basis is in reduced echelon form with respect to the free columns.
    pub fn null_space(&self) -> Vec<Vec<F>> {
        let mut red = RowReducer::new(self.cols);
        for row in self.sparse_rows() {
            red.insert(row);
        }
        red.null_space()
            .into_iter()
            .map(|sv| {
                let mut dense = vec![F::zero(); self.cols];
                for (c, x) in sv {
                    dense[c] = x;
                }
                dense
            })
            .collect()
    }
}

/// Incremental Gauss-Jordan elimination.
///
/// Holds the reduced row echelon form of the span of all inserted rows. Each
/// stored row has its pivot as leftmost entry with coefficient one, and no
/// stored row has a nonzero entry in another row's pivot column. The result
/// is independent of insertion order.
#[derive(Debug, Clone)]
pub struct RowReducer<F> {
    cols: usize,
    pivots: BTreeMap<usize, SparseVec<F>>,
    // free column -> pivot columns whose row mentions it
    occurs: HashMap<usize, BTreeSet<usize>>,
}

impl<F: Field> RowReducer<F> {
    pub fn new(cols: usize) -> Self {
        RowReducer {
            cols,
            pivots: BTreeMap::new(),
            occurs: HashMap::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivots.contains_key(&col)
    }

    /// Rows of the reduced echelon form, ordered by pivot column.
    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<F>> {
        self.pivots.values()
    }

    /// Reduces `row` against the stored rows; the result only touches free columns.
    pub fn reduce(&self, row: &[(usize, F)]) -> SparseVec<F> {
        let mut acc: BTreeMap<usize, F> = BTreeMap::new();
        for &(c, x) in row {
            if x.is_zero() {
                continue;
            }
            match self.pivots.get(&c) {
                Some(prow) => {
                    for &(pc, px) in prow.iter().skip(1) {
                        *acc.entry(pc).or_insert_with(F::zero) -= x * px;
                    }
                }
                None => *acc.entry(c).or_insert_with(F::zero) += x,
            }
        }
        acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
    }

    /// Inserts a row; returns whether the rank grew.
    pub fn insert(&mut self, row: SparseVec<F>) -> bool {
        assert!(
            row.iter().all(|&(c, _)| c < self.cols),
            "row entry outside the column range"
        );
        let reduced = self.reduce(&row);
        let Some(&(pivot, lead)) = reduced.first() else {
            return false;
        };
        let scale = lead.inv().expect("leading entry is nonzero");
        let new_row: SparseVec<F> = reduced.into_iter().map(|(c, x)| (c, x * scale)).collect();

        // clear the new pivot column from every stored row
        if let Some(users) = self.occurs.remove(&pivot) {
            for pc in users {
                let old = self
                    .pivots
                    .remove(&pc)
                    .expect("occurrence index is consistent");
                let factor = old
                    .iter()
                    .find(|&&(c, _)| c == pivot)
                    .map(|&(_, x)| x)
                    .expect("row mentions pivot");
                for &(c, _) in old.iter().skip(1) {
                    if c != pivot {
                        if let Some(set) = self.occurs.get_mut(&c) {
                            set.remove(&pc);
                        }
                    }
                }
                let mut merged: BTreeMap<usize, F> = old.into_iter().collect();
                merged.remove(&pivot);
                for &(c, x) in new_row.iter().skip(1) {
                    *merged.entry(c).or_insert_with(F::zero) -= factor * x;
                }
                let updated: SparseVec<F> =
                    merged.into_iter().filter(|(_, x)| !x.is_zero()).collect();
                for &(c, _) in updated.iter().skip(1) {
                    self.occurs.entry(c).or_default().insert(pc);
                }
                self.pivots.insert(pc, updated);
            }
        }
        for &(c, _) in new_row.iter().skip(1) {
            self.occurs.entry(c).or_default().insert(pivot);
        }
        self.pivots.insert(pivot, new_row);
        true
    }

    /// Sparse null-space basis of the inserted rows, one vector per free column.
    pub fn null_space(&self) -> Vec<SparseVec<F>> {
        (0..self.cols)
            .filter(|c| !self.pivots.contains_key(c))
            .map(|free| {
                let mut v: SparseVec<F> = vec![(free, F::one())];
                if let Some(users) = self.occurs.get(&free) {
                    for &pc in users {
                        let x = self.pivots[&pc]
                            .iter()
                            .find(|&&(c, _)| c == free)
                            .map(|&(_, x)| x)
                            .expect("row mentions free column");
                        v.push((pc, -x));
                    }
                }
                v.sort_by_key(|&(c, _)| c);
                v
            })
            .collect()
    }
}

/// Rank of a family of sparse vectors over `F`.
pub fn rank_of<F: Field>(cols: usize, vectors: impl IntoIterator<Item = SparseVec<F>>) -> usize {
    let mut red = RowReducer::new(cols);
    for v in vectors {
        red.insert(v);
    }
    red.rank()
}
