//! Exact arithmetic over prime fields and sparse elimination.

mod field;
mod linalg;

pub(crate) use field::is_prime;
pub use field::{Field, Fp};
pub use linalg::{rank_of, RowReducer, SparseMatrix, SparseVec};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("entry ({row}, {col}) outside a {rows}x{cols} matrix")]
    IndexOutOfBounds {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("rows of a dense matrix have different lengths")]
    RaggedRows,
    #[error("unsupported field characteristic {0} (supported: 2, 3, 5, 7, 11, 13)")]
    UnsupportedPrime(u32),
}
