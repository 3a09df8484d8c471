//! Pascal array entries `P_{i,j} = C(i + j, i)` and rectangular windows.

use std::cell::RefCell;
use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::exact_det::Matrix;
use crate::{BigInt, Error, Result};

/// Zero-based `(row, column)` position in a Pascal-family array.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GridIndex {
    pub i: usize,
    pub j: usize,
}

impl GridIndex {
    pub const ORIGIN: GridIndex = GridIndex { i: 0, j: 0 };

    pub const fn new(i: usize, j: usize) -> Self {
        GridIndex { i, j }
    }

    /// Converts signed coordinates, rejecting anything outside the quadrant.
    pub fn from_signed(i: i64, j: i64) -> Result<Self> {
        match (usize::try_from(i), usize::try_from(j)) {
            (Ok(i), Ok(j)) => Ok(GridIndex { i, j }),
            _ => Err(Error::Domain { i, j }),
        }
    }

    /// Moves `t` steps along the anti-diagonal direction `(+1, -1)`.
    pub fn slide(self, t: i64) -> Result<Self> {
        GridIndex::from_signed(self.i as i64 + t, self.j as i64 - t)
    }

    pub fn transpose(self) -> Self {
        GridIndex {
            i: self.j,
            j: self.i,
        }
    }

    pub fn offset(self, di: usize, dj: usize) -> Self {
        GridIndex {
            i: self.i + di,
            j: self.j + dj,
        }
    }
}

impl From<(usize, usize)> for GridIndex {
    fn from((i, j): (usize, usize)) -> Self {
        GridIndex { i, j }
    }
}

impl fmt::Display for GridIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.i, self.j)
    }
}

/// Memoized Pascal triangle, stored by anti-diagonal `n = i + j`.
///
/// Rows are appended on demand with the additive recurrence, so a lookup at
/// `(i, j)` costs `O(1)` once the anti-diagonal `i + j` has been built.
#[derive(Debug, Clone, Default)]
pub struct BinomTable {
    rows: Vec<Vec<BigInt>>,
}

impl BinomTable {
    pub fn new() -> Self {
        BinomTable::default()
    }

    pub fn get(&mut self, idx: GridIndex) -> BigInt {
        let n = idx.i + idx.j;
        self.grow_to(n);
        self.rows[n][idx.i].clone()
    }

    /// Number of anti-diagonals currently cached.
    pub fn cached_diagonals(&self) -> usize {
        self.rows.len()
    }

    fn grow_to(&mut self, n: usize) {
        if self.rows.is_empty() {
            self.rows.push(vec![BigInt::one()]);
        }
        while self.rows.len() <= n {
            let prev = self.rows.last().expect("seeded above");
            let mut next = Vec::with_capacity(prev.len() + 1);
            next.push(BigInt::one());
            for w in prev.windows(2) {
                next.push(&w[0] + &w[1]);
            }
            next.push(BigInt::one());
            self.rows.push(next);
        }
    }
}

thread_local! {
    static TABLE: RefCell<BinomTable> = RefCell::new(BinomTable::new());
}

/// `P_{i,j} = C(i + j, i)`, served from a per-thread memo table.
pub fn binom(idx: GridIndex) -> BigInt {
    TABLE.with(|t| t.borrow_mut().get(idx))
}

/// Cache-free `C(i + j, i)` by the multiplicative formula, for cross-checking.
pub fn binom_uncached(idx: GridIndex) -> BigInt {
    let k = idx.i.min(idx.j);
    let n = idx.i + idx.j;
    let mut acc = BigInt::one();
    for t in 0..k {
        // acc = C(n - k + t, t) before this step; the product is divisible by t + 1.
        acc = acc * BigInt::from(n - k + t + 1) / BigInt::from(t + 1);
    }
    acc
}

/// The `rows × cols` block of the Pascal array whose top-left entry is `origin`.
pub fn pascal_window(origin: GridIndex, rows: usize, cols: usize) -> Result<Matrix> {
    if rows == 0 || cols == 0 {
        return Err(Error::EmptyWindow { rows, cols });
    }
    TABLE.with(|t| {
        let mut t = t.borrow_mut();
        Ok(Matrix::from_fn(rows, cols, |r, c| {
            t.get(origin.offset(r, c))
        }))
    })
}
