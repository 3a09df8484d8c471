//! Pascal determinantal arrays `PD_k` built along five independent routes.
//!
//! | route          | how `P^(k)_{i,j}` is obtained                                      |
//! |----------------|--------------------------------------------------------------------|
//! | `Direct`       | Bareiss determinant of the `k × k` Pascal window at `(i, j)`       |
//! | `Algorithm`    | stage-by-stage shift / divide / multiply from `PD_1`               |
//! | `Recursive`    | `P^(k)_{i+1,j+1} · P_{i,j} / P^(k)_{1,i+j+1}`, top-down memoized   |
//! | `Condensation` | Dodgson recurrence across orders with `PD_0 = J`, `PD_1 = P`       |
//! | `ClosedForm`   | quotient of two `k`-entry products along one anti-diagonal line    |
//!
//! Order `0` is admitted everywhere and is the all-ones array.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::exact_det::{det_bareiss, exact_div, Matrix};
use crate::pascal_core::{BinomTable, GridIndex};
use crate::{BigInt, Error, Ratio, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Direct,
    Algorithm,
    Recursive,
    Condensation,
    ClosedForm,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Direct,
        Method::Algorithm,
        Method::Recursive,
        Method::Condensation,
        Method::ClosedForm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::Algorithm => "algorithm",
            Method::Recursive => "recursive",
            Method::Condensation => "condensation",
            Method::ClosedForm => "closed-form",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s || (s == "closed_form" && *m == Method::ClosedForm))
            .ok_or_else(|| format!("unknown method `{s}`"))
    }
}

/// A finite window of `PD_order` with top-left entry at `origin`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetGrid {
    pub order: usize,
    pub origin: GridIndex,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<BigInt>>,
}

impl DetGrid {
    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r][c]
    }

    /// Entry at absolute array position `idx`, if it lies inside the window.
    pub fn at(&self, idx: GridIndex) -> Option<&BigInt> {
        let r = idx.i.checked_sub(self.origin.i)?;
        let c = idx.j.checked_sub(self.origin.j)?;
        self.entries.get(r)?.get(c)
    }

    fn ones(order: usize, origin: GridIndex, rows: usize, cols: usize) -> Self {
        DetGrid {
            order,
            origin,
            rows,
            cols,
            entries: vec![vec![BigInt::one(); cols]; rows],
        }
    }
}

/// Intermediate arrays of the last stage of [`pd_algorithm`].
///
/// `renamed` is `PD_{k-1}` with its zeroth row and column removed (wide
/// enough to hold every `R_{0,i+j}` the quotient reads); `quotient[i][j]` is
/// `R_{i,j} / R_{0,i+j}`. Both are empty for `k ≤ 1`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AlgorithmTrace {
    pub renamed: Vec<Vec<BigInt>>,
    pub quotient: Vec<Vec<Ratio>>,
}

/// Memo tables shared by the per-entry routes.
///
/// Results never depend on what is cached; a fresh table gives a cold-cache
/// evaluation. Not shared between threads: give each worker its own.
#[derive(Debug, Default)]
pub struct PdTables {
    binom: BinomTable,
    recursive: HashMap<(usize, GridIndex), BigInt>,
    condensation: HashMap<(usize, GridIndex), BigInt>,
}

impl PdTables {
    pub fn new() -> Self {
        PdTables::default()
    }

    pub fn binom(&mut self, idx: GridIndex) -> BigInt {
        self.binom.get(idx)
    }

    pub fn entry(&mut self, method: Method, k: usize, idx: GridIndex) -> Result<BigInt> {
        match method {
            Method::Direct => self.direct(k, idx),
            Method::Recursive => self.recursive(k, idx),
            Method::Condensation => self.condensation(k, idx),
            Method::ClosedForm => self.closed_form(k, idx),
            Method::Algorithm => {
                let (grid, _) = pd_algorithm(k, idx.i + 1, idx.j + 1)?;
                Ok(grid.get(idx.i, idx.j).clone())
            }
        }
    }

    pub fn direct(&mut self, k: usize, idx: GridIndex) -> Result<BigInt> {
        if k == 0 {
            return Ok(BigInt::one());
        }
        let window = Matrix::from_fn(k, k, |r, c| self.binom.get(idx.offset(r, c)));
        det_bareiss(&window)
    }

    pub fn recursive(&mut self, k: usize, idx: GridIndex) -> Result<BigInt> {
        match k {
            0 => return Ok(BigInt::one()),
            1 => return Ok(self.binom.get(idx)),
            _ => {}
        }
        if let Some(v) = self.recursive.get(&(k, idx)) {
            return Ok(v.clone());
        }
        let shifted = self.recursive(k - 1, idx.offset(1, 1))?;
        let den = self.recursive(k - 1, GridIndex::new(1, idx.i + idx.j + 1))?;
        assert!(!den.is_zero(), "PD_{} has a zero entry", k - 1);
        let v = exact_div(shifted * self.binom.get(idx), &den, "recursive")?;
        self.recursive.insert((k, idx), v.clone());
        Ok(v)
    }

    pub fn condensation(&mut self, k: usize, idx: GridIndex) -> Result<BigInt> {
        match k {
            0 => return Ok(BigInt::one()),
            1 => return Ok(self.binom.get(idx)),
            _ => {}
        }
        if let Some(v) = self.condensation.get(&(k, idx)) {
            return Ok(v.clone());
        }
        let se = self.condensation(k - 1, idx.offset(1, 1))?;
        let nw = self.condensation(k - 1, idx)?;
        let sw = self.condensation(k - 1, idx.offset(1, 0))?;
        let ne = self.condensation(k - 1, idx.offset(0, 1))?;
        let center = self.condensation(k - 2, idx.offset(1, 1))?;
        assert!(!center.is_zero(), "PD_{} has a zero entry", k - 2);
        let v = exact_div(se * nw - sw * ne, &center, "condensation")?;
        self.condensation.insert((k, idx), v.clone());
        Ok(v)
    }

    pub fn closed_form(&mut self, k: usize, idx: GridIndex) -> Result<BigInt> {
        let (i, j) = (idx.i, idx.j);
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for t in 1..=k {
            num *= self.binom.get(GridIndex::new(i + (k - t), j + (t - 1)));
            den *= self.binom.get(GridIndex::new(i + j + (k - t), t - 1));
        }
        let q = Ratio::new(num, den);
        if q.is_integer() {
            Ok(q.to_integer())
        } else {
            Err(Error::NonIntegral {
                route: "closed-form",
                k,
                i,
                j,
                value: q.to_string(),
            })
        }
    }
}

/// `P^(k)_{i,j}` as the determinant of the `k × k` Pascal window at `idx`.
pub fn pd_direct(k: usize, idx: GridIndex) -> Result<BigInt> {
    PdTables::new().direct(k, idx)
}

pub fn pd_recursive(k: usize, idx: GridIndex) -> Result<BigInt> {
    PdTables::new().recursive(k, idx)
}

pub fn pd_condensation(k: usize, idx: GridIndex) -> Result<BigInt> {
    PdTables::new().condensation(k, idx)
}

pub fn pd_closed_form(k: usize, idx: GridIndex) -> Result<BigInt> {
    PdTables::new().closed_form(k, idx)
}

/// Builds the `rows × cols` window of `PD_k` at the origin by repeating,
/// from `PD_1`:
///
/// 1. drop row 0 and column 0 of `PD_{s-1}`, call the rest `R`;
/// 2. `Q_{i,j} = R_{i,j} / R_{0,i+j}`;
/// 3. `P^(s)_{i,j} = Q_{i,j} · P_{i,j}`.
///
/// Step 2 reads `R` up to column `i + j`, so stage `s − 1` is generated on a
/// wider window than stage `s`.
pub fn pd_algorithm(k: usize, rows: usize, cols: usize) -> Result<(DetGrid, AlgorithmTrace)> {
    if rows == 0 || cols == 0 {
        return Err(Error::EmptyWindow { rows, cols });
    }
    if k == 0 {
        return Ok((
            DetGrid::ones(0, GridIndex::ORIGIN, rows, cols),
            AlgorithmTrace::default(),
        ));
    }

    // dims[s] is the window needed at stage s.
    let mut dims = vec![(0, 0); k + 1];
    dims[k] = (rows, cols);
    for s in (1..k).rev() {
        let (r, c) = dims[s + 1];
        dims[s] = (r + 1, r + c);
    }

    let mut binom = BinomTable::new();
    let (r1, c1) = dims[1];
    let mut stage: Vec<Vec<BigInt>> = (0..r1)
        .map(|i| (0..c1).map(|j| binom.get(GridIndex::new(i, j))).collect())
        .collect();
    let mut trace = AlgorithmTrace::default();

    for (s, &(r, c)) in dims.iter().enumerate().skip(2) {
        let renamed: Vec<Vec<BigInt>> = stage[1..].iter().map(|row| row[1..].to_vec()).collect();
        let quotient: Vec<Vec<Ratio>> = (0..r)
            .map(|i| {
                (0..c)
                    .map(|j| Ratio::new(renamed[i][j].clone(), renamed[0][i + j].clone()))
                    .collect()
            })
            .collect();
        let mut next = Vec::with_capacity(r);
        for (i, qrow) in quotient.iter().enumerate() {
            let mut row = Vec::with_capacity(c);
            for (j, q) in qrow.iter().enumerate() {
                let p = q * Ratio::from_integer(binom.get(GridIndex::new(i, j)));
                if !p.is_integer() {
                    return Err(Error::NonIntegral {
                        route: "algorithm",
                        k: s,
                        i,
                        j,
                        value: p.to_string(),
                    });
                }
                row.push(p.to_integer());
            }
            next.push(row);
        }
        stage = next;
        if s == k {
            trace = AlgorithmTrace { renamed, quotient };
        }
    }

    let grid = DetGrid {
        order: k,
        origin: GridIndex::ORIGIN,
        rows,
        cols,
        entries: stage,
    };
    Ok((grid, trace))
}

/// Fills a window of `PD_k` using `method`.
pub fn pd_grid(
    k: usize,
    origin: GridIndex,
    rows: usize,
    cols: usize,
    method: Method,
) -> Result<DetGrid> {
    pd_grid_with(&mut PdTables::new(), k, origin, rows, cols, method)
}

pub fn pd_grid_with(
    tables: &mut PdTables,
    k: usize,
    origin: GridIndex,
    rows: usize,
    cols: usize,
    method: Method,
) -> Result<DetGrid> {
    if rows == 0 || cols == 0 {
        return Err(Error::EmptyWindow { rows, cols });
    }
    if method == Method::Algorithm {
        if origin != GridIndex::ORIGIN {
            return Err(Error::InvalidOrigin {
                method: "algorithm",
                i: origin.i,
                j: origin.j,
            });
        }
        return pd_algorithm(k, rows, cols).map(|(g, _)| g);
    }
    let mut entries = Vec::with_capacity(rows);
    for r in 0..rows {
        let row = (0..cols)
            .map(|c| tables.entry(method, k, origin.offset(r, c)))
            .collect::<Result<Vec<_>>>()?;
        entries.push(row);
    }
    Ok(DetGrid {
        order: k,
        origin,
        rows,
        cols,
        entries,
    })
}
