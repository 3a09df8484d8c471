//! Weighted star-of-David rule, sliding crosses, double sticks and the
//! determinantal identities they imply.
//!
//! Weights are exact reduced rationals; "invariant" always means equal
//! reduced forms. Every checker returns a [`CheckOutcome`] carrying both
//! sides of the equation it tested, so sweeps can report counterexamples.

use std::collections::BTreeMap;

use num_traits::One;
use serde::Serialize;

use crate::det_arrays::{Method, PdTables};
use crate::pascal_core::GridIndex;
use crate::{BigInt, Ratio, Result};

/// Rectangle anchored at `anchor` reaching `m` rows down and `l` columns right.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnchoredRect {
    pub anchor: GridIndex,
    pub m: usize,
    pub l: usize,
}

impl AnchoredRect {
    pub fn new(anchor: GridIndex, m: usize, l: usize) -> Self {
        assert!(m >= 1 && l >= 1, "rectangle extents must be positive");
        AnchoredRect { anchor, m, l }
    }
}

/// The two diagonals of the `size × size` square whose top-left is `corner`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cross {
    pub corner: GridIndex,
    pub size: usize,
}

impl Cross {
    pub fn new(corner: GridIndex, size: usize) -> Self {
        assert!(size >= 1, "cross size must be positive");
        Cross { corner, size }
    }

    /// Main-diagonal arm, `(i + t, j + t)`.
    pub fn main_arm(&self) -> impl Iterator<Item = GridIndex> + '_ {
        (0..self.size).map(move |t| self.corner.offset(t, t))
    }

    /// Anti-diagonal arm, `(i + t, j + size − 1 − t)`.
    pub fn anti_arm(&self) -> impl Iterator<Item = GridIndex> + '_ {
        (0..self.size).map(move |t| self.corner.offset(t, self.size - 1 - t))
    }
}

/// Two `k`-entry segments of the line `x + y = i + j + k − 1`: one ending at
/// `(i, j + k − 1)`, the other starting at the array's left edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DoubleStick {
    pub order: usize,
    pub idx: GridIndex,
}

impl DoubleStick {
    pub fn new(order: usize, idx: GridIndex) -> Self {
        assert!(order >= 1, "double stick order must be positive");
        DoubleStick { order, idx }
    }

    /// `b_t = P_{i+(k−t), j+(t−1)}`, `t = 1..=k`.
    pub fn upper(&self) -> Vec<GridIndex> {
        let k = self.order;
        (1..=k)
            .map(|t| GridIndex::new(self.idx.i + (k - t), self.idx.j + (t - 1)))
            .collect()
    }

    /// `r_t = P_{i+j+(k−t), t−1}`, `t = 1..=k`.
    pub fn edge(&self) -> Vec<GridIndex> {
        let k = self.order;
        (1..=k)
            .map(|t| GridIndex::new(self.idx.i + self.idx.j + (k - t), t - 1))
            .collect()
    }

    pub fn line(&self) -> usize {
        self.idx.i + self.idx.j + self.order - 1
    }
}

/// One tested instance of an identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    #[serde(skip)]
    pub identity: &'static str,
    #[serde(skip)]
    pub passed: bool,
    pub indices: BTreeMap<&'static str, i64>,
    pub lhs: String,
    pub rhs: String,
}

impl CheckOutcome {
    fn new(
        identity: &'static str,
        indices: &[(&'static str, i64)],
        lhs: String,
        rhs: String,
    ) -> Self {
        CheckOutcome {
            identity,
            passed: lhs == rhs,
            indices: indices.iter().copied().collect(),
            lhs,
            rhs,
        }
    }
}

fn product(
    tables: &mut PdTables,
    order: usize,
    cells: impl IntoIterator<Item = GridIndex>,
) -> Result<BigInt> {
    let mut acc = BigInt::one();
    for idx in cells {
        acc *= tables.condensation(order, idx)?;
    }
    Ok(acc)
}

/// Identity checkers sharing one set of memo tables.
#[derive(Debug, Default)]
pub struct Checker {
    tables: PdTables,
}

impl Checker {
    pub fn new() -> Self {
        Checker::default()
    }

    pub fn tables(&mut self) -> &mut PdTables {
        &mut self.tables
    }

    /// `W = P_{i+m,j+l} P_{i,j} / (P_{i+m,j} P_{i,j+l})` on `PD_order`.
    pub fn rect_weight(&mut self, rect: AnchoredRect, order: usize) -> Result<Ratio> {
        let a = rect.anchor;
        let t = &mut self.tables;
        let num = t.condensation(order, a.offset(rect.m, rect.l))? * t.condensation(order, a)?;
        let den = t.condensation(order, a.offset(rect.m, 0))?
            * t.condensation(order, a.offset(0, rect.l))?;
        Ok(Ratio::new(num, den))
    }

    /// Compares the rectangle weight at `rect.anchor` with the one at the
    /// anchor slid `t` steps along `(+1, −1)`.
    pub fn check_star_of_david(
        &mut self,
        order: usize,
        rect: AnchoredRect,
        t: i64,
    ) -> Result<CheckOutcome> {
        let slid = AnchoredRect {
            anchor: rect.anchor.slide(t)?,
            ..rect
        };
        let lhs = self.rect_weight(rect, order)?;
        let rhs = self.rect_weight(slid, order)?;
        Ok(CheckOutcome::new(
            "star",
            &[
                ("order", order as i64),
                ("i", rect.anchor.i as i64),
                ("j", rect.anchor.j as i64),
                ("m", rect.m as i64),
                ("l", rect.l as i64),
                ("t", t),
            ],
            lhs.to_string(),
            rhs.to_string(),
        ))
    }

    /// Product of anti-arm entries over product of main-arm entries of `PD_order`.
    pub fn cross_weight(&mut self, cross: Cross, order: usize) -> Result<Ratio> {
        let num = product(&mut self.tables, order, cross.anti_arm())?;
        let den = product(&mut self.tables, order, cross.main_arm())?;
        Ok(Ratio::new(num, den))
    }

    pub fn check_sliding_cross(
        &mut self,
        order: usize,
        cross: Cross,
        t: i64,
    ) -> Result<CheckOutcome> {
        let slid = Cross {
            corner: cross.corner.slide(t)?,
            ..cross
        };
        let lhs = self.cross_weight(cross, order)?;
        let rhs = self.cross_weight(slid, order)?;
        Ok(CheckOutcome::new(
            "cross",
            &[
                ("order", order as i64),
                ("i", cross.corner.i as i64),
                ("j", cross.corner.j as i64),
                ("size", cross.size as i64),
                ("t", t),
            ],
            lhs.to_string(),
            rhs.to_string(),
        ))
    }

    /// `Π_{t=0}^{k} P_{t, j+2(k−t)+1} = Π_{t=0}^{k} P_{t, j+t}`.
    ///
    /// Both products start with a row-0 entry, so `a_1 = A_1 = 1` is checked
    /// as well; a failure there is reported through `lhs`/`rhs`.
    pub fn check_product_identity(&mut self, k: usize, j: usize) -> Result<CheckOutcome> {
        let falling: Vec<GridIndex> = (0..=k)
            .map(|t| GridIndex::new(t, j + 2 * (k - t) + 1))
            .collect();
        let rising: Vec<GridIndex> = (0..=k).map(|t| GridIndex::new(t, j + t)).collect();
        let a1 = self.tables.binom(falling[0]);
        let big_a1 = self.tables.binom(rising[0]);
        let lhs: BigInt = falling.iter().map(|&x| self.tables.binom(x)).product();
        let rhs: BigInt = rising.iter().map(|&x| self.tables.binom(x)).product();
        let mut out = CheckOutcome::new(
            "product",
            &[("k", k as i64), ("j", j as i64)],
            lhs.to_string(),
            rhs.to_string(),
        );
        if !(a1.is_one() && big_a1.is_one()) {
            out.passed = false;
            out.lhs = format!("{lhs} (a_1 = {a1})");
            out.rhs = format!("{rhs} (A_1 = {big_a1})");
        }
        Ok(out)
    }

    /// `b_1 ⋯ b_k / r_1 ⋯ r_k` over Pascal entries.
    pub fn double_stick_weight(&mut self, stick: DoubleStick) -> Ratio {
        let num: BigInt = stick
            .upper()
            .into_iter()
            .map(|x| self.tables.binom(x))
            .product();
        let den: BigInt = stick
            .edge()
            .into_iter()
            .map(|x| self.tables.binom(x))
            .product();
        Ratio::new(num, den)
    }

    /// Double-stick weight against the Bareiss determinant.
    pub fn check_double_stick(&mut self, k: usize, idx: GridIndex) -> Result<CheckOutcome> {
        let w = self.double_stick_weight(DoubleStick::new(k, idx));
        let det = self.tables.direct(k, idx)?;
        Ok(CheckOutcome::new(
            "stick",
            &[("k", k as i64), ("i", idx.i as i64), ("j", idx.j as i64)],
            w.to_string(),
            det.to_string(),
        ))
    }

    /// `P_{i,j} = P^(j)_{i,1}`.
    pub fn check_rahimpour(&mut self, i: usize, j: usize) -> Result<CheckOutcome> {
        let lhs = self.tables.binom(GridIndex::new(i, j));
        let rhs = self.tables.direct(j, GridIndex::new(i, 1))?;
        Ok(CheckOutcome::new(
            "rahimpour",
            &[("i", i as i64), ("j", j as i64)],
            lhs.to_string(),
            rhs.to_string(),
        ))
    }

    /// `P^(k)_{i,j} = P^(j)_{i,k}`, each side by window determinant and
    /// cross-checked against the double-stick closed form.
    pub fn check_generalized(&mut self, i: usize, j: usize, k: usize) -> Result<CheckOutcome> {
        let t = &mut self.tables;
        let lhs = t.direct(k, GridIndex::new(i, j))?;
        let rhs = t.direct(j, GridIndex::new(i, k))?;
        let lhs_closed = t.closed_form(k, GridIndex::new(i, j))?;
        let rhs_closed = t.closed_form(j, GridIndex::new(i, k))?;
        let indices = [("i", i as i64), ("j", j as i64), ("k", k as i64)];
        let mut out = CheckOutcome::new("general", &indices, lhs.to_string(), rhs.to_string());
        if lhs != lhs_closed || rhs != rhs_closed {
            out.passed = false;
            out.lhs = format!("{lhs} (closed form {lhs_closed})");
            out.rhs = format!("{rhs} (closed form {rhs_closed})");
        }
        Ok(out)
    }

    /// All five routes at one position; `lhs` is the direct value, `rhs`
    /// lists the others that disagree with it (or repeats it when none do).
    pub fn check_routes(
        &mut self,
        k: usize,
        idx: GridIndex,
        algorithm_value: &BigInt,
    ) -> Result<CheckOutcome> {
        let direct = self.tables.direct(k, idx)?;
        let mut disagree = Vec::new();
        for m in [Method::Recursive, Method::Condensation, Method::ClosedForm] {
            let v = self.tables.entry(m, k, idx)?;
            if v != direct {
                disagree.push(format!("{m}={v}"));
            }
        }
        if *algorithm_value != direct {
            disagree.push(format!("algorithm={algorithm_value}"));
        }
        let rhs = if disagree.is_empty() {
            direct.to_string()
        } else {
            disagree.join(",")
        };
        Ok(CheckOutcome::new(
            "routes",
            &[("k", k as i64), ("i", idx.i as i64), ("j", idx.j as i64)],
            direct.to_string(),
            rhs,
        ))
    }
}

/// The two main-diagonal closed forms for `P^(k+1)_{i,j}`:
///
/// ```text
///   Π_{t=0}^{k} P_{i+t,j+t} / Π_{s=1}^{k} P_{s, i+j+2(k−s)+1}
///   Π_{t=0}^{k} P_{i+t,j+t} / Π_{s=1}^{k} P_{s, i+j+s}
/// ```
///
/// They agree exactly when the product identity holds with `j` replaced by
/// `i + j`.
pub fn main_diagonal_forms(tables: &mut PdTables, k: usize, idx: GridIndex) -> (Ratio, Ratio) {
    let (i, j) = (idx.i, idx.j);
    let num: BigInt = (0..=k)
        .map(|t| tables.binom(GridIndex::new(i + t, j + t)))
        .product();
    let den_falling: BigInt = (1..=k)
        .map(|s| tables.binom(GridIndex::new(s, i + j + 2 * (k - s) + 1)))
        .product();
    let den_rising: BigInt = (1..=k)
        .map(|s| tables.binom(GridIndex::new(s, i + j + s)))
        .product();
    (
        Ratio::new(num.clone(), den_falling),
        Ratio::new(num, den_rising),
    )
}

pub fn rect_weight(rect: AnchoredRect, order: usize) -> Result<Ratio> {
    Checker::new().rect_weight(rect, order)
}

pub fn cross_weight(cross: Cross, order: usize) -> Result<Ratio> {
    Checker::new().cross_weight(cross, order)
}

pub fn double_stick_weight(stick: DoubleStick) -> Ratio {
    Checker::new().double_stick_weight(stick)
}

pub fn check_star_of_david(order: usize, rect: AnchoredRect, t: i64) -> Result<CheckOutcome> {
    Checker::new().check_star_of_david(order, rect, t)
}

pub fn check_sliding_cross(order: usize, cross: Cross, t: i64) -> Result<CheckOutcome> {
    Checker::new().check_sliding_cross(order, cross, t)
}

pub fn check_product_identity(k: usize, j: usize) -> Result<CheckOutcome> {
    Checker::new().check_product_identity(k, j)
}

pub fn check_rahimpour(i: usize, j: usize) -> Result<CheckOutcome> {
    Checker::new().check_rahimpour(i, j)
}

pub fn check_generalized(i: usize, j: usize, k: usize) -> Result<CheckOutcome> {
    Checker::new().check_generalized(i, j, k)
}
