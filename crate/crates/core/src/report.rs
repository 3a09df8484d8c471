//! Serialization of grids, identity sweeps and the determinant benchmark.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::det_arrays::{pd_algorithm, DetGrid, Method, PdTables};
use crate::identities::{AnchoredRect, CheckOutcome, Checker, Cross};
use crate::pascal_core::GridIndex;
use crate::{BigInt, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "table" => Ok(Format::Table),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format `{s}`")),
        }
    }
}

/// Wire form of a [`DetGrid`]; every entry is a decimal string.
#[derive(Debug, Serialize, Deserialize)]
struct GridJson {
    order: usize,
    origin: [usize; 2],
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

pub fn grid_to_json(grid: &DetGrid) -> String {
    let wire = GridJson {
        order: grid.order,
        origin: [grid.origin.i, grid.origin.j],
        rows: grid.rows,
        cols: grid.cols,
        entries: grid
            .entries
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect(),
    };
    serde_json::to_string(&wire).expect("grid serializes")
}

pub fn grid_from_json(s: &str) -> std::result::Result<DetGrid, String> {
    let wire: GridJson = serde_json::from_str(s).map_err(|e| e.to_string())?;
    if wire.entries.len() != wire.rows || wire.entries.iter().any(|r| r.len() != wire.cols) {
        return Err("entries do not match rows/cols".into());
    }
    let entries = wire
        .entries
        .iter()
        .map(|r| {
            r.iter()
                .map(|v| {
                    v.parse::<BigInt>()
                        .map_err(|e| format!("bad entry `{v}`: {e}"))
                })
                .collect()
        })
        .collect::<std::result::Result<Vec<Vec<_>>, _>>()?;
    Ok(DetGrid {
        order: wire.order,
        origin: GridIndex::new(wire.origin[0], wire.origin[1]),
        rows: wire.rows,
        cols: wire.cols,
        entries,
    })
}

/// Renders `grid`, newline-terminated.
pub fn render_grid(grid: &DetGrid, format: Format) -> String {
    match format {
        Format::Json => grid_to_json(grid) + "\n",
        Format::Csv => {
            let mut out = String::new();
            for row in &grid.entries {
                let line: Vec<String> = row.iter().map(ToString::to_string).collect();
                out.push_str(&line.join(","));
                out.push('\n');
            }
            out
        }
        Format::Table => {
            let cells: Vec<Vec<String>> = grid
                .entries
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect();
            let widths: Vec<usize> = (0..grid.cols)
                .map(|c| cells.iter().map(|r| r[c].len()).max().unwrap_or(0))
                .collect();
            let mut out = String::new();
            for row in &cells {
                let line: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(v, w)| format!("{v:>w$}"))
                    .collect();
                out.push_str(&line.join(" "));
                out.push('\n');
            }
            out
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    Rahimpour,
    General,
    Star,
    Cross,
    Product,
    Stick,
    Routes,
}

impl Identity {
    pub fn name(self) -> &'static str {
        match self {
            Identity::Rahimpour => "rahimpour",
            Identity::General => "general",
            Identity::Star => "star",
            Identity::Cross => "cross",
            Identity::Product => "product",
            Identity::Stick => "stick",
            Identity::Routes => "routes",
        }
    }
}

/// Inclusive sweep bounds. Which fields an identity reads is listed on
/// [`sweep`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub max_i: usize,
    pub max_j: usize,
    pub max_k: usize,
    pub max_sum: usize,
    pub max_size: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_i: 8,
            max_j: 8,
            max_k: 4,
            max_sum: 10,
            max_size: 4,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub identity: &'static str,
    pub ranges: BTreeMap<&'static str, [usize; 2]>,
    pub checked: u64,
    pub failures: Vec<CheckOutcome>,
    pub elapsed_ms: u64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

struct Tally {
    checked: u64,
    failures: Vec<CheckOutcome>,
}

impl Tally {
    fn record(&mut self, out: CheckOutcome) {
        self.checked += 1;
        if !out.passed {
            self.failures.push(out);
        }
    }
}

/// Runs one identity over its index set.
///
/// | identity    | indices swept                                                   |
/// |-------------|-----------------------------------------------------------------|
/// | `rahimpour` | `i ≤ max_i`, `j ≤ max_j`                                        |
/// | `general`   | `i ≤ max_i`, `j ≤ max_j`, `1 ≤ k ≤ max_k`                       |
/// | `star`      | order `≤ max_k`, `i + j ≤ max_sum`, `1 ≤ m, l ≤ max_size`, every nonzero slide staying in the quadrant |
/// | `cross`     | order `≤ max_k`, `i + j ≤ max_sum`, `1 ≤ size ≤ max_size`, every nonzero slide |
/// | `product`   | `1 ≤ k ≤ max_k`, `j ≤ max_j`                                    |
/// | `stick`     | `1 ≤ k ≤ max_k`, `i ≤ max_i`, `j ≤ max_j`                       |
/// | `routes`    | `k ≤ max_k`, `i ≤ max_i`, `j ≤ max_j`                           |
pub fn sweep(identity: Identity, b: Bounds) -> Result<CheckReport> {
    let start = Instant::now();
    let mut ck = Checker::new();
    let mut tally = Tally {
        checked: 0,
        failures: Vec::new(),
    };
    let mut ranges = BTreeMap::new();
    match identity {
        Identity::Rahimpour => {
            ranges.insert("i", [0, b.max_i]);
            ranges.insert("j", [0, b.max_j]);
            for i in 0..=b.max_i {
                for j in 0..=b.max_j {
                    tally.record(ck.check_rahimpour(i, j)?);
                }
            }
        }
        Identity::General => {
            ranges.insert("i", [0, b.max_i]);
            ranges.insert("j", [0, b.max_j]);
            ranges.insert("k", [1, b.max_k]);
            for i in 0..=b.max_i {
                for j in 0..=b.max_j {
                    for k in 1..=b.max_k {
                        tally.record(ck.check_generalized(i, j, k)?);
                    }
                }
            }
        }
        Identity::Star => {
            ranges.insert("order", [0, b.max_k]);
            ranges.insert("i+j", [0, b.max_sum]);
            ranges.insert("m", [1, b.max_size]);
            ranges.insert("l", [1, b.max_size]);
            for q in 0..=b.max_k {
                for (anchor, t) in diagonal_slides(b.max_sum) {
                    for m in 1..=b.max_size {
                        for l in 1..=b.max_size {
                            let rect = AnchoredRect::new(anchor, m, l);
                            tally.record(ck.check_star_of_david(q, rect, t)?);
                        }
                    }
                }
            }
        }
        Identity::Cross => {
            ranges.insert("order", [0, b.max_k]);
            ranges.insert("i+j", [0, b.max_sum]);
            ranges.insert("size", [1, b.max_size]);
            for q in 0..=b.max_k {
                for (corner, t) in diagonal_slides(b.max_sum) {
                    for size in 1..=b.max_size {
                        tally.record(ck.check_sliding_cross(q, Cross::new(corner, size), t)?);
                    }
                }
            }
        }
        Identity::Product => {
            ranges.insert("k", [1, b.max_k]);
            ranges.insert("j", [0, b.max_j]);
            for k in 1..=b.max_k {
                for j in 0..=b.max_j {
                    tally.record(ck.check_product_identity(k, j)?);
                }
            }
        }
        Identity::Stick => {
            ranges.insert("k", [1, b.max_k]);
            ranges.insert("i", [0, b.max_i]);
            ranges.insert("j", [0, b.max_j]);
            for k in 1..=b.max_k {
                for i in 0..=b.max_i {
                    for j in 0..=b.max_j {
                        tally.record(ck.check_double_stick(k, GridIndex::new(i, j))?);
                    }
                }
            }
        }
        Identity::Routes => {
            ranges.insert("k", [0, b.max_k]);
            ranges.insert("i", [0, b.max_i]);
            ranges.insert("j", [0, b.max_j]);
            for k in 0..=b.max_k {
                let (alg, _) = pd_algorithm(k, b.max_i + 1, b.max_j + 1)?;
                for i in 0..=b.max_i {
                    for j in 0..=b.max_j {
                        tally.record(ck.check_routes(k, GridIndex::new(i, j), alg.get(i, j))?);
                    }
                }
            }
        }
    }
    Ok(CheckReport {
        identity: identity.name(),
        ranges,
        checked: tally.checked,
        failures: tally.failures,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Every anchor with `i + j ≤ max_sum` paired with every nonzero slide that
/// keeps it on its anti-diagonal inside the quadrant.
fn diagonal_slides(max_sum: usize) -> impl Iterator<Item = (GridIndex, i64)> {
    (0..=max_sum).flat_map(|s| {
        (0..=s).flat_map(move |i| {
            let j = s - i;
            (-(i as i64)..=j as i64)
                .filter(|&t| t != 0)
                .map(move |t| (GridIndex::new(i, j), t))
        })
    })
}

/// Methods timed by [`bench`].
pub const BENCH_METHODS: [Method; 4] = [
    Method::Direct,
    Method::Recursive,
    Method::Condensation,
    Method::ClosedForm,
];

#[derive(Debug, Clone)]
pub struct BenchRecord {
    pub method: Method,
    pub order: usize,
    pub idx: GridIndex,
    pub iters: u32,
    pub total: Duration,
    pub per_call: Duration,
    pub value: BigInt,
}

/// Times each method `iters` times, every call on fresh memo tables.
/// Fails if any two methods disagree.
pub fn bench(order: usize, idx: GridIndex, iters: u32) -> Result<Vec<BenchRecord>> {
    let iters = iters.max(1);
    let mut records = Vec::with_capacity(BENCH_METHODS.len());
    for method in BENCH_METHODS {
        let mut value = None;
        let start = Instant::now();
        for _ in 0..iters {
            value = Some(PdTables::new().entry(method, order, idx)?);
        }
        let total = start.elapsed();
        records.push(BenchRecord {
            method,
            order,
            idx,
            iters,
            total,
            per_call: total / iters,
            value: value.expect("iters >= 1"),
        });
    }
    let first = &records[0].value;
    if records.iter().any(|r| &r.value != first) {
        let detail = records
            .iter()
            .map(|r| format!("{}={}", r.method, r.value))
            .collect::<Vec<_>>()
            .join(", ");
        return Err(Error::MethodDisagreement {
            k: order,
            i: idx.i,
            j: idx.j,
            detail,
        });
    }
    Ok(records)
}

pub fn render_bench(records: &[BenchRecord]) -> String {
    let mut out = String::from(
        "# cold-cache timings: memo tables rebuilt on every call, process startup excluded\n",
    );
    let _ = writeln!(
        out,
        "{:<13} {:>5} {:>5} {:>5} {:>6} {:>12} {:>14}  value",
        "method", "order", "i", "j", "iters", "total_ms", "per_call_us"
    );
    for r in records {
        let _ = writeln!(
            out,
            "{:<13} {:>5} {:>5} {:>5} {:>6} {:>12.3} {:>14.3}  {}",
            r.method.name(),
            r.order,
            r.idx.i,
            r.idx.j,
            r.iters,
            r.total.as_secs_f64() * 1e3,
            r.per_call.as_secs_f64() * 1e6,
            r.value
        );
    }
    out
}
