use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index ({i}, {j}) is outside the non-negative quadrant")]
    Domain { i: i64, j: i64 },

    #[error("matrix is {rows}x{cols}, a square matrix is required")]
    NotSquare { rows: usize, cols: usize },

    #[error("cofactor expansion refused for n = {n} (cap is {cap})")]
    OracleCapExceeded { n: usize, cap: usize },

    #[error("minor of side {r} at ({i}, {j}) does not fit in a {n}x{n} matrix")]
    MinorOutOfRange {
        r: usize,
        i: usize,
        j: usize,
        n: usize,
    },

    #[error("zero interior entry at generation {generation}, position ({row}, {col})")]
    ZeroInterior {
        generation: usize,
        row: usize,
        col: usize,
    },

    #[error("{route}: division {numerator} / {denominator} is not exact")]
    InexactDivision {
        route: &'static str,
        numerator: String,
        denominator: String,
    },

    #[error("{route}: entry ({i}, {j}) of order {k} is {value}, not an integer")]
    NonIntegral {
        route: &'static str,
        k: usize,
        i: usize,
        j: usize,
        value: String,
    },

    #[error("the {method} route only generates windows at the array origin, got ({i}, {j})")]
    InvalidOrigin {
        method: &'static str,
        i: usize,
        j: usize,
    },

    #[error("methods disagree on P^({k})_({i},{j}): {detail}")]
    MethodDisagreement {
        k: usize,
        i: usize,
        j: usize,
        detail: String,
    },

    #[error("rows and cols must be positive, got {rows}x{cols}")]
    EmptyWindow { rows: usize, cols: usize },
}
