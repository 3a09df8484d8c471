//! Exact integer determinants: cofactor expansion (the oracle), fraction-free
//! Bareiss elimination, and Dodgson condensation.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{BigInt, Error, Result};

/// Default size limit for [`det_laplace`].
pub const LAPLACE_CAP: usize = 8;

/// Dense row-major grid of big integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl Matrix {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from equal-length rows. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| {
            if r == c {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    fn side(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", line.join(", "))?;
        }
        Ok(())
    }
}

/// `A_r(i, j)`: the `r × r` block starting at row `i`, column `j`.
///
/// Addressing is one-based, so `MinorSpec { r: n, i: 1, j: 1 }` is the whole
/// matrix and `MinorSpec { r: n - 2, i: 2, j: 2 }` the central block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinorSpec {
    pub r: usize,
    pub i: usize,
    pub j: usize,
}

impl MinorSpec {
    pub fn new(r: usize, i: usize, j: usize) -> Self {
        MinorSpec { r, i, j }
    }
}

pub fn contiguous_minor(m: &Matrix, spec: MinorSpec) -> Result<Matrix> {
    let n = m.side()?;
    let MinorSpec { r, i, j } = spec;
    if r == 0 || i == 0 || j == 0 || i + r - 1 > n || j + r - 1 > n {
        return Err(Error::MinorOutOfRange { r, i, j, n });
    }
    Ok(Matrix::from_fn(r, r, |a, b| {
        m.get(i - 1 + a, j - 1 + b).clone()
    }))
}

/// Cofactor expansion, refused above [`LAPLACE_CAP`].
pub fn det_laplace(m: &Matrix) -> Result<BigInt> {
    det_laplace_capped(m, LAPLACE_CAP)
}

pub fn det_laplace_capped(m: &Matrix, cap: usize) -> Result<BigInt> {
    let n = m.side()?;
    if n > cap {
        return Err(Error::OracleCapExceeded { n, cap });
    }
    let cols: Vec<usize> = (0..n).collect();
    Ok(expand(m, 0, &cols))
}

fn expand(m: &Matrix, row: usize, cols: &[usize]) -> BigInt {
    match cols.len() {
        0 => BigInt::one(),
        1 => m.get(row, cols[0]).clone(),
        _ => {
            let mut acc = BigInt::zero();
            let mut rest = Vec::with_capacity(cols.len() - 1);
            for (pos, &c) in cols.iter().enumerate() {
                let a = m.get(row, c);
                if a.is_zero() {
                    continue;
                }
                rest.clear();
                rest.extend(cols.iter().copied().filter(|&x| x != c));
                let term = a * expand(m, row + 1, &rest);
                if pos % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}

/// Fraction-free Gaussian elimination with row exchanges.
pub fn det_bareiss(m: &Matrix) -> Result<BigInt> {
    let n = m.side()?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.to_rows();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                // Sylvester's identity makes this division exact.
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Iterated Dodgson condensation.
///
/// Generation 0 is an `(n+1) × (n+1)` grid of ones, generation 1 is `m`, and
/// generation `g + 1` holds the contiguous 2×2 minors of generation `g`
/// divided entrywise by the interior of generation `g − 1`. A zero in an
/// interior used as a divisor yields [`Error::ZeroInterior`]; fall back to
/// [`det_bareiss`] in that case.
pub fn det_condensation(m: &Matrix) -> Result<BigInt> {
    let n = m.side()?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut older: Vec<Vec<BigInt>> = vec![vec![BigInt::one(); n + 1]; n + 1];
    let mut current = m.to_rows();
    let mut generation = 1;
    while current.len() > 1 {
        let size = current.len() - 1;
        let mut next = Vec::with_capacity(size);
        for r in 0..size {
            let mut row = Vec::with_capacity(size);
            for c in 0..size {
                let minor = &current[r][c] * &current[r + 1][c + 1]
                    - &current[r][c + 1] * &current[r + 1][c];
                let divisor = &older[r + 1][c + 1];
                if divisor.is_zero() {
                    return Err(Error::ZeroInterior {
                        generation: generation - 1,
                        row: r + 1,
                        col: c + 1,
                    });
                }
                row.push(exact_div(minor, divisor, "condensation")?);
            }
            next.push(row);
        }
        older = std::mem::replace(&mut current, next);
        generation += 1;
    }
    Ok(current[0][0].clone())
}

pub(crate) fn exact_div(num: BigInt, den: &BigInt, route: &'static str) -> Result<BigInt> {
    let (q, r) = num.div_rem(den);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::InexactDivision {
            route,
            numerator: num.to_string(),
            denominator: den.to_string(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pascal_core::pascal_window;
    use crate::GridIndex;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn sample4() -> Matrix {
        Matrix::from_i64(&[
            &[1, 2, 3, 4],
            &[5, 6, 7, 8],
            &[9, 10, 11, 12],
            &[13, 14, 15, 16],
        ])
    }

    #[test]
    fn laplace_examples() {
        assert_eq!(det_laplace(&Matrix::from_i64(&[&[5]])).unwrap(), big(5));
        assert_eq!(
            det_laplace(&Matrix::from_i64(&[&[1, 1], &[4, 5]])).unwrap(),
            big(1)
        );
        let m = Matrix::from_i64(&[&[1, 1, 1], &[3, 4, 5], &[6, 10, 15]]);
        assert_eq!(det_laplace(&m).unwrap(), big(1));
    }

    #[test]
    fn laplace_cap() {
        let m = Matrix::identity(9);
        assert_eq!(
            det_laplace(&m),
            Err(Error::OracleCapExceeded { n: 9, cap: 8 })
        );
        assert_eq!(det_laplace(&Matrix::identity(8)).unwrap(), big(1));
        assert_eq!(det_laplace_capped(&m, 9).unwrap(), big(1));
    }

    #[test]
    fn non_square_rejected() {
        let m = Matrix::from_i64(&[&[1, 2, 3]]);
        assert!(matches!(det_bareiss(&m), Err(Error::NotSquare { .. })));
        assert!(matches!(det_laplace(&m), Err(Error::NotSquare { .. })));
        assert!(matches!(det_condensation(&m), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn bareiss_examples() {
        assert_eq!(det_bareiss(&Matrix::identity(4)).unwrap(), big(1));
        assert_eq!(
            det_bareiss(&Matrix::from_i64(&[&[1, 1], &[4, 5]])).unwrap(),
            big(1)
        );
        let w = pascal_window(GridIndex::new(0, 2), 3, 3).unwrap();
        assert_eq!(det_bareiss(&w).unwrap(), det_laplace(&w).unwrap());
        assert_eq!(det_bareiss(&w).unwrap(), big(1));
    }

    #[test]
    fn bareiss_zero_pivot_and_singular() {
        let m = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(det_bareiss(&m).unwrap(), big(-1));
        let m = Matrix::from_i64(&[&[0, 2, 1], &[0, 3, 4], &[5, 1, 1]]);
        assert_eq!(det_bareiss(&m).unwrap(), det_laplace(&m).unwrap());
        assert_eq!(det_bareiss(&sample4()).unwrap(), big(0));
        let m = Matrix::from_i64(&[&[0, 0], &[0, 7]]);
        assert_eq!(det_bareiss(&m).unwrap(), big(0));
    }

    #[test]
    fn minors() {
        let a = sample4();
        assert_eq!(
            contiguous_minor(&a, MinorSpec::new(2, 2, 2)).unwrap(),
            Matrix::from_i64(&[&[6, 7], &[10, 11]])
        );
        assert_eq!(
            contiguous_minor(&a, MinorSpec::new(3, 1, 1)).unwrap(),
            Matrix::from_i64(&[&[1, 2, 3], &[5, 6, 7], &[9, 10, 11]])
        );
        assert_eq!(contiguous_minor(&a, MinorSpec::new(4, 1, 1)).unwrap(), a);
        assert_eq!(
            contiguous_minor(&a, MinorSpec::new(3, 2, 3)),
            Err(Error::MinorOutOfRange {
                r: 3,
                i: 2,
                j: 3,
                n: 4
            })
        );
        assert!(contiguous_minor(&a, MinorSpec::new(1, 0, 1)).is_err());
    }

    #[test]
    fn condensation_examples() {
        assert_eq!(
            det_condensation(&Matrix::from_i64(&[&[1, 1], &[4, 5]])).unwrap(),
            big(1)
        );
        let m = Matrix::from_i64(&[&[1, 1, 1], &[3, 4, 5], &[6, 10, 15]]);
        assert_eq!(det_condensation(&m).unwrap(), big(1));
        let m = Matrix::from_i64(&[&[1, 2, 3], &[4, 0, 5], &[6, 7, 8]]);
        assert_eq!(
            det_condensation(&m),
            Err(Error::ZeroInterior {
                generation: 1,
                row: 1,
                col: 1
            })
        );
        // the fallback still answers
        assert_eq!(det_bareiss(&m).unwrap(), det_laplace(&m).unwrap());
    }

    #[test]
    fn condensation_on_known_values() {
        let m = Matrix::from_i64(&[&[2, -1, 0, 3], &[1, 4, 2, -2], &[0, 3, 5, 1], &[7, 1, 2, 6]]);
        assert_eq!(det_condensation(&m).unwrap(), det_laplace(&m).unwrap());
        assert_eq!(
            det_condensation(&Matrix::from_i64(&[&[-4]])).unwrap(),
            big(-4)
        );
    }
}
