//! Dense matrices and exact Gaussian elimination over the rationals.

use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Rational;

#[derive(Clone, PartialEq, Eq)]
pub struct DenseMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone + Zero> DenseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        DenseMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut T {
        &mut self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn map<U, F: Fn(&T) -> U>(&self, f: F) -> DenseMatrix<U> {
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T: Clone + Zero + One> DenseMatrix<T> {
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }
}

impl<T> DenseMatrix<T>
where
    T: Clone + Zero,
    for<'a> &'a T: Mul<&'a T, Output = T>,
    T: Add<Output = T>,
{
    pub fn matmul(&self, other: &DenseMatrix<T>) -> DenseMatrix<T> {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matmul");
        let mut out = DenseMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cell = out.get_mut(i, j);
                    *cell = std::mem::replace(cell, T::zero()) + a * b;
                }
            }
        }
        out
    }

    pub fn scaled(&self, s: &T) -> DenseMatrix<T> {
        self.map(|x| x * s)
    }
}

impl<T: fmt::Display> fmt::Debug for DenseMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|c| self.data[r * self.cols + c].to_string())
                .collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Row-reduces `rows` in place and returns the pivot columns.
fn row_reduce(rows: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of a rational matrix given by rows.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut work = rows.to_vec();
    row_reduce(&mut work, ncols).len()
}

/// Solves `A x = b` exactly. `A` may have more rows than columns; every
/// surplus equation is checked. Fails if `A` does not have full column rank
/// or the system is inconsistent.
pub fn solve_exact(a: &[Vec<Rational>], b: &[Rational]) -> Result<Vec<Rational>> {
    assert_eq!(a.len(), b.len(), "row count mismatch");
    let ncols = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug, ncols + 1);
    if pivots.contains(&ncols) {
        return Err(Error::Interpolation(
            "over-determined system is inconsistent".into(),
        ));
    }
    if pivots.len() < ncols {
        return Err(Error::Interpolation(format!(
            "system is rank deficient: rank {} < {} unknowns",
            pivots.len(),
            ncols
        )));
    }
    Ok((0..ncols).map(|i| aug[i][ncols].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    #[test]
    fn solves_square_system() {
        let a = vec![vec![q(2), q(1)], vec![q(1), q(3)]];
        let b = vec![q(3), q(5)];
        let x = solve_exact(&a, &b).unwrap();
        assert_eq!(
            x,
            vec![
                Rational::new(4.into(), 5.into()),
                Rational::new(7.into(), 5.into())
            ]
        );
    }

    #[test]
    fn detects_inconsistency_and_rank_deficiency() {
        let a = vec![vec![q(1)], vec![q(1)]];
        assert!(solve_exact(&a, &[q(1), q(2)]).is_err());
        assert!(solve_exact(&a, &[q(2), q(2)]).is_ok());
        let a = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert!(solve_exact(&a, &[q(1), q(2)]).is_err());
        assert_eq!(rank(&a), 1);
    }

    #[test]
    fn integer_matmul() {
        let a = DenseMatrix::from_rows(vec![vec![1i64, 2], vec![3, 4]]);
        let i = DenseMatrix::<i64>::identity(2);
        assert_eq!(a.matmul(&i), a);
        assert_eq!(
            a.matmul(&a),
            DenseMatrix::from_rows(vec![vec![7, 10], vec![15, 22]])
        );
    }
}
