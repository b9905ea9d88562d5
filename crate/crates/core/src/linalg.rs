//! Dense exact linear algebra over `Q`, just enough for root coordinates and
//! the key-basis solve.

use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::Q;

pub(crate) type Matrix = Vec<Vec<Q>>;

pub(crate) fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let rows = a.len();
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![Q::zero(); cols]; rows];
    for r in 0..rows {
        for k in 0..inner {
            let x = a[r][k];
            if x.is_zero() {
                continue;
            }
            for c in 0..cols {
                out[r][c] += x * b[k][c];
            }
        }
    }
    out
}

pub(crate) fn transpose(a: &Matrix) -> Matrix {
    if a.is_empty() {
        return Vec::new();
    }
    (0..a[0].len()).map(|c| a.iter().map(|row| row[c]).collect()).collect()
}

/// Inverse of a square matrix, `None` when singular.
pub(crate) fn inverse(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut aug: Matrix = a
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let mut v = row.clone();
            v.extend((0..n).map(|c| if c == r { Q::one() } else { Q::zero() }));
            v
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let p = aug[col][col];
        for x in aug[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let factor = aug[r][col];
                let pivot_row = aug[col].clone();
                for (x, y) in aug[r].iter_mut().zip(pivot_row) {
                    *x -= factor * y;
                }
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Solves `a x = b` for square `a`.
pub(crate) fn solve(a: &Matrix, b: &[Q]) -> Option<Vec<Q>> {
    let inv = inverse(a)?;
    Some(
        inv.iter()
            .map(|row| row.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + *x * *y))
            .collect(),
    )
}
