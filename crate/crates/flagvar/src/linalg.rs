//! Exact linear algebra over arbitrary-precision rationals.
//!
//! Small dense routines used by the invariant-theory and cohomology
//! modules: reduced row echelon form, kernel bases, and determinants.
//! Everything is deterministic; pivots are chosen by position, never by
//! magnitude (there is no rounding to worry about).

use num::rational::BigRational;
use num::traits::{One, Zero};

/// Reduces `rows` to reduced row echelon form in place and returns the
/// pivot columns in ascending order. Zero rows sink to the bottom.
pub fn rref(rows: &mut Vec<Vec<BigRational>>) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let inv = rows[rank][col].clone().recip();
        for c in col..ncols {
            let v = rows[rank][c].clone() * &inv;
            rows[rank][c] = v;
        }
        for r in 0..nrows {
            if r == rank || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            for c in col..ncols {
                let delta = rows[rank][c].clone() * &factor;
                rows[r][c] -= delta;
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    pivots
}

/// Basis of the solution space of the homogeneous system whose equations
/// are `rows` (each row one equation in `ncols` unknowns).
///
/// The result is canonical: the system is put in reduced row echelon form
/// and each free column contributes one basis vector with a `1` in that
/// column, free columns taken in ascending order.
pub fn kernel_basis(rows: &[Vec<BigRational>], ncols: usize) -> Vec<Vec<BigRational>> {
    let mut mat: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), ncols);
            r.clone()
        })
        .collect();
    let pivots = rref(&mut mat);
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; ncols];
        for &p in &pivots {
            v[p] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..ncols {
        if is_pivot[free] {
            continue;
        }
        let mut vec = vec![BigRational::zero(); ncols];
        vec[free] = BigRational::one();
        for (row, &p) in pivots.iter().enumerate() {
            vec[p] = -mat[row][free].clone();
        }
        basis.push(vec);
    }
    basis
}

/// Determinant of a square matrix by Gaussian elimination with exact
/// rational arithmetic.
pub fn det(matrix: &[Vec<BigRational>]) -> BigRational {
    let n = matrix.len();
    let mut m: Vec<Vec<BigRational>> = matrix
        .iter()
        .map(|r| {
            assert_eq!(r.len(), n, "determinant requires a square matrix");
            r.clone()
        })
        .collect();
    let mut result = BigRational::one();
    for col in 0..n {
        let Some(pivot_row) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot_row != col {
            m.swap(col, pivot_row);
            result = -result;
        }
        let pivot = m[col][col].clone();
        result *= &pivot;
        let inv = pivot.recip();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone() * &inv;
            for c in col..n {
                let delta = m[col][c].clone() * &factor;
                m[r][c] -= delta;
            }
        }
    }
    result
}
