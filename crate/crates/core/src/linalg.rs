//! Dense Gaussian elimination over the rationals.

use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveError {
    /// The columns of the system are linearly dependent.
    Singular,
    /// Full column rank, but the right-hand side is outside the column span.
    Inconsistent,
}

/// Solve `a * x = b` for `a` with `rows >= cols` and full column rank.
///
/// `a` is given row-major. Returns the unique solution.
pub fn solve_unique(
    mut a: Vec<Vec<BigRational>>,
    mut b: Vec<BigRational>,
) -> Result<Vec<BigRational>, SolveError> {
    let rows = a.len();
    assert_eq!(rows, b.len(), "right-hand side length");
    let cols = a.first().map_or(0, Vec::len);
    assert!(a.iter().all(|r| r.len() == cols), "ragged matrix");
    if rows < cols {
        return Err(SolveError::Singular);
    }

    for col in 0..cols {
        let pivot = (col..rows)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(SolveError::Singular)?;
        a.swap(col, pivot);
        b.swap(col, pivot);

        let inv = a[col][col].recip();
        for v in a[col][col..].iter_mut() {
            *v *= &inv;
        }
        b[col] *= &inv;

        let (head, tail) = a.split_at_mut(col + 1);
        let pivot_row = &head[col];
        let (b_head, b_tail) = b.split_at_mut(col + 1);
        let pivot_rhs = &b_head[col];
        for (row, rhs) in tail.iter_mut().zip(b_tail.iter_mut()) {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
            *rhs -= &factor * pivot_rhs;
        }
    }

    if b[cols..].iter().any(|v| !v.is_zero()) {
        return Err(SolveError::Inconsistent);
    }

    // back substitution on the unit upper triangle
    let mut x = b;
    x.truncate(cols);
    for col in (0..cols).rev() {
        let (done, _) = x.split_at(col + 1);
        let mut acc = done[col].clone();
        for (k, coeff) in a[col].iter().enumerate().skip(col + 1) {
            if !coeff.is_zero() {
                acc -= coeff * &x[k];
            }
        }
        x[col] = acc;
    }
    Ok(x)
}

pub fn identity(n: usize) -> Vec<Vec<BigRational>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect()
}
