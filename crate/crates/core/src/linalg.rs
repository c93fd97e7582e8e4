//! Small exact linear-algebra helpers over the rationals.

use crate::cyclo::Rational;
use num_traits::Zero;

/// Solve `A x = b` by Gaussian elimination, where `a` is given column-major
/// (`a[j]` is the j-th column, all of length `m`). Returns `None` when the
/// system is inconsistent or underdetermined beyond the pivot columns.
pub fn solve_columns(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let m = b.len();
    let n = a.len();
    for col in a {
        assert_eq!(col.len(), m);
    }
    // augmented matrix, row major
    let mut rows: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut r: Vec<Rational> = a.iter().map(|col| col[i].clone()).collect();
            r.push(b[i].clone());
            r
        })
        .collect();

    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
    let mut row = 0usize;
    for col in 0..n {
        let Some(p) = (row..m).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(row, p);
        let inv = rows[row][col].recip();
        for x in rows[row].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for r in 0..m {
            if r != row && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in col..=n {
                    let delta = &f * &rows[row][c];
                    rows[r][c] = &rows[r][c] - &delta;
                }
            }
        }
        pivot_of_col[col] = Some(row);
        row += 1;
        if row == m {
            break;
        }
    }
    // inconsistency: a nonzero rhs in a zero row
    for r in row..m {
        if rows[r][..n].iter().all(Zero::is_zero) && !rows[r][n].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rational::zero(); n];
    for col in 0..n {
        if let Some(r) = pivot_of_col[col] {
            x[col] = rows[r][n].clone();
        }
    }
    // verify (free variables set to zero must still satisfy the system)
    for i in 0..m {
        let mut acc = Rational::zero();
        for (j, col) in a.iter().enumerate() {
            if !x[j].is_zero() {
                acc += &col[i] * &x[j];
            }
        }
        if acc != b[i] {
            return None;
        }
    }
    Some(x)
}
