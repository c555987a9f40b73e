//! Dense LU with partial pivoting and a tridiagonal (Thomas) solver.
//!
//! The step matrix is lower-banded plus one superdiagonal and at most a
//! few hundred rows at desk scale, so a dense factorization kept for the
//! whole march is simpler than anything clever and fast enough.

use crate::error::{Error, Result};
use nalgebra::{DMatrix, DVector};

/// LU factors of a square matrix, P·A = L·U.
#[derive(Debug, Clone)]
pub struct LuFactors {
    /// L strictly below the diagonal (unit diagonal implied), U on and above.
    lu: DMatrix<f64>,
    /// Row permutation: perm[i] is the original row now in position i.
    perm: Vec<usize>,
    max_pivot: f64,
    min_pivot: f64,
}

impl LuFactors {
    /// Factor with partial pivoting. A vanishing pivot reports a
    /// singularity with the pivot-ratio condition estimate.
    pub fn factor(a: &DMatrix<f64>) -> Result<Self> {
        let n = a.nrows();
        if n == 0 || a.ncols() != n {
            return Err(Error::DimensionMismatch(format!(
                "LU needs a square matrix, got {}x{}",
                a.nrows(),
                a.ncols()
            )));
        }
        let mut lu = a.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut max_pivot = 0.0f64;
        let mut min_pivot = f64::INFINITY;
        for col in 0..n {
            let mut pivot_row = col;
            let mut pivot_mag = lu[(col, col)].abs();
            for row in col + 1..n {
                let mag = lu[(row, col)].abs();
                if mag > pivot_mag {
                    pivot_mag = mag;
                    pivot_row = row;
                }
            }
            if pivot_mag == 0.0 || !pivot_mag.is_finite() {
                let cond = if min_pivot > 0.0 && min_pivot.is_finite() {
                    max_pivot / min_pivot.min(f64::MIN_POSITIVE.sqrt())
                } else {
                    f64::INFINITY
                };
                return Err(Error::SingularMatrix { condition: cond });
            }
            if pivot_row != col {
                lu.swap_rows(pivot_row, col);
                perm.swap(pivot_row, col);
            }
            max_pivot = max_pivot.max(pivot_mag);
            min_pivot = min_pivot.min(pivot_mag);
            let inv = 1.0 / lu[(col, col)];
            for row in col + 1..n {
                let factor = lu[(row, col)] * inv;
                lu[(row, col)] = factor;
                if factor != 0.0 {
                    for c in col + 1..n {
                        let sub = factor * lu[(col, c)];
                        lu[(row, c)] -= sub;
                    }
                }
            }
        }
        Ok(LuFactors {
            lu,
            perm,
            max_pivot,
            min_pivot,
        })
    }

    /// Crude conditioning indicator: |pivot|_max / |pivot|_min.
    pub fn condition_estimate(&self) -> f64 {
        self.max_pivot / self.min_pivot
    }

    pub fn solve(&self, b: &DVector<f64>) -> DVector<f64> {
        let n = self.lu.nrows();
        assert_eq!(b.len(), n, "rhs length mismatch");
        // apply permutation, forward substitution (unit L)
        let mut y = DVector::zeros(n);
        for i in 0..n {
            let mut acc = b[self.perm[i]];
            for j in 0..i {
                acc -= self.lu[(i, j)] * y[j];
            }
            y[i] = acc;
        }
        // back substitution (U)
        let mut x = DVector::zeros(n);
        for i in (0..n).rev() {
            let mut acc = y[i];
            for j in i + 1..n {
                acc -= self.lu[(i, j)] * x[j];
            }
            x[i] = acc / self.lu[(i, i)];
        }
        x
    }
}

/// Thomas algorithm for a tridiagonal system. `lower[0]` and
/// `upper[n-1]` are ignored. Fails on a vanishing pivot (no pivoting:
/// callers supply diagonally dominant systems).
pub fn solve_tridiagonal(
    lower: &[f64],
    diag: &[f64],
    upper: &[f64],
    rhs: &[f64],
) -> Result<Vec<f64>> {
    let n = diag.len();
    if lower.len() != n || upper.len() != n || rhs.len() != n || n == 0 {
        return Err(Error::DimensionMismatch(format!(
            "tridiagonal bands {}/{}/{} with rhs {}",
            lower.len(),
            diag.len(),
            upper.len(),
            rhs.len()
        )));
    }
    let mut c = vec![0.0; n];
    let mut d = vec![0.0; n];
    let mut piv = diag[0];
    if piv == 0.0 {
        return Err(Error::SingularMatrix { condition: f64::INFINITY });
    }
    c[0] = upper[0] / piv;
    d[0] = rhs[0] / piv;
    for i in 1..n {
        piv = diag[i] - lower[i] * c[i - 1];
        if piv == 0.0 || !piv.is_finite() {
            return Err(Error::SingularMatrix { condition: f64::INFINITY });
        }
        c[i] = upper[i] / piv;
        d[i] = (rhs[i] - lower[i] * d[i - 1]) / piv;
    }
    for i in (0..n - 1).rev() {
        d[i] -= c[i] * d[i + 1];
    }
    Ok(d)
}
