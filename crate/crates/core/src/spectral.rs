//! Floating-point eigenvalue computation for small symmetric matrices.
//!
//! This is the numeric oracle used to cross-check the table-driven
//! classifier: the classifier of record never touches floating point.

/// Eigenvalues of a symmetric matrix by the cyclic Jacobi method.
///
/// Matrices here are tiny (diagram ranks stay below a few dozen), so
/// robustness beats asymptotics.
pub fn symmetric_eigenvalues(mat: &[Vec<f64>]) -> Vec<f64> {
    let n = mat.len();
    if n == 0 {
        return Vec::new();
    }
    let mut a: Vec<Vec<f64>> = mat.to_vec();
    for row in &a {
        assert_eq!(row.len(), n, "matrix must be square");
    }
    if cfg!(debug_assertions) {
        for (i, row) in a.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                debug_assert!((x - mat[j][i]).abs() < 1e-12, "matrix must be symmetric");
            }
        }
    }

    let off = |a: &Vec<Vec<f64>>| -> f64 {
        let mut s = 0.0;
        for (i, row) in a.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if i != j {
                    s += x * x;
                }
            }
        }
        s
    };

    for _sweep in 0..100 {
        if off(&a) < 1e-28 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq.abs() < 1e-15 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for row in a.iter_mut() {
                    let (rp, rq) = (row[p], row[q]);
                    row[p] = c * rp - s * rq;
                    row[q] = s * rp + c * rq;
                }
                let (lo, hi) = a.split_at_mut(q);
                for (pk, qk) in lo[p].iter_mut().zip(hi[0].iter_mut()) {
                    let (x, y) = (*pk, *qk);
                    *pk = c * x - s * y;
                    *qk = s * x + c * y;
                }
            }
        }
    }

    let mut eigs: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eigs.sort_by(|x, y| x.partial_cmp(y).unwrap());
    eigs
}

/// Smallest eigenvalue of a symmetric matrix; +inf for the empty matrix.
pub fn min_eigenvalue(mat: &[Vec<f64>]) -> f64 {
    symmetric_eigenvalues(mat)
        .first()
        .copied()
        .unwrap_or(f64::INFINITY)
}
