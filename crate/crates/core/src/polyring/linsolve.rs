use num_traits::Zero;

use super::coefficient::Coefficient;

/// Exact solution of `matrix · x = rhs`, or `None` when the system is inconsistent.
///
/// Gauss-Jordan elimination over the Gaussian rationals. Free unknowns are set
/// to zero, so the returned solution is the one supported on pivot columns.
/// The matrix must be rectangular with `rhs.len()` rows.
pub fn solve_linear(matrix: &[Vec<Coefficient>], rhs: &[Coefficient]) -> Option<Vec<Coefficient>> {
    assert_eq!(matrix.len(), rhs.len(), "row count must match rhs length");
    let ncols = matrix.first().map_or(0, |r| r.len());
    assert!(
        matrix.iter().all(|r| r.len() == ncols),
        "matrix must be rectangular"
    );

    let mut rows: Vec<Vec<Coefficient>> = matrix
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();

    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for j in c..=ncols {
                let t = &rows[r][j] * &f;
                rows[i][j] -= &t;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }

    if rows[r..].iter().any(|row| !row[ncols].is_zero()) {
        return None;
    }

    let mut x = vec![Coefficient::zero(); ncols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = rows[i][ncols].clone();
    }
    Some(x)
}
