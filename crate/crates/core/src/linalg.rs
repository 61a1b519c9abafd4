//! Exact rank computation over a field.


use crate::scalar::Field;

/// Rank of a dense matrix given as rows, by Gaussian elimination.
pub fn rank<F: Field>(mut rows: Vec<Vec<F>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inv();
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone() * inv.clone();
            for c in col..ncols {
                if !rows[rank][c].is_zero() {
                    let v = rows[r][c].clone() - factor.clone() * rows[rank][c].clone();
                    rows[r][c] = v;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Rank of a sparse matrix with integer entries, given as `(row, col, value)`
/// triples.
pub fn sparse_rank<F: Field>(nrows: usize, ncols: usize, entries: &[(usize, usize, i64)]) -> usize {
    if nrows == 0 || ncols == 0 {
        return 0;
    }
    let mut dense = vec![vec![F::zero(); ncols]; nrows];
    for &(r, c, v) in entries {
        dense[r][c] = dense[r][c].clone() + F::from_i64(v);
    }
    rank(dense)
}
