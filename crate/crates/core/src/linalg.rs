//! Exact rank of integer matrices by fraction-free (Bareiss) elimination.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rank over the rationals of the matrix with the given rows.
///
/// Rows may have different lengths only if empty input; otherwise all rows
/// must share one length.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let n_rows = m.len();
    let n_cols = m.first().map_or(0, Vec::len);
    debug_assert!(m.iter().all(|r| r.len() == n_cols));

    let mut rank = 0;
    let mut prev_pivot = BigInt::one();
    for col in 0..n_cols {
        if rank == n_rows {
            break;
        }
        let Some(pivot_row) = (rank..n_rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col].clone();
        for r in rank + 1..n_rows {
            let factor = m[r][col].clone();
            for c in col..n_cols {
                // Bareiss step: the division is exact.
                let v = (&pivot * &m[r][c] - &factor * &m[rank][c]) / &prev_pivot;
                m[r][c] = v;
            }
        }
        prev_pivot = pivot;
        rank += 1;
    }
    rank
}

/// Convenience wrapper for small signed entries.
pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    let big: Vec<Vec<BigInt>> =
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    rank(&big)
}
