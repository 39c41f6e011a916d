use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::scalars::Rational;

/// Rank over `Q` by fraction-free (Bareiss) elimination. Each row is first
/// cleared of denominators, after which every intermediate entry is a minor
/// of the integer matrix and all divisions are exact.
pub fn exact_rank(matrix: &[Vec<Rational>]) -> usize {
    let mut rows: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .filter(|row: &Vec<BigInt>| row.iter().any(|x| !x.is_zero()))
        .collect();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let Some(pivot) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (top, below) = rows.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let p = &pivot_row[col];
        for row in below.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..ncols {
                let value = p * &row[j] - &factor * &pivot_row[j];
                debug_assert!((&value % &prev).is_zero());
                row[j] = value / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = p.clone();
        rank += 1;
    }
    rank
}
