//! Exact rank and binomial helpers for the oracles.

/// Rank over the integers (equivalently over Q) by fraction-free Bareiss
/// elimination with column pivoting. Intermediate values are minors of
/// the input; overflow panics instead of wrapping.
pub fn rank(m: &[Vec<i128>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let mut rank = 0usize;
    let mut prev = 1i128;
    let mut row = 0usize;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(pivot_row) = (row..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(row, pivot_row);
        let pivot = a[row][col];
        for r in row + 1..rows {
            for c in col + 1..cols {
                let num = pivot
                    .checked_mul(a[r][c])
                    .and_then(|x| x.checked_sub(a[r][col].checked_mul(a[row][c])?))
                    .expect("oracle rank overflow");
                debug_assert_eq!(num % prev, 0, "Bareiss division must be exact");
                a[r][c] = num / prev;
            }
            a[r][col] = 0;
        }
        prev = pivot;
        row += 1;
        rank += 1;
    }
    rank
}

/// Binomial coefficient, zero when `b < 0` or `a < b`.
pub fn binom(a: i64, b: i64) -> u64 {
    if b < 0 || a < b {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc.checked_mul((a - i) as u128).expect("binomial overflow");
        acc /= (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflow")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[vec![1, 0, 3], vec![0, 1, -1], vec![1, 1, 2]]), 2);
    }
}
