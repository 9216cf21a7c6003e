//! Small exact integer linear algebra helpers shared by the quiver and
//! mutation engines. Everything here is fraction-free; overflow panics
//! rather than silently wrapping.

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Intended for the small matrices this crate manipulates (Gram and Tits
/// forms, basis-class matrices); all intermediate values are minors of the
/// input, computed in `i128`.
pub(crate) fn det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    for row in m {
        assert_eq!(row.len(), n, "determinant of a non-square matrix");
    }
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return 0;
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[k][k]
                    .checked_mul(a[i][j])
                    .and_then(|x| x.checked_sub(a[i][k].checked_mul(a[k][j]).expect("overflow")))
                    .expect("determinant overflow");
                a[i][j] = num / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Leading principal minors `det(m[..k][..k])` for `k = 1..=n`.
pub(crate) fn leading_principal_minors(m: &[Vec<i64>]) -> Vec<i128> {
    (1..=m.len())
        .map(|k| {
            let sub: Vec<Vec<i64>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
            det(&sub)
        })
        .collect()
}

/// `a * b` with checked arithmetic.
pub(crate) fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rows = a.len();
    let inner = if rows > 0 { a[0].len() } else { 0 };
    let cols = if inner > 0 { b[0].len() } else { 0 };
    assert_eq!(b.len(), inner, "dimension mismatch in matrix product");
    let mut out = vec![vec![0i64; cols]; rows];
    for i in 0..rows {
        for k in 0..inner {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..cols {
                out[i][j] = out[i][j]
                    .checked_add(a[i][k].checked_mul(b[k][j]).expect("matrix entry overflow"))
                    .expect("matrix entry overflow");
            }
        }
    }
    out
}

pub(crate) fn transpose(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rows = a.len();
    let cols = if rows > 0 { a[0].len() } else { 0 };
    let mut out = vec![vec![0i64; rows]; cols];
    for (i, row) in a.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            out[j][i] = x;
        }
    }
    out
}

pub(crate) fn identity(n: usize) -> Vec<Vec<i64>> {
    let mut out = vec![vec![0i64; n]; n];
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_small_cases() {
        assert_eq!(det(&[]), 1);
        assert_eq!(det(&[vec![7]]), 7);
        assert_eq!(det(&[vec![2, -1], vec![-1, 2]]), 3);
        assert_eq!(det(&[vec![0, 1], vec![1, 0]]), -1);
        // D4 Cartan matrix has determinant 4.
        let d4 = vec![
            vec![2, -1, -1, -1],
            vec![-1, 2, 0, 0],
            vec![-1, 0, 2, 0],
            vec![-1, 0, 0, 2],
        ];
        assert_eq!(det(&d4), 4);
    }

    #[test]
    fn minors_of_a2() {
        let a2 = vec![vec![2, -1], vec![-1, 2]];
        assert_eq!(leading_principal_minors(&a2), vec![2, 3]);
    }

    #[test]
    fn product_and_transpose() {
        let a = vec![vec![1, 2], vec![0, 1]];
        let b = vec![vec![1, 0], vec![3, 1]];
        assert_eq!(mat_mul(&a, &b), vec![vec![7, 2], vec![3, 1]]);
        assert_eq!(transpose(&a), vec![vec![1, 0], vec![2, 1]]);
        assert_eq!(mat_mul(&identity(2), &a), a);
    }
}
