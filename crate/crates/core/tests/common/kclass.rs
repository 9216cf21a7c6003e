//! K-class and Ext-algebra oracles.

use std::collections::BTreeMap;

use super::linalg::binom;

/// `[Ω^j(j)]` on `P^m` expanded in the basis `[O(0)], ..., [O(m)]`.
///
/// The twisted exterior powers of the Euler sequence resolve `Ω^j(j)` by
/// `Λ^{j-s} W(j) = O(s)^{C(m+1, j-s)}` in positions `s = 0..=j`, so the
/// class is the alternating sum `Σ_s (-1)^s C(m+1, j-s) [O(s)]`.
pub fn omega_class(m: usize, j: usize) -> Vec<i64> {
    assert!(j <= m);
    let mut class = vec![0i64; m + 1];
    for (s, slot) in class.iter_mut().enumerate().take(j + 1) {
        let coeff = binom(m as i64 + 1, (j - s) as i64) as i64;
        *slot = if s % 2 == 0 { coeff } else { -coeff };
    }
    class
}

/// `Ext^*(O_x, O_x)` on a smooth `n`-fold by the Koszul resolution: after
/// applying `Hom(-, k)` the contraction differentials vanish at the point
/// (every entry lies in the maximal ideal), leaving `Λ^i(k^n)` in degree
/// `i`. The dimensions are counted by enumerating subsets, not by a
/// closed form.
pub fn ext_skyscraper_oracle(n: usize) -> BTreeMap<i64, u64> {
    let mut out: BTreeMap<i64, u64> = BTreeMap::new();
    for mask in 0u64..1 << n {
        *out.entry(i64::from(mask.count_ones())).or_insert(0) += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_classes_on_p2() {
        assert_eq!(omega_class(2, 0), vec![1, 0, 0]);
        assert_eq!(omega_class(2, 1), vec![3, -1, 0]);
        assert_eq!(omega_class(2, 2), vec![3, -3, 1]);
    }

    #[test]
    fn omega_class_rank_is_binomial() {
        // Evaluating the class on ranks gives rank Ω^j = C(m, j).
        for m in 1..=5usize {
            for j in 0..=m {
                let rank: i64 = omega_class(m, j).iter().sum();
                assert_eq!(rank, binom(m as i64, j as i64) as i64);
            }
        }
    }

    #[test]
    fn skyscraper_oracle_small() {
        assert_eq!(ext_skyscraper_oracle(0), BTreeMap::from([(0, 1)]));
        assert_eq!(ext_skyscraper_oracle(1), BTreeMap::from([(0, 1), (1, 1)]));
        assert_eq!(
            ext_skyscraper_oracle(3),
            BTreeMap::from([(0, 1), (1, 3), (2, 3), (3, 1)])
        );
    }
}
