//! Independent ground truth for `H^q(P^n, Ω^p(t))` at desk scale.
//!
//! The twisted exterior powers of the Euler sequence splice into an exact
//! complex `0 -> Ω^p(t) -> Λ^p W(t) -> ... -> Λ^0 W(t) -> 0` with
//! `W = O(-1)^{n+1}` and contraction by the Euler vector field as the
//! differential. So `Ω^p(t)` is quasi-isomorphic to that complex of sums
//! of line bundles, and its cohomology is the total cohomology of the
//! Čech double complex over the standard affine cover, in explicit
//! monomial bases.
//!
//! Everything is equivariant for the torus, so the double complex splits
//! into finite weight pieces: the basis vector `e_I · x^{w - ε_I}` is a
//! section over the chart intersection `U_S` iff `(w - ε_I)_i >= 0` for
//! every `i` outside `S`. That condition only tests `w_i >= 0` and
//! `w_i >= 1`, hence the piece depends only on the per-coordinate sign
//! pattern of `w` (negative / zero / positive). Patterns containing both
//! a negative and a positive coordinate hold infinitely many weights of
//! each total degree and therefore must be exact (cohomology of a
//! coherent sheaf on projective space is finite dimensional); the oracle
//! asserts that instead of assuming it. The remaining patterns are
//! finite and counted by stars and bars.

use std::collections::BTreeMap;

use super::linalg::{binom, rank};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Sign {
    Neg,
    Zero,
    Pos,
}

struct PatternData {
    neg: i64,
    pos: i64,
    /// Cohomology of the pattern complex by total degree.
    h: Vec<u64>,
}

/// Precomputed weight-pattern cohomology for a fixed `(n, p)`; evaluate
/// at any twist with [`CechOracle::cohomology`].
pub struct CechOracle {
    patterns: Vec<PatternData>,
}

impl CechOracle {
    pub fn new(n: usize, p: usize) -> Self {
        assert!(p <= n, "the sheaf is zero for p > n");
        assert!(n + 1 <= 8, "oracle is meant for small n");
        let coords = n + 1;
        let mut patterns = Vec::new();
        for code in 0..3usize.pow(coords as u32) {
            let mut rem = code;
            let signs: Vec<Sign> = (0..coords)
                .map(|_| {
                    let s = match rem % 3 {
                        0 => Sign::Neg,
                        1 => Sign::Zero,
                        _ => Sign::Pos,
                    };
                    rem /= 3;
                    s
                })
                .collect();
            let h = pattern_cohomology(n, p, &signs);
            let neg = signs.iter().filter(|s| **s == Sign::Neg).count() as i64;
            let pos = signs.iter().filter(|s| **s == Sign::Pos).count() as i64;
            if neg > 0 && pos > 0 {
                assert!(
                    h.iter().all(|&x| x == 0),
                    "weight pattern with infinitely many weights has nonzero cohomology"
                );
                continue;
            }
            if h.iter().any(|&x| x > 0) {
                patterns.push(PatternData { neg, pos, h });
            }
        }
        Self { patterns }
    }

    /// `H^q(P^n, Ω^p(t))` as a map `q -> dimension`.
    pub fn cohomology(&self, t: i64) -> BTreeMap<i64, u64> {
        let mut out: BTreeMap<i64, u64> = BTreeMap::new();
        for pat in &self.patterns {
            let count = weight_count(pat.neg, pat.pos, t);
            if count == 0 {
                continue;
            }
            for (q, &hq) in pat.h.iter().enumerate() {
                if hq > 0 {
                    *out.entry(q as i64).or_insert(0) += hq * count;
                }
            }
        }
        out
    }
}

/// Number of weights with the given sign pattern and total degree `t`:
/// `neg` coordinates `<= -1`, `pos` coordinates `>= 1`, the rest zero.
fn weight_count(neg: i64, pos: i64, t: i64) -> u64 {
    match (neg, pos) {
        (0, 0) => u64::from(t == 0),
        (0, b) => {
            let slack = t - b;
            if slack < 0 {
                0
            } else {
                binom(slack + b - 1, b - 1)
            }
        }
        (a, 0) => {
            let slack = -t - a;
            if slack < 0 {
                0
            } else {
                binom(slack + a - 1, a - 1)
            }
        }
        _ => unreachable!("mixed patterns are filtered out at construction"),
    }
}

/// Cohomology of one weight piece of the double complex, by total degree
/// `m = (|S| - 1) + (p - |I|)`.
fn pattern_cohomology(n: usize, p: usize, signs: &[Sign]) -> Vec<u64> {
    let coords = n + 1;
    let admissible = |s_mask: u32, i_mask: u32| -> bool {
        (0..coords).all(|i| {
            if s_mask >> i & 1 == 1 {
                return true;
            }
            match signs[i] {
                Sign::Pos => true,
                Sign::Zero => i_mask >> i & 1 == 0,
                Sign::Neg => false,
            }
        })
    };

    let max_deg = n + p;
    let mut basis: Vec<Vec<(u32, u32)>> = vec![Vec::new(); max_deg + 2];
    let mut index: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    for s_mask in 1u32..1 << coords {
        let k = s_mask.count_ones() as usize - 1;
        for i_mask in 0u32..1 << coords {
            let isz = i_mask.count_ones() as usize;
            if isz > p || !admissible(s_mask, i_mask) {
                continue;
            }
            let m = k + (p - isz);
            index.insert((s_mask, i_mask), basis[m].len());
            basis[m].push((s_mask, i_mask));
        }
    }

    // Total differential: Čech restriction plus (-1)^k times the Euler
    // contraction. Both targets of a basis vector stay admissible (the
    // chart condition only relaxes), so the index lookups are total.
    let mut diffs: Vec<Vec<Vec<i128>>> = Vec::with_capacity(max_deg + 1);
    for m in 0..=max_deg {
        let rows = basis[m + 1].len();
        let cols = basis[m].len();
        let mut mat = vec![vec![0i128; cols]; rows];
        for (cidx, &(s_mask, i_mask)) in basis[m].iter().enumerate() {
            let k = s_mask.count_ones() as usize - 1;
            for j in 0..coords {
                if s_mask >> j & 1 == 1 {
                    continue;
                }
                let s2 = s_mask | 1 << j;
                let below = (s2 & ((1u32 << j) - 1)).count_ones();
                let sign = if below % 2 == 0 { 1 } else { -1 };
                let ridx = index[&(s2, i_mask)];
                mat[ridx][cidx] += sign;
            }
            let koszul_sign = if k % 2 == 0 { 1 } else { -1 };
            let mut position = 0;
            for i in 0..coords {
                if i_mask >> i & 1 == 0 {
                    continue;
                }
                let i2 = i_mask & !(1 << i);
                let sign = if position % 2 == 0 { 1 } else { -1 };
                let ridx = index[&(s_mask, i2)];
                mat[ridx][cidx] += koszul_sign * sign;
                position += 1;
            }
        }
        diffs.push(mat);
    }

    // d ∘ d = 0, or the sign conventions are broken.
    for m in 0..max_deg {
        let a = &diffs[m + 1];
        let b = &diffs[m];
        let rows = basis[m + 2].len();
        let mid = basis[m + 1].len();
        let cols = basis[m].len();
        for r in 0..rows {
            for c in 0..cols {
                let mut acc: i128 = 0;
                for x in 0..mid {
                    acc += a[r][x] * b[x][c];
                }
                assert_eq!(acc, 0, "total differential does not square to zero");
            }
        }
    }

    let ranks: Vec<usize> = diffs.iter().map(|m| rank(m)).collect();
    (0..=max_deg)
        .map(|m| {
            let dim = basis[m].len();
            let out = ranks[m];
            let incoming = if m == 0 { 0 } else { ranks[m - 1] };
            (dim - out - incoming) as u64
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_bundles_on_p1() {
        let oracle = CechOracle::new(1, 0);
        assert_eq!(oracle.cohomology(0), BTreeMap::from([(0, 1)]));
        assert_eq!(oracle.cohomology(3), BTreeMap::from([(0, 4)]));
        assert!(oracle.cohomology(-1).is_empty());
        assert_eq!(oracle.cohomology(-4), BTreeMap::from([(1, 3)]));
    }

    #[test]
    fn cotangent_on_p1_and_p2() {
        let oracle = CechOracle::new(1, 1);
        // Ω^1_{P^1} = O(-2).
        assert_eq!(oracle.cohomology(0), BTreeMap::from([(1, 1)]));
        assert_eq!(oracle.cohomology(-2), BTreeMap::from([(1, 3)]));
        assert_eq!(oracle.cohomology(2), BTreeMap::from([(0, 1)]));

        let oracle = CechOracle::new(2, 1);
        assert_eq!(oracle.cohomology(0), BTreeMap::from([(1, 1)]));
        assert!(oracle.cohomology(1).is_empty());
        assert_eq!(oracle.cohomology(3), BTreeMap::from([(0, 8)]));
    }

    #[test]
    fn canonical_bundle_of_p2() {
        let oracle = CechOracle::new(2, 2);
        assert_eq!(oracle.cohomology(0), BTreeMap::from([(2, 1)]));
    }
}
