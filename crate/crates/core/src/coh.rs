//! Exact cohomology of twisted differential forms on projective space.
//!
//! The only sheaves handled here are the `Ω^p(t)` on some `P^n` (with
//! `p = 0` giving line bundles). Their hypercohomology is given by Bott's
//! formula, which is a closed form in binomial coefficients; on top of it
//! sit the handful of `RHom` computations that blow-up decompositions
//! need: Homs out of pulled-back line bundles into truncations of the
//! pulled-back skyscraper, Homs between exceptional-divisor pushforwards,
//! and the Grothendieck-duality closed form relating a divisor pushforward
//! to the skyscraper pullback.

use serde::Serialize;
use thiserror::Error;

use crate::graded::GradedDimension;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CohError {
    #[error("form degree {form_degree} out of range on P^{ambient} (expected 0..={ambient})")]
    FormDegreeOutOfRange { ambient: u32, form_degree: u32 },
    #[error("truncation level {level} out of range for a blow-up of an {ambient}-fold (expected 0..={max})")]
    TruncationLevelOutOfRange { ambient: u32, level: u32, max: u32 },
    #[error("ambient dimension {ambient} too small: {needed}")]
    AmbientTooSmall { ambient: u32, needed: &'static str },
}

/// The symbol `Ω^p_{P^n}(t)`; `p = 0` means the line bundle `O(t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TwistedForm {
    ambient: u32,
    form_degree: u32,
    twist: i64,
}

impl TwistedForm {
    /// Rejects `p` outside `0..=n`, where the sheaf would be zero.
    pub fn new(ambient: u32, form_degree: u32, twist: i64) -> Result<Self, CohError> {
        if form_degree > ambient {
            return Err(CohError::FormDegreeOutOfRange {
                ambient,
                form_degree,
            });
        }
        Ok(Self {
            ambient,
            form_degree,
            twist,
        })
    }

    pub fn ambient(&self) -> u32 {
        self.ambient
    }

    pub fn form_degree(&self) -> u32 {
        self.form_degree
    }

    pub fn twist(&self) -> i64 {
        self.twist
    }
}

impl std::fmt::Display for TwistedForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.form_degree == 0 {
            write!(f, "O({}) on P^{}", self.twist, self.ambient)
        } else {
            write!(
                f,
                "Ω^{}({}) on P^{}",
                self.form_degree, self.twist, self.ambient
            )
        }
    }
}

/// Binomial coefficient with the convention `C(a, b) = 0` when `b < 0`
/// or `a < b`.
pub(crate) fn binom(a: i64, b: i64) -> u64 {
    if b < 0 || a < b {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc
            .checked_mul((a - i) as u128)
            .expect("binomial coefficient overflow");
        acc /= (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial coefficient overflow")
}

/// `RΓ(P^n, Ω^p(t))` by Bott's formula. The result is concentrated in at
/// most one degree: 0 when `t > p`, `p` when `t = 0`, `n` when `t < p - n`.
pub fn bott_cohomology(form: &TwistedForm) -> GradedDimension {
    let n = i64::from(form.ambient);
    let p = i64::from(form.form_degree);
    let t = form.twist;
    if t > p {
        GradedDimension::concentrated(0, binom(t + n - p, t) * binom(t - 1, p))
    } else if t == 0 {
        GradedDimension::concentrated(p, 1)
    } else if t < p - n {
        GradedDimension::concentrated(n, binom(p - t, -t) * binom(-t - 1, n - p))
    } else {
        GradedDimension::zero()
    }
}

/// `RΓ(P^n, O(d))`: `{0: C(n+d, n)}` for `d >= 0`, `{n: C(-d-1, n)}` for
/// `d <= -n-1`, zero in between.
pub fn rgamma_line(n: u32, d: i64) -> GradedDimension {
    bott_cohomology(&TwistedForm::new(n, 0, d).expect("p = 0 is always valid"))
}

/// `RHom(O_x, O_x)` for a point on a smooth `n`-fold: the exterior algebra
/// on the tangent space, `{i: C(n, i)}` for `0 <= i <= n` (Koszul
/// resolution of the skyscraper).
pub fn ext_skyscraper(n: u32) -> GradedDimension {
    GradedDimension::from_entries((0..=i64::from(n)).map(|i| (i, binom(i64::from(n), i))))
}

/// Cohomology sheaves of the derived pullback of a point's skyscraper to
/// the blow-up of that point on an `n`-fold: `H^{-k} = j_*(Ω^k_{P^{n-1}}(k))`
/// for `k = 0..n-1`, pushed from the exceptional divisor.
pub fn pullback_skyscraper_cohomology(n: u32) -> Vec<(u32, TwistedForm)> {
    assert!(n >= 1, "a blow-up of a point needs ambient dimension >= 1");
    (0..n)
        .map(|k| {
            (
                k,
                TwistedForm::new(n - 1, k, i64::from(k)).expect("k <= n-1"),
            )
        })
        .collect()
}

/// `RHom_Y(π*L, τ_{>=-k}(π*O_x))` for any line bundle `L` on the blown-up
/// `n`-fold: sheaf by sheaf this is `⊕_{m=0..k} RΓ(P^{n-1}, Ω^m(m))[m]`,
/// and by the Bott dichotomy only the `m = 0` term survives, giving `k[0]`.
pub fn rhom_pullback_to_truncation(n: u32, k: u32) -> Result<GradedDimension, CohError> {
    if n < 1 {
        return Err(CohError::AmbientTooSmall {
            ambient: n,
            needed: "blow-up of a point needs n >= 1",
        });
    }
    if k > n - 1 {
        return Err(CohError::TruncationLevelOutOfRange {
            ambient: n,
            level: k,
            max: n - 1,
        });
    }
    let mut acc = GradedDimension::zero();
    for m in 0..=k {
        let form = TwistedForm::new(n - 1, m, i64::from(m)).expect("m <= n-1");
        acc = acc.sum(&bott_cohomology(&form).shift(i64::from(m)));
    }
    Ok(acc)
}

/// `RHom_Y(j_*O_E(l), j_*Ω^m(m))` on the blow-up of a point of an
/// `n`-fold, where `j: E = P^{n-1} -> Y` is the exceptional divisor.
///
/// Divisor restriction gives `j^*j_*O(l) = O(l) ⊕ O(l+1)[1]`, so by
/// adjunction the value is
/// `RΓ(Ω^m(m-l)) ⊕ RΓ(Ω^m(m-l-1))[-1]` on `P^{n-1}`.
pub fn rhom_exc_divisor(n: u32, l: i64, m: u32) -> Result<GradedDimension, CohError> {
    if n < 2 {
        return Err(CohError::AmbientTooSmall {
            ambient: n,
            needed: "the exceptional divisor computation needs n >= 2",
        });
    }
    if m > n - 1 {
        return Err(CohError::FormDegreeOutOfRange {
            ambient: n - 1,
            form_degree: m,
        });
    }
    let a = bott_cohomology(&TwistedForm::new(n - 1, m, i64::from(m) - l)?);
    let b = bott_cohomology(&TwistedForm::new(n - 1, m, i64::from(m) - l - 1)?);
    Ok(a.sum(&b.shift(-1)))
}

/// `RHom_Y(j_*O_E(l), π*O_x)` on the blow-up of a point of an `n`-fold.
///
/// Relative duality along `π` (with `ω_π = O_Y((n-1)E)` folded in) reduces
/// this to `RΓ(P^{n-1}, O(l-n+1))^∨ ⊗ RHom(O_x, O_x)`; the line bundle is
/// acyclic exactly for `l` in `0..=n-2`.
pub fn rhom_divisor_to_skyscraper_pullback(n: u32, l: i64) -> GradedDimension {
    assert!(n >= 1, "a blow-up of a point needs ambient dimension >= 1");
    rgamma_line(n - 1, l - i64::from(n) + 1)
        .dual()
        .tensor(&ext_skyscraper(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gd(entries: &[(i64, u64)]) -> GradedDimension {
        GradedDimension::from_entries(entries.iter().copied())
    }

    #[test]
    fn form_degree_validation() {
        assert!(TwistedForm::new(2, 3, 0).is_err());
        assert!(TwistedForm::new(0, 0, -5).is_ok());
    }

    #[test]
    fn bott_dichotomy_examples() {
        // Ω^1(1) on P^2 is acyclic; Ω^0(0) on P^3 is k[0].
        let f = TwistedForm::new(2, 1, 1).unwrap();
        assert!(bott_cohomology(&f).is_zero());
        let f = TwistedForm::new(3, 0, 0).unwrap();
        assert_eq!(bott_cohomology(&f), GradedDimension::unit());
    }

    #[test]
    fn bott_top_forms_and_serre_range() {
        let f = TwistedForm::new(2, 2, 0).unwrap();
        assert_eq!(bott_cohomology(&f), gd(&[(2, 1)]));
        let f = TwistedForm::new(2, 0, -3).unwrap();
        assert_eq!(bott_cohomology(&f), gd(&[(2, 1)]));
    }

    #[test]
    fn bott_h0_of_twisted_cotangent() {
        // h^0(P^2, Ω^1(3)) = 8, from the Euler sequence: 3·6 - 10.
        let f = TwistedForm::new(2, 1, 3).unwrap();
        assert_eq!(bott_cohomology(&f), gd(&[(0, 8)]));
    }

    #[test]
    fn bott_at_most_one_degree() {
        for n in 0..=4u32 {
            for p in 0..=n {
                for t in -8..=8 {
                    let f = TwistedForm::new(n, p, t).unwrap();
                    assert!(bott_cohomology(&f).support_len() <= 1, "{f}");
                }
            }
        }
    }

    #[test]
    fn line_bundle_cohomology() {
        assert!(rgamma_line(1, -1).is_zero());
        assert_eq!(rgamma_line(2, 2), gd(&[(0, 6)]));
        assert!(rgamma_line(3, -1).is_zero());
        assert_eq!(rgamma_line(1, -2), gd(&[(1, 1)]));
        // P^0: every twist is the structure sheaf of the point.
        assert_eq!(rgamma_line(0, 5), GradedDimension::unit());
        assert_eq!(rgamma_line(0, -5), GradedDimension::unit());
    }

    #[test]
    fn skyscraper_ext_algebra() {
        assert_eq!(ext_skyscraper(0), GradedDimension::unit());
        assert_eq!(ext_skyscraper(1), gd(&[(0, 1), (1, 1)]));
        assert_eq!(ext_skyscraper(3), gd(&[(0, 1), (1, 3), (2, 3), (3, 1)]));
        assert_eq!(ext_skyscraper(4).euler_char(), 0);
    }

    #[test]
    fn pullback_cohomology_sheaves() {
        let sheaves = pullback_skyscraper_cohomology(2);
        assert_eq!(
            sheaves,
            vec![
                (0, TwistedForm::new(1, 0, 0).unwrap()),
                (1, TwistedForm::new(1, 1, 1).unwrap()),
            ]
        );
        assert_eq!(pullback_skyscraper_cohomology(3).len(), 3);
        for n in 1..=8 {
            assert_eq!(pullback_skyscraper_cohomology(n).len(), n as usize);
        }
    }

    #[test]
    fn truncation_homs_are_one_dimensional() {
        assert_eq!(
            rhom_pullback_to_truncation(4, 0).unwrap(),
            GradedDimension::unit()
        );
        assert_eq!(
            rhom_pullback_to_truncation(4, 2).unwrap(),
            GradedDimension::unit()
        );
        assert_eq!(
            rhom_pullback_to_truncation(2, 0).unwrap(),
            GradedDimension::unit()
        );
        assert!(matches!(
            rhom_pullback_to_truncation(3, 3),
            Err(CohError::TruncationLevelOutOfRange { .. })
        ));
    }

    #[test]
    fn exceptional_divisor_homs() {
        assert!(rhom_exc_divisor(4, 0, 2).unwrap().is_zero());
        assert!(rhom_exc_divisor(4, 1, 3).unwrap().is_zero());
        // Outside the vanishing range m >= l+2 the value is nonzero; both
        // boundary cases matter.
        assert_eq!(rhom_exc_divisor(3, 0, 0).unwrap(), GradedDimension::unit());
        assert_eq!(rhom_exc_divisor(3, 1, 2).unwrap(), gd(&[(3, 1)]));
        assert!(rhom_exc_divisor(3, 0, 3).is_err());
    }

    #[test]
    fn divisor_to_skyscraper_homs() {
        assert!(rhom_divisor_to_skyscraper_pullback(3, 0).is_zero());
        assert!(rhom_divisor_to_skyscraper_pullback(3, 1).is_zero());
        assert_eq!(
            rhom_divisor_to_skyscraper_pullback(3, 2),
            gd(&[(0, 1), (1, 3), (2, 3), (3, 1)])
        );
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(0, 0), 1);
        assert_eq!(binom(3, 5), 0);
        assert_eq!(binom(3, -1), 0);
        assert_eq!(binom(-2, 1), 0);
    }
}
