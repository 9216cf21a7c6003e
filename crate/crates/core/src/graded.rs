//! Graded dimensions: the numerical shadow of a bounded complex of vector
//! spaces, recording only `degree -> dimension`.
//!
//! Every `RHom` and `RΓ` value computed by the other modules lands here.
//! The grading is cohomological, so the one-dimensional space in degree
//! zero is written `k[0]`, and shifting by `[1]` moves it to degree `-1`.

use std::collections::BTreeMap;
use std::fmt;

/// Finitely supported map from cohomological degree to multiplicity.
///
/// Zero multiplicities are never stored, so equality is plain key-by-key
/// equality and the zero object is the empty map (printed `0`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedDimension {
    entries: BTreeMap<i64, u64>,
}

impl GradedDimension {
    /// The zero graded dimension.
    pub fn zero() -> Self {
        Self::default()
    }

    /// `k[0]`, the unit for [`GradedDimension::tensor`].
    pub fn unit() -> Self {
        Self::concentrated(0, 1)
    }

    /// A single multiplicity in a single degree. A zero multiplicity
    /// collapses to the zero object.
    pub fn concentrated(degree: i64, multiplicity: u64) -> Self {
        let mut entries = BTreeMap::new();
        if multiplicity != 0 {
            entries.insert(degree, multiplicity);
        }
        Self { entries }
    }

    /// Build from `(degree, multiplicity)` pairs, summing duplicates and
    /// dropping zeros.
    pub fn from_entries<I: IntoIterator<Item = (i64, u64)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (d, m) in iter {
            out.add_in_place(d, m);
        }
        out
    }

    fn add_in_place(&mut self, degree: i64, multiplicity: u64) {
        if multiplicity == 0 {
            return;
        }
        let slot = self.entries.entry(degree).or_insert(0);
        *slot = slot.checked_add(multiplicity).expect("multiplicity overflow");
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Multiplicity in the given degree (0 if absent).
    pub fn multiplicity(&self, degree: i64) -> u64 {
        self.entries.get(&degree).copied().unwrap_or(0)
    }

    /// Iterate over the support in ascending degree order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.entries.iter().map(|(&d, &m)| (d, m))
    }

    /// Total multiplicity over all degrees.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Number of degrees with nonzero multiplicity.
    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    /// The shift `[s]`: `result[d] = self[d + s]`, so `k[0].shift(1)`
    /// lives in degree `-1`. Total multiplicity is preserved.
    pub fn shift(&self, s: i64) -> Self {
        Self {
            entries: self.entries.iter().map(|(&d, &m)| (d - s, m)).collect(),
        }
    }

    /// Convolution product: `result[d] = Σ_i self[i] · other[d - i]`.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (dg, mg) in self.iter() {
            for (dh, mh) in other.iter() {
                out.add_in_place(dg + dh, mg.checked_mul(mh).expect("multiplicity overflow"));
            }
        }
        out
    }

    /// Degree reversal: `result[d] = self[-d]`.
    pub fn dual(&self) -> Self {
        Self {
            entries: self.entries.iter().map(|(&d, &m)| (-d, m)).collect(),
        }
    }

    /// Pointwise (direct) sum.
    pub fn sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, m) in other.iter() {
            out.add_in_place(d, m);
        }
        out
    }

    /// Alternating sum `Σ (-1)^d · self[d]`.
    pub fn euler_char(&self) -> i64 {
        self.iter()
            .map(|(d, m)| {
                let m = i64::try_from(m).expect("multiplicity too large for euler characteristic");
                if d.rem_euclid(2) == 0 {
                    m
                } else {
                    -m
                }
            })
            .sum()
    }

    /// Machine rendering: degrees as strings, e.g. `{"0": 1}`.
    pub fn to_string_map(&self) -> BTreeMap<String, u64> {
        self.iter().map(|(d, m)| (d.to_string(), m)).collect()
    }
}

impl fmt::Display for GradedDimension {
    /// Canonical text rendering: `0`, `k[0]`, `k[0] ⊕ k^3[-1]`,
    /// in descending degree order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&d, &m) in self.entries.iter().rev() {
            if !first {
                write!(f, " ⊕ ")?;
            }
            first = false;
            if m == 1 {
                write!(f, "k[{d}]")?;
            } else {
                write!(f, "k^{m}[{d}]")?;
            }
        }
        Ok(())
    }
}

impl serde::Serialize for GradedDimension {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serde::Serialize::serialize(&self.to_string_map(), serializer)
    }
}
