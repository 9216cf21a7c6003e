//! Exceptional-collection calculus: graded Gram matrices of collections,
//! K-theoretic mutations and dual decompositions, the dual of the
//! Beilinson collection on projective space, and the builder that
//! assembles the semiorthogonal decomposition of a blow-up of projective
//! space in up to three disjoint centers.
//!
//! A Gram matrix here never guesses: each pairwise `RHom` entry is either
//! `Computed` from the cohomology engine, `AssertedZero` with a citation
//! tag naming the structural fact that forces it, or `Unknown`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::coh::{
    rgamma_line, rhom_pullback_to_truncation, bott_cohomology, TwistedForm,
};
use crate::graded::GradedDimension;
use crate::intmat;
use crate::quiver::{star_quiver, Quiver};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SodError {
    #[error("blow-up decompositions need ambient dimension at least 2, got {base_dim}")]
    BaseDimTooSmall { base_dim: u32 },
    #[error("a blow-up level needs at least one center")]
    NoCenters,
    #[error("at most three centers are allowed per blow-up, got {count}")]
    TooManyCenters { count: usize },
    #[error(
        "unsupported center geometry: a {center_dim}-dimensional center in a {base_dim}-fold has codimension {codim}; only points and codimension-2 centers are handled"
    )]
    UnsupportedCenter {
        base_dim: u32,
        center_dim: u32,
        codim: u32,
    },
    #[error("mutation index {index} out of range for a collection of size {size}")]
    MutationIndexOutOfRange { index: usize, size: usize },
    #[error("mutation broke unit upper-triangularity at index {index}; the sign convention is wrong")]
    TriangularityLost { index: usize },
    #[error("basis classes are not unimodular (determinant {det})")]
    NotUnimodular { det: i128 },
    #[error("invalid Gram matrix: {0}")]
    InvalidGram(&'static str),
    #[error("Gram matrix does not have the blow-up collection shape: {0}")]
    GramShape(String),
    #[error("quiver grouping invariant violated: {0}")]
    GroupingInvariant(String),
}

/// Citation tags used by `AssertedZero` entries.
pub mod citations {
    /// Semiorthogonality of the blow-up decomposition (Orlov).
    pub const ORLOV_SOD: &str = "orlov-blowup-sod";
    /// Semiorthogonality of the mutated (dual) truncation blocks.
    pub const DUAL_ORLOV: &str = "dual-orlov-truncations";
    /// Semiorthogonality inside the dual collection on the center.
    pub const DUAL_COLLECTION: &str = "dual-collection-order";
    /// Blocks carried over a deeper blow-up level after mutation through
    /// the preserved line bundles.
    pub const MUTATION_CARRY: &str = "mutation-through-preserved-bundles";
}

/// Label of an object (or opaque residual subcategory) in a collection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ObjectLabel {
    /// The pulled-back residual subcategory, kept opaque.
    Residual,
    /// `O(d)` in an ambient Beilinson-style collection.
    Twist(i64),
    /// The `i`-th exceptional line bundle of a blow-up decomposition.
    LineBundle(usize),
    /// Truncation `τ_{>=-k}` of the pulled-back skyscraper of a point
    /// center.
    PointTruncation { center: usize, level: usize },
    /// Pushforward `j_* p^*` of the `i`-th dual object on a
    /// codimension-2 center.
    DivisorDual { center: usize, index: usize },
}

impl ObjectLabel {
    fn center(&self) -> Option<usize> {
        match *self {
            ObjectLabel::PointTruncation { center, .. }
            | ObjectLabel::DivisorDual { center, .. } => Some(center),
            _ => None,
        }
    }

    fn s_level(&self) -> Option<usize> {
        match *self {
            ObjectLabel::PointTruncation { level, .. } => Some(level),
            ObjectLabel::DivisorDual { index, .. } => Some(index),
            _ => None,
        }
    }
}

impl fmt::Display for ObjectLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ObjectLabel::Residual => write!(f, "pi*A"),
            ObjectLabel::Twist(d) => write!(f, "O({d})"),
            ObjectLabel::LineBundle(i) => write!(f, "L{i}"),
            ObjectLabel::PointTruncation { center, level } => {
                write!(f, "S{level}(pt{center})")
            }
            ObjectLabel::DivisorDual { center, index } => write!(f, "S{index}(z{center})"),
        }
    }
}

impl Serialize for ObjectLabel {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// One entry of a graded Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum GramEntry {
    Computed { value: GradedDimension },
    AssertedZero { citation: &'static str },
    Unknown,
}

impl GramEntry {
    pub fn computed(value: GradedDimension) -> Self {
        GramEntry::Computed { value }
    }

    pub fn is_zero_like(&self) -> bool {
        match self {
            GramEntry::Computed { value } => value.is_zero(),
            GramEntry::AssertedZero { .. } => true,
            GramEntry::Unknown => false,
        }
    }
}

/// Square matrix of graded-Hom entries over an ordered list of labels.
///
/// Invariants: labels are unique; diagonal entries of object labels are
/// `Computed(k[0])` (exceptionality); everything strictly below the
/// diagonal is zero, either computed or asserted with a citation. The
/// opaque `Residual` label is exempt from the diagonal rule (it is a
/// subcategory, not an exceptional object) and carries `Unknown` there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedGram {
    labels: Vec<ObjectLabel>,
    entries: Vec<Vec<GramEntry>>,
}

impl GradedGram {
    pub fn new(labels: Vec<ObjectLabel>, entries: Vec<Vec<GramEntry>>) -> Result<Self, SodError> {
        let gram = Self { labels, entries };
        gram.validate()?;
        Ok(gram)
    }

    pub fn validate(&self) -> Result<(), SodError> {
        let n = self.labels.len();
        if self.entries.len() != n || self.entries.iter().any(|row| row.len() != n) {
            return Err(SodError::InvalidGram("entry matrix is not square over the labels"));
        }
        for i in 0..n {
            for j in 0..n {
                if self.labels[i] == self.labels[j] && i != j {
                    return Err(SodError::InvalidGram("labels are not unique"));
                }
            }
        }
        for (i, label) in self.labels.iter().enumerate() {
            match (label, &self.entries[i][i]) {
                (ObjectLabel::Residual, _) => {}
                (_, GramEntry::Computed { value }) if *value == GradedDimension::unit() => {}
                _ => {
                    return Err(SodError::InvalidGram(
                        "diagonal of an object label must be the computed value k[0]",
                    ))
                }
            }
        }
        for i in 0..n {
            for j in 0..i {
                if !self.entries[i][j].is_zero_like() {
                    return Err(SodError::InvalidGram(
                        "below-diagonal entries must be computed or asserted zero",
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[ObjectLabel] {
        &self.labels
    }

    pub fn entry(&self, row: usize, col: usize) -> &GramEntry {
        &self.entries[row][col]
    }

    pub fn position_of(&self, label: &ObjectLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Compact text table: computed values are printed, asserted zeros as
    /// `0*`, unknowns as `?`.
    pub fn render_table(&self) -> String {
        let mut cells: Vec<Vec<String>> = Vec::with_capacity(self.size() + 1);
        let mut header = vec![String::new()];
        header.extend(self.labels.iter().map(|l| l.to_string()));
        cells.push(header);
        for (i, row) in self.entries.iter().enumerate() {
            let mut line = vec![self.labels[i].to_string()];
            line.extend(row.iter().map(|e| match e {
                GramEntry::Computed { value } => value.to_string(),
                GramEntry::AssertedZero { .. } => "0*".to_string(),
                GramEntry::Unknown => "?".to_string(),
            }));
            cells.push(line);
        }
        let cols = cells[0].len();
        let widths: Vec<usize> = (0..cols)
            .map(|c| cells.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in &cells {
            for (c, cell) in row.iter().enumerate() {
                if c > 0 {
                    out.push_str("  ");
                }
                out.push_str(cell);
                for _ in cell.chars().count()..widths[c] {
                    out.push(' ');
                }
            }
            while out.ends_with(' ') {
                out.pop();
            }
            out.push('\n');
        }
        out
    }
}

/// Gram matrix of the Beilinson collection `<O, O(1), ..., O(n)>` on
/// `P^n`: entry `(i, j)` is `RΓ(P^n, O(j - i))` for `i <= j`, computed
/// zero below the diagonal.
pub fn beilinson_gram(n: u32) -> GradedGram {
    let size = (n + 1) as usize;
    let labels: Vec<ObjectLabel> = (0..=n as i64).map(ObjectLabel::Twist).collect();
    let entries: Vec<Vec<GramEntry>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| GramEntry::computed(rgamma_line(n, j as i64 - i as i64)))
                .collect()
        })
        .collect();
    GradedGram::new(labels, entries).expect("Beilinson Gram satisfies the invariants")
}

/// The right dual of the Beilinson collection on `P^m`, with the shift
/// normalization `Ě_i = Ω^i(i)[i]`, listed in the dual order (descending
/// form degree), together with its verification matrix.
#[derive(Clone, Debug)]
pub struct DualCollection {
    /// `(Ω^i(i), i)` for `i = m, ..., 0`; the integer is the shift `[i]`.
    pub objects: Vec<(TwistedForm, i64)>,
    verification: Vec<Vec<GradedDimension>>,
}

impl DualCollection {
    /// `V(i, j) = RHom(O(i), Ω^j(j)[j]) = RΓ(Ω^j(j - i))[j]`, indexed by
    /// the original twist `i` and the dual object's form degree `j`.
    pub fn verification(&self, i: usize, j: usize) -> &GradedDimension {
        &self.verification[i][j]
    }

    /// True when `V(i, j)` is `k[0]` exactly on the diagonal and zero off
    /// it: the duality pairing in degree zero.
    pub fn is_identity_pattern(&self) -> bool {
        let m = self.verification.len();
        (0..m).all(|i| {
            (0..m).all(|j| {
                let v = &self.verification[i][j];
                if i == j {
                    *v == GradedDimension::unit()
                } else {
                    v.is_zero()
                }
            })
        })
    }
}

/// Right dual of `<O, ..., O(m)>` on `P^m`.
pub fn dual_collection_pm(m: u32) -> DualCollection {
    let objects = (0..=m)
        .rev()
        .map(|i| {
            (
                TwistedForm::new(m, i, i64::from(i)).expect("i <= m"),
                i64::from(i),
            )
        })
        .collect();
    let size = (m + 1) as usize;
    let verification = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    let form = TwistedForm::new(m, j as u32, j as i64 - i as i64)
                        .expect("j <= m");
                    bott_cohomology(&form).shift(j as i64)
                })
                .collect()
        })
        .collect();
    DualCollection {
        objects,
        verification,
    }
}

/// K-theoretic shadow of an exceptional collection: the Euler pairing
/// Gram matrix (unit upper-triangular) together with the classes of the
/// objects in a fixed ambient basis (rows; unimodular as a matrix).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerGram {
    gram: Vec<Vec<i64>>,
    basis_classes: Vec<Vec<i64>>,
}

impl EulerGram {
    pub fn new(gram: Vec<Vec<i64>>, basis_classes: Vec<Vec<i64>>) -> Result<Self, SodError> {
        let g = Self {
            gram,
            basis_classes,
        };
        g.validate(usize::MAX)?;
        Ok(g)
    }

    /// Identity classes over the collection's own span.
    pub fn from_gram(gram: Vec<Vec<i64>>) -> Result<Self, SodError> {
        let n = gram.len();
        Self::new(gram, intmat::identity(n))
    }

    fn validate(&self, mutation_index: usize) -> Result<(), SodError> {
        let n = self.gram.len();
        if self.gram.iter().any(|row| row.len() != n) {
            return Err(SodError::InvalidGram("Euler Gram matrix is not square"));
        }
        for i in 0..n {
            for j in 0..=i {
                let expected_unit = i == j;
                let entry = self.gram[i][j];
                if expected_unit && entry != 1 {
                    return Err(if mutation_index == usize::MAX {
                        SodError::InvalidGram("diagonal of an Euler Gram must be 1")
                    } else {
                        SodError::TriangularityLost {
                            index: mutation_index,
                        }
                    });
                }
                if !expected_unit && entry != 0 {
                    return Err(if mutation_index == usize::MAX {
                        SodError::InvalidGram("Euler Gram must vanish below the diagonal")
                    } else {
                        SodError::TriangularityLost {
                            index: mutation_index,
                        }
                    });
                }
            }
        }
        if self.basis_classes.len() != n
            || self.basis_classes.iter().any(|row| row.len() != n)
        {
            return Err(SodError::InvalidGram(
                "basis classes must form a square matrix over the collection",
            ));
        }
        let det = intmat::det(&self.basis_classes);
        if det != 1 && det != -1 {
            return Err(SodError::NotUnimodular { det });
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn basis_classes(&self) -> &[Vec<i64>] {
        &self.basis_classes
    }

    /// Congruence transform by `t` (columns are the new objects in the
    /// old collection basis), revalidating the invariants.
    fn transformed(&self, t: &[Vec<i64>], mutation_index: usize) -> Result<Self, SodError> {
        let tt = intmat::transpose(t);
        let gram = intmat::mat_mul(&intmat::mat_mul(&tt, &self.gram), t);
        let basis_classes = intmat::mat_mul(&tt, &self.basis_classes);
        let out = Self {
            gram,
            basis_classes,
        };
        out.validate(mutation_index)?;
        Ok(out)
    }
}

/// Right mutation at adjacent positions `(i, i+1)`: the objects swap and
/// the mutated class is `χ(E_i, E_{i+1}) [E_{i+1}] - [E_i]`.
pub fn k_mutation_right(g: &EulerGram, i: usize) -> Result<EulerGram, SodError> {
    let n = g.size();
    if i + 1 >= n {
        return Err(SodError::MutationIndexOutOfRange { index: i, size: n });
    }
    let a = g.gram[i][i + 1];
    let mut t = intmat::identity(n);
    t[i][i] = 0;
    t[i + 1][i] = 1;
    t[i][i + 1] = -1;
    t[i + 1][i + 1] = a;
    g.transformed(&t, i)
}

/// Left mutation at adjacent positions `(i, i+1)`: inverse of
/// [`k_mutation_right`]; the mutated class `χ(E_i, E_{i+1}) [E_i] -
/// [E_{i+1}]` moves to position `i`.
pub fn k_mutation_left(g: &EulerGram, i: usize) -> Result<EulerGram, SodError> {
    let n = g.size();
    if i + 1 >= n {
        return Err(SodError::MutationIndexOutOfRange { index: i, size: n });
    }
    let a = g.gram[i][i + 1];
    let mut t = intmat::identity(n);
    t[i][i] = a;
    t[i + 1][i] = -1;
    t[i][i + 1] = 1;
    t[i + 1][i + 1] = 0;
    g.transformed(&t, i)
}

/// The full dual-decomposition mutation sequence: mutate the last object
/// through everything before it, then the next-to-last through what
/// remains in front of it, and so on.
pub fn dual_decomposition_k(g: &EulerGram) -> Result<EulerGram, SodError> {
    let n = g.size();
    let mut out = g.clone();
    for dualized in 0..n.saturating_sub(1) {
        for i in (dualized..n - 1).rev() {
            out = k_mutation_left(&out, i)?;
        }
    }
    Ok(out)
}

/// Euler-pairing Gram of the Beilinson collection on `P^m`:
/// `χ(O(i), O(j)) = C(j - i + m, m)` for `i <= j`, zero below.
pub fn beilinson_euler_gram(m: u32) -> EulerGram {
    let size = (m + 1) as usize;
    let gram: Vec<Vec<i64>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    if j >= i {
                        crate::coh::binom(j as i64 - i as i64 + i64::from(m), i64::from(m)) as i64
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    EulerGram::from_gram(gram).expect("Beilinson Euler Gram satisfies the invariants")
}

/// A blow-up center.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Center {
    /// A point of the base.
    Point,
    /// A linear subspace of codimension two.
    LinearCodim2,
    /// The strict transform of a line in `P^3`, used above the first
    /// level of a threefold tower.
    StrictTransformLine,
    /// A general linear subspace of the stated dimension. Only dimensions
    /// with codimension 2 or n are supported; the rest are rejected so
    /// the obstruction is reported rather than silently bounded.
    Linear { dim: u32 },
}

/// Kind of center after geometry validation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum CenterClass {
    Point,
    Codim2,
}

pub(crate) fn center_class(n: u32, center: &Center) -> Result<CenterClass, SodError> {
    match *center {
        Center::Point => Ok(CenterClass::Point),
        Center::LinearCodim2 => Ok(CenterClass::Codim2),
        Center::StrictTransformLine => {
            if n == 3 {
                Ok(CenterClass::Codim2)
            } else {
                Err(SodError::UnsupportedCenter {
                    base_dim: n,
                    center_dim: 1,
                    codim: n.saturating_sub(1),
                })
            }
        }
        Center::Linear { dim } => {
            if dim >= n {
                return Err(SodError::UnsupportedCenter {
                    base_dim: n,
                    center_dim: dim,
                    codim: 0,
                });
            }
            let codim = n - dim;
            if dim == 0 {
                Ok(CenterClass::Point)
            } else if codim == 2 {
                Ok(CenterClass::Codim2)
            } else {
                Err(SodError::UnsupportedCenter {
                    base_dim: n,
                    center_dim: dim,
                    codim,
                })
            }
        }
    }
}

/// Gram matrix of the blow-up decomposition
/// `<pi*A, L_0, ..., L_{n-2}, {S_{n-2}}, ..., {S_0}>` for a blow-up of an
/// `n`-dimensional base in the given centers (first level of a tower).
///
/// Entries: line bundle pairs via `RΓ` of the twist difference; line
/// bundle to point truncation via the truncation Hom (always `k[0]`);
/// line bundle to divisor dual via the duality matrix on the center
/// (`δ_ij k[0]`); objects on disjoint exceptional divisors are computed
/// zero; the remaining forward Homs the construction does not determine
/// are `Unknown`; below-diagonal entries are asserted zero with the
/// citation naming the decomposition that forces them.
pub fn build_blowup_collection(n: u32, centers: &[Center]) -> Result<GradedGram, SodError> {
    build_blowup_collection_at_level(n, centers, 1)
}

/// Same construction for deeper tower levels: shapes and computed entries
/// are identical (the replayed Homs only depend on the ambient dimension
/// and the center kinds); zeros involving the residual cite the mutation
/// step instead of the base decomposition.
pub(crate) fn build_blowup_collection_at_level(
    n: u32,
    centers: &[Center],
    level: usize,
) -> Result<GradedGram, SodError> {
    if n < 2 {
        return Err(SodError::BaseDimTooSmall { base_dim: n });
    }
    if centers.is_empty() {
        return Err(SodError::NoCenters);
    }
    if centers.len() > 3 {
        return Err(SodError::TooManyCenters {
            count: centers.len(),
        });
    }
    let classes: Vec<CenterClass> = centers
        .iter()
        .map(|c| center_class(n, c))
        .collect::<Result<_, _>>()?;

    let bundles = (n - 1) as usize;
    let mut labels = vec![ObjectLabel::Residual];
    labels.extend((0..bundles).map(ObjectLabel::LineBundle));
    for k in (0..bundles).rev() {
        for (b, class) in classes.iter().enumerate() {
            labels.push(match class {
                CenterClass::Point => ObjectLabel::PointTruncation {
                    center: b,
                    level: k,
                },
                CenterClass::Codim2 => ObjectLabel::DivisorDual {
                    center: b,
                    index: k,
                },
            });
        }
    }

    let residual_citation = if level <= 1 {
        citations::ORLOV_SOD
    } else {
        citations::MUTATION_CARRY
    };
    let size = labels.len();
    let mut entries = vec![vec![GramEntry::Unknown; size]; size];
    for i in 0..size {
        for j in 0..size {
            entries[i][j] = blowup_entry(n, &labels[i], &labels[j], i, j, residual_citation)?;
        }
    }
    GradedGram::new(labels, entries)
}

fn blowup_entry(
    n: u32,
    row: &ObjectLabel,
    col: &ObjectLabel,
    i: usize,
    j: usize,
    residual_citation: &'static str,
) -> Result<GramEntry, SodError> {
    use ObjectLabel::*;
    if i == j {
        return Ok(match row {
            Residual => GramEntry::Unknown,
            _ => GramEntry::computed(GradedDimension::unit()),
        });
    }
    Ok(match (row, col) {
        (Twist(_), _) | (_, Twist(_)) => {
            return Err(SodError::GramShape(
                "ambient twists do not appear in blow-up collections".into(),
            ))
        }
        // Homs out of the opaque residual are not determined here.
        (Residual, _) => GramEntry::Unknown,
        // Zeros into the residual come from the decomposition order.
        (_, Residual) => GramEntry::AssertedZero {
            citation: residual_citation,
        },
        // Pullbacks of line bundles: fully faithful pullback, so the Hom
        // is global sections of the twist difference (zero below the
        // diagonal is a genuine computation here).
        (LineBundle(a), LineBundle(b)) => {
            GramEntry::computed(rgamma_line(n, *b as i64 - *a as i64))
        }
        // Any pulled-back line bundle against a skyscraper truncation.
        (LineBundle(_), PointTruncation { level, .. }) => GramEntry::computed(
            rhom_pullback_to_truncation(n, *level as u32)
                .expect("levels are within 0..n-1 by construction"),
        ),
        // Duality matrix on the codimension-2 center: the common twist of
        // the restricted collection cancels, leaving the Bott evaluation.
        (LineBundle(a), DivisorDual { index, .. }) => {
            let form = TwistedForm::new(n - 2, *index as u32, *index as i64 - *a as i64)
                .expect("index <= n-2 by construction");
            GramEntry::computed(bott_cohomology(&form).shift(*index as i64))
        }
        (PointTruncation { .. }, LineBundle(_)) => GramEntry::AssertedZero {
            citation: citations::DUAL_ORLOV,
        },
        (DivisorDual { .. }, LineBundle(_)) => GramEntry::AssertedZero {
            citation: citations::ORLOV_SOD,
        },
        // S-objects of distinct centers live on disjoint exceptional
        // divisors, so every Hom between them vanishes.
        (a, b) if a.center() != b.center() => GramEntry::computed(GradedDimension::zero()),
        // Within one center's block: the order gives asserted zeros
        // backwards; forward Homs are not pinned down and stay unknown.
        (PointTruncation { .. }, PointTruncation { .. }) if i > j => GramEntry::AssertedZero {
            citation: citations::DUAL_ORLOV,
        },
        (DivisorDual { .. }, DivisorDual { .. }) if i > j => GramEntry::AssertedZero {
            citation: citations::DUAL_COLLECTION,
        },
        (PointTruncation { .. }, PointTruncation { .. })
        | (DivisorDual { .. }, DivisorDual { .. }) => GramEntry::Unknown,
        (PointTruncation { .. }, DivisorDual { .. })
        | (DivisorDual { .. }, PointTruncation { .. }) => {
            unreachable!("one center has one kind, so mixed S-kinds never share a center")
        }
    })
}

/// One quiver-shaped group of a blow-up collection: a line bundle as the
/// source plus the matching S-object of every center.
#[derive(Clone, Debug)]
pub struct QuiverBlock {
    pub labels: Vec<ObjectLabel>,
    pub quiver: Quiver,
}

/// Split a blow-up Gram into its `n - 1` star-quiver groups, verifying
/// that within each group the only nonzero Homs are source-to-target
/// `k[0]`.
pub fn group_into_quivers(
    gram: &GradedGram,
    centers: usize,
    n: u32,
) -> Result<Vec<QuiverBlock>, SodError> {
    if n < 2 {
        return Err(SodError::BaseDimTooSmall { base_dim: n });
    }
    let bundles = (n - 1) as usize;
    let expected = 1 + bundles * (1 + centers);
    if gram.size() != expected {
        return Err(SodError::GramShape(format!(
            "expected {expected} labels for {centers} center(s) on a {n}-fold, found {}",
            gram.size()
        )));
    }
    let mut blocks = Vec::with_capacity(bundles);
    for group in 0..bundles {
        let k = bundles - 1 - group;
        let line_pos = 1 + k;
        if gram.labels()[line_pos] != ObjectLabel::LineBundle(k) {
            return Err(SodError::GramShape(format!(
                "expected L{k} at position {line_pos}"
            )));
        }
        let mut positions = vec![line_pos];
        for c in 0..centers {
            let pos = 1 + bundles + group * centers + c;
            let label = gram.labels()[pos];
            if label.center() != Some(c) || label.s_level() != Some(k) {
                return Err(SodError::GramShape(format!(
                    "expected the S-object of center {c} at level {k} at position {pos}, found {label}"
                )));
            }
            positions.push(pos);
        }
        // Source-to-target Homs must be exactly k[0].
        for (c, &pos) in positions.iter().enumerate().skip(1) {
            match gram.entry(line_pos, pos) {
                GramEntry::Computed { value } if *value == GradedDimension::unit() => {}
                other => {
                    return Err(SodError::GroupingInvariant(format!(
                        "Hom from L{k} to center {} must be k[0], found {other:?}",
                        c - 1
                    )))
                }
            }
        }
        // Distinct targets must be completely orthogonal.
        for &p in positions.iter().skip(1) {
            for &q in positions.iter().skip(1) {
                if p == q {
                    continue;
                }
                match gram.entry(p, q) {
                    entry if entry.is_zero_like() => {}
                    other => {
                        return Err(SodError::GroupingInvariant(format!(
                            "S-objects of distinct centers must be orthogonal, found {other:?}"
                        )))
                    }
                }
            }
        }
        blocks.push(QuiverBlock {
            labels: positions.iter().map(|&p| gram.labels()[p]).collect(),
            quiver: star_quiver(centers),
        });
    }
    Ok(blocks)
}
