//! Quivers, Dynkin classification, Tits forms, root systems, and a
//! brute-force census of indecomposable representations over the
//! two-element field.
//!
//! The star quivers with at most three targets are the ones that show up
//! in blow-up decompositions; the brute-force engine is the desk-scale
//! witness that their derived categories have only finitely many
//! indecomposables (Gabriel: indecomposables correspond to positive
//! roots, one isomorphism class each).

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::intmat;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuiverError {
    #[error("arrow endpoint {index} out of range (quiver has {vertex_count} vertices)")]
    VertexIndexOutOfRange { index: usize, vertex_count: usize },
    #[error("definiteness check needs a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("definiteness check needs a symmetric matrix (entry ({i},{j}) differs from ({j},{i}))")]
    NotSymmetric { i: usize, j: usize },
    #[error("dimension vector has length {got}, quiver has {expected} vertices")]
    DimensionVectorLength { expected: usize, got: usize },
    #[error("total dimension {total} exceeds the brute-force cap {cap}")]
    BruteForceCap { total: u32, cap: u32 },
    #[error("quiver is not of Dynkin type: {0}")]
    NotDynkin(&'static str),
    #[error("Rouquier dimension unknown: {0}")]
    RdimUnknown(&'static str),
}

/// A finite quiver: directed multigraph on `0..vertex_count`.
///
/// Loops and parallel arrows are representable; the classification simply
/// rejects them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    pub fn new(vertex_count: usize, arrows: Vec<(usize, usize)>) -> Result<Self, QuiverError> {
        for &(s, t) in &arrows {
            for index in [s, t] {
                if index >= vertex_count {
                    return Err(QuiverError::VertexIndexOutOfRange {
                        index,
                        vertex_count,
                    });
                }
            }
        }
        Ok(Self {
            vertex_count,
            arrows,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// Undirected adjacency with multiplicity; diagonal counts loops.
    fn adjacency(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![vec![0u32; self.vertex_count]; self.vertex_count];
        for &(s, t) in &self.arrows {
            adj[s][t] += 1;
            if s != t {
                adj[t][s] += 1;
            }
        }
        adj
    }
}

/// The star quiver with one central source and `targets` outgoing arrows.
/// `targets = 0` is the one-vertex quiver.
pub fn star_quiver(targets: usize) -> Quiver {
    Quiver::new(1 + targets, (1..=targets).map(|t| (0, t)).collect())
        .expect("star quiver indices are in range")
}

/// Simply-laced Dynkin types. `D_3` coincides with `A_3` and is reported
/// as `A(3)` carrying the alias.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DynkinType {
    A(u32),
    D(u32),
    E(u32),
}

impl DynkinType {
    pub fn rank(&self) -> u32 {
        match *self {
            DynkinType::A(n) | DynkinType::D(n) | DynkinType::E(n) => n,
        }
    }

    /// Alternative presentation name, if any: `A_3` also arises as `D_3`.
    pub fn alias(&self) -> Option<&'static str> {
        match self {
            DynkinType::A(3) => Some("D3"),
            _ => None,
        }
    }

    /// Edges of the canonical tree for this type, on vertices `0..rank`.
    ///
    /// `A(n)` is the path `0-1-...-(n-1)`. `D(n)` attaches horns `0` and
    /// `1` to vertex `2` followed by a path. `E(n)` is the path
    /// `0-...-(n-2)` with vertex `n-1` attached to vertex `2`.
    pub fn canonical_edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank() as usize;
        match self {
            DynkinType::A(_) => (1..n).map(|i| (i - 1, i)).collect(),
            DynkinType::D(_) => {
                let mut edges = vec![(0, 2), (1, 2)];
                edges.extend((3..n).map(|i| (i - 1, i)));
                edges
            }
            DynkinType::E(_) => {
                let mut edges: Vec<(usize, usize)> = (1..n - 1).map(|i| (i - 1, i)).collect();
                edges.push((2, n - 1));
                edges
            }
        }
    }

    fn canonical_quiver(&self) -> Quiver {
        Quiver::new(self.rank() as usize, self.canonical_edges())
            .expect("canonical edges are in range")
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E(n) => write!(f, "E{n}"),
        }
    }
}

impl serde::Serialize for DynkinType {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// ADE type of the underlying undirected graph, or `None` when the graph
/// is not a connected simply-laced Dynkin tree.
pub fn classify_dynkin(q: &Quiver) -> Option<DynkinType> {
    let n = q.vertex_count;
    if n == 0 {
        return None;
    }
    if q.arrows.iter().any(|&(s, t)| s == t) {
        return None;
    }
    // A tree has exactly n-1 edges counted with multiplicity, so parallel
    // arrows are rejected here as well.
    if q.arrows.len() != n - 1 {
        return None;
    }
    let adj = q.adjacency();
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        for w in 0..n {
            if adj[v][w] > 0 && !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return None;
    }

    let degree: Vec<u32> = (0..n).map(|v| adj[v].iter().sum()).collect();
    if degree.iter().any(|&d| d > 3) {
        return None;
    }
    let branches: Vec<usize> = (0..n).filter(|&v| degree[v] == 3).collect();
    match branches.len() {
        0 => Some(DynkinType::A(n as u32)),
        1 => {
            let center = branches[0];
            let mut legs: Vec<u32> = (0..n)
                .filter(|&w| adj[center][w] > 0)
                .map(|mut w| {
                    // Walk away from the center to the leaf.
                    let mut prev = center;
                    let mut len = 1u32;
                    loop {
                        let next = (0..n).find(|&u| adj[w][u] > 0 && u != prev);
                        match next {
                            Some(u) => {
                                prev = w;
                                w = u;
                                len += 1;
                            }
                            None => return len,
                        }
                    }
                })
                .collect();
            legs.sort_unstable();
            match legs.as_slice() {
                [1, 1, k] => Some(DynkinType::D(k + 3)),
                [1, 2, 2] => Some(DynkinType::E(6)),
                [1, 2, 3] => Some(DynkinType::E(7)),
                [1, 2, 4] => Some(DynkinType::E(8)),
                _ => None,
            }
        }
        _ => None,
    }
}

/// Symmetrized Tits form of the quiver, doubled to stay integral:
/// `M = 2I - (adjacency with multiplicity)`, so `q(d) = d^T M d / 2`.
pub fn tits_form(q: &Quiver) -> Vec<Vec<i64>> {
    let n = q.vertex_count;
    let adj = q.adjacency();
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            m[i][j] = if i == j {
                2 - 2 * i64::from(adj[i][i])
            } else {
                -i64::from(adj[i][j])
            };
        }
    }
    m
}

/// Sylvester criterion: positive definite iff every leading principal
/// minor is positive. Exact integer determinants throughout.
pub fn is_positive_definite(m: &[Vec<i64>]) -> Result<bool, QuiverError> {
    let n = m.len();
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(QuiverError::NotSquare {
                rows: n,
                cols: row.len(),
            });
        }
        for j in 0..n {
            if m[i][j] != m[j][i] {
                return Err(QuiverError::NotSymmetric { i, j });
            }
        }
    }
    Ok(intmat::leading_principal_minors(m).iter().all(|&d| d > 0))
}

/// Per-vertex dimensions of a representation (or coordinates of a root
/// in the simple-root basis).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DimensionVector(Vec<u32>);

impl DimensionVector {
    pub fn new(coords: Vec<u32>) -> Self {
        Self(coords)
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl fmt::Display for DimensionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Positive roots of the type, as dimension vectors over the canonical
/// vertex numbering of [`DynkinType::canonical_edges`].
pub fn positive_roots(t: DynkinType) -> Vec<DimensionVector> {
    positive_roots_of_quiver(&t.canonical_quiver()).expect("canonical quiver is Dynkin")
}

/// Reflection closure of the simple roots, intersected with the
/// nonnegative orthant. Depends only on the underlying graph, never on
/// arrow orientation; requires the graph to be Dynkin so that the closure
/// is finite.
pub fn positive_roots_of_quiver(q: &Quiver) -> Result<Vec<DimensionVector>, QuiverError> {
    if classify_dynkin(q).is_none() {
        return Err(QuiverError::NotDynkin(
            "the reflection closure is finite only for ADE graphs",
        ));
    }
    let n = q.vertex_count;
    let adj = q.adjacency();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..n {
        let mut simple = vec![0i64; n];
        simple[i] = 1;
        seen.insert(simple.clone());
        queue.push_back(simple);
    }
    while let Some(v) = queue.pop_front() {
        for i in 0..n {
            // Simply-laced reflection: s_i(v)_i = -v_i + Σ_{j ~ i} v_j.
            let mut w = v.clone();
            w[i] = -v[i]
                + (0..n)
                    .map(|j| i64::from(adj[i][j]) * v[j])
                    .sum::<i64>();
            if seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    let mut roots: Vec<DimensionVector> = seen
        .into_iter()
        .filter(|v| v.iter().all(|&c| c >= 0))
        .map(|v| DimensionVector::new(v.into_iter().map(|c| c as u32).collect()))
        .collect();
    roots.sort();
    Ok(roots)
}

/// Rouquier dimension of the bounded derived category of representations.
///
/// For a Dynkin quiver the path algebra is hereditary and Gabriel gives
/// finitely many indecomposables, so the dimension is zero. For anything
/// else this engine makes no claim.
pub fn quiver_category_rdim(q: &Quiver) -> Result<u32, QuiverError> {
    match classify_dynkin(q) {
        Some(_) => Ok(0),
        None => Err(QuiverError::RdimUnknown(
            "only ADE quivers are certified to have Rouquier dimension zero",
        )),
    }
}

const BRUTE_FORCE_CAP: u32 = 5;

/// Number of isomorphism classes of indecomposable representations of `q`
/// over the two-element field with dimension vector `d`.
///
/// Enumerates every tuple of matrices, partitions the tuples into
/// base-change orbits (transvection generators of each `GL(d_v, F_2)`),
/// and tests one representative per orbit for indecomposability via the
/// absence of a nontrivial idempotent endomorphism.
pub fn brute_force_indecomposables(q: &Quiver, d: &DimensionVector) -> Result<u64, QuiverError> {
    classify_dynkin(q).ok_or(QuiverError::NotDynkin(
        "brute force is only run on ADE quivers",
    ))?;
    if d.len() != q.vertex_count {
        return Err(QuiverError::DimensionVectorLength {
            expected: q.vertex_count,
            got: d.len(),
        });
    }
    let total = d.total();
    if total > BRUTE_FORCE_CAP {
        return Err(QuiverError::BruteForceCap {
            total,
            cap: BRUTE_FORCE_CAP,
        });
    }
    if total == 0 {
        // The zero representation is not indecomposable.
        return Ok(0);
    }

    let dims: Vec<usize> = d.coords().iter().map(|&c| c as usize).collect();
    let layout = TupleLayout::new(q, &dims);
    let states = 1u64 << layout.total_bits;

    // Transvection generators (I + E_{rs}) of each GL(d_v, F_2); over F_2
    // they generate the whole group and are their own inverses.
    let mut generators: Vec<(usize, usize, usize)> = Vec::new();
    for (v, &dv) in dims.iter().enumerate() {
        for r in 0..dv {
            for s in 0..dv {
                if r != s {
                    generators.push((v, r, s));
                }
            }
        }
    }

    let mut visited = vec![false; states as usize];
    let mut count = 0u64;
    for start in 0..states {
        if visited[start as usize] {
            continue;
        }
        let mut orbit = vec![start];
        visited[start as usize] = true;
        let mut cursor = 0;
        while cursor < orbit.len() {
            let state = orbit[cursor];
            cursor += 1;
            for &(v, r, s) in &generators {
                let image = layout.apply_transvection(state, v, r, s);
                if !visited[image as usize] {
                    visited[image as usize] = true;
                    orbit.push(image);
                }
            }
        }
        if is_indecomposable(&layout, start, &dims) {
            count += 1;
        }
    }
    Ok(count)
}

/// Bit layout of a tuple of F_2 matrices, one `d_t x d_s` block per arrow.
struct TupleLayout {
    arrows: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    /// (rows, cols) of each block, i.e. (d_target, d_source).
    blocks: Vec<(usize, usize)>,
    total_bits: usize,
}

impl TupleLayout {
    fn new(q: &Quiver, dims: &[usize]) -> Self {
        let mut offsets = Vec::with_capacity(q.arrows.len());
        let mut blocks = Vec::with_capacity(q.arrows.len());
        let mut total_bits = 0usize;
        for &(s, t) in &q.arrows {
            offsets.push(total_bits);
            blocks.push((dims[t], dims[s]));
            total_bits += dims[t] * dims[s];
        }
        assert!(total_bits < 63, "tuple space too large");
        Self {
            arrows: q.arrows.clone(),
            offsets,
            blocks,
            total_bits,
        }
    }

    fn bit(&self, arrow: usize, row: usize, col: usize) -> usize {
        self.offsets[arrow] + row * self.blocks[arrow].1 + col
    }

    fn decode(&self, state: u64, arrow: usize) -> F2Mat {
        let (rows, cols) = self.blocks[arrow];
        let mut m = F2Mat::zero(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if state >> self.bit(arrow, r, c) & 1 == 1 {
                    m.set(r, c);
                }
            }
        }
        m
    }

    /// Base change by I + E_{rs} at vertex `v`: arrows into `v` get row r
    /// += row s, arrows out of `v` get column s += column r (the inverse
    /// acting on the right coincides with the transvection over F_2).
    fn apply_transvection(&self, state: u64, v: usize, r: usize, s: usize) -> u64 {
        let mut out = state;
        for (a, &(src, tgt)) in self.arrows.iter().enumerate() {
            let (rows, cols) = self.blocks[a];
            if tgt == v {
                for c in 0..cols {
                    if state >> self.bit(a, s, c) & 1 == 1 {
                        out ^= 1 << self.bit(a, r, c);
                    }
                }
            }
            if src == v {
                for row in 0..rows {
                    if state >> self.bit(a, row, r) & 1 == 1 {
                        out ^= 1 << self.bit(a, row, s);
                    }
                }
            }
        }
        out
    }
}

/// Dense F_2 matrix with rows packed into u32 masks.
#[derive(Clone, PartialEq, Eq, Debug)]
struct F2Mat {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl F2Mat {
    fn zero(rows: usize, cols: usize) -> Self {
        assert!(cols <= 32);
        Self {
            rows,
            cols,
            data: vec![0; rows],
        }
    }

    fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for r in 0..n {
            m.set(r, r);
        }
        m
    }

    fn set(&mut self, r: usize, c: usize) {
        self.data[r] |= 1 << c;
    }

    fn get(&self, r: usize, c: usize) -> bool {
        self.data[r] >> c & 1 == 1
    }

    fn is_zero(&self) -> bool {
        self.data.iter().all(|&row| row == 0)
    }

    fn xor_in_place(&mut self, other: &F2Mat) {
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a ^= *b;
        }
    }

    fn mul(&self, other: &F2Mat) -> F2Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = F2Mat::zero(self.rows, other.cols);
        for r in 0..self.rows {
            let mut acc = 0u32;
            for c in 0..self.cols {
                if self.get(r, c) {
                    acc ^= other.data[c];
                }
            }
            out.data[r] = acc;
        }
        out
    }
}

/// Endomorphisms of the representation form an F_2-linear space; the
/// representation is indecomposable iff that space contains no idempotent
/// other than 0 and the identity.
fn is_indecomposable(layout: &TupleLayout, state: u64, dims: &[usize]) -> bool {
    let mats: Vec<F2Mat> = (0..layout.arrows.len())
        .map(|a| layout.decode(state, a))
        .collect();

    // Unknowns: entries of one square block per vertex, row-major.
    let mut var_offset = Vec::with_capacity(dims.len());
    let mut nvars = 0usize;
    for &dv in dims {
        var_offset.push(nvars);
        nvars += dv * dv;
    }
    assert!(nvars <= 32, "endomorphism space too large");
    let var = |v: usize, i: usize, j: usize| var_offset[v] + i * dims[v] + j;

    // Equations: phi_t M = M phi_s for every arrow, entrywise over F_2.
    let mut rows: Vec<u32> = Vec::new();
    for (a, &(s, t)) in layout.arrows.iter().enumerate() {
        let m = &mats[a];
        for i in 0..dims[t] {
            for j in 0..dims[s] {
                let mut eq = 0u32;
                for c in 0..dims[t] {
                    if m.get(c, j) {
                        eq ^= 1 << var(t, i, c);
                    }
                }
                for c in 0..dims[s] {
                    if m.get(i, c) {
                        eq ^= 1 << var(s, c, j);
                    }
                }
                if eq != 0 {
                    rows.push(eq);
                }
            }
        }
    }

    let basis = f2_nullspace(&rows, nvars);

    // Decode one basis vector into its per-vertex blocks.
    let decode = |mask: u32| -> Vec<F2Mat> {
        dims.iter()
            .enumerate()
            .map(|(v, &dv)| {
                let mut m = F2Mat::zero(dv, dv);
                for i in 0..dv {
                    for j in 0..dv {
                        if mask >> var(v, i, j) & 1 == 1 {
                            m.set(i, j);
                        }
                    }
                }
                m
            })
            .collect()
    };

    let identity: Vec<F2Mat> = dims.iter().map(|&dv| F2Mat::identity(dv)).collect();
    let basis_mats: Vec<Vec<F2Mat>> = basis.iter().map(|&b| decode(b)).collect();

    // Gray-code walk over the endomorphism space: flip one basis element
    // per step, test for a nontrivial idempotent.
    let mut current: Vec<F2Mat> = dims.iter().map(|&dv| F2Mat::zero(dv, dv)).collect();
    let k = basis_mats.len();
    for g in 1u64..(1u64 << k) {
        let flip = g.trailing_zeros() as usize;
        for (cur, b) in current.iter_mut().zip(&basis_mats[flip]) {
            cur.xor_in_place(b);
        }
        if current.iter().all(|m| m.is_zero()) || current == identity {
            continue;
        }
        let idempotent = current.iter().all(|m| m.mul(m) == *m);
        if idempotent {
            return false;
        }
    }
    true
}

/// Basis of the solution space of the homogeneous F_2 system given by
/// `rows` (bit masks over `nvars` unknowns).
fn f2_nullspace(rows: &[u32], nvars: usize) -> Vec<u32> {
    let mut reduced: Vec<u32> = Vec::new();
    for &row in rows {
        let mut r = row;
        for &p in &reduced {
            let pivot = p.trailing_zeros();
            if r >> pivot & 1 == 1 {
                r ^= p;
            }
        }
        if r != 0 {
            reduced.push(r);
            reduced.sort_unstable_by_key(|m| m.trailing_zeros());
        }
    }
    let pivots: BTreeSet<u32> = reduced.iter().map(|m| m.trailing_zeros()).collect();
    let mut basis = Vec::new();
    for free in 0..nvars as u32 {
        if pivots.contains(&free) {
            continue;
        }
        // Back-substitute the free variable through the reduced rows.
        let mut vec = 1u32 << free;
        for &p in reduced.iter().rev() {
            let pivot = p.trailing_zeros();
            let parity = (p & vec).count_ones() % 2;
            if parity == 1 {
                vec ^= 1 << pivot;
            }
        }
        basis.push(vec);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_quivers() {
        assert_eq!(star_quiver(0).vertex_count(), 1);
        assert_eq!(star_quiver(0).arrows().len(), 0);
        assert_eq!(star_quiver(1).arrows(), &[(0, 1)]);
        assert_eq!(star_quiver(3).arrows(), &[(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn classification_of_stars() {
        assert_eq!(classify_dynkin(&star_quiver(0)), Some(DynkinType::A(1)));
        assert_eq!(classify_dynkin(&star_quiver(1)), Some(DynkinType::A(2)));
        assert_eq!(classify_dynkin(&star_quiver(2)), Some(DynkinType::A(3)));
        assert_eq!(classify_dynkin(&star_quiver(2)).unwrap().alias(), Some("D3"));
        assert_eq!(classify_dynkin(&star_quiver(3)), Some(DynkinType::D(4)));
        assert_eq!(classify_dynkin(&star_quiver(4)), None);
    }

    #[test]
    fn classification_rejects_non_trees() {
        let cycle = Quiver::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(classify_dynkin(&cycle), None);
        let double = Quiver::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert_eq!(classify_dynkin(&double), None);
        let loopy = Quiver::new(1, vec![(0, 0)]).unwrap();
        assert_eq!(classify_dynkin(&loopy), None);
        let disconnected = Quiver::new(3, vec![(0, 1)]).unwrap();
        assert_eq!(classify_dynkin(&disconnected), None);
    }

    #[test]
    fn classification_of_long_types() {
        let a5 = Quiver::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(classify_dynkin(&a5), Some(DynkinType::A(5)));
        let d5 = Quiver::new(5, vec![(0, 2), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(classify_dynkin(&d5), Some(DynkinType::D(5)));
        for t in [DynkinType::E(6), DynkinType::E(7), DynkinType::E(8)] {
            assert_eq!(classify_dynkin(&t.canonical_quiver()), Some(t));
        }
    }

    #[test]
    fn tits_form_definiteness() {
        assert!(is_positive_definite(&tits_form(&star_quiver(1))).unwrap());
        assert_eq!(
            intmat::leading_principal_minors(&tits_form(&star_quiver(1))),
            vec![2, 3]
        );
        assert!(is_positive_definite(&tits_form(&star_quiver(3))).unwrap());
        // Affine double arrow: q(1,1) = 0, not definite.
        let affine = Quiver::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert!(!is_positive_definite(&tits_form(&affine)).unwrap());
        assert!(matches!(
            is_positive_definite(&[vec![1, 2]]),
            Err(QuiverError::NotSquare { .. })
        ));
        assert!(matches!(
            is_positive_definite(&[vec![1, 2], vec![0, 1]]),
            Err(QuiverError::NotSymmetric { .. })
        ));
    }

    #[test]
    fn roots_of_small_types() {
        assert_eq!(
            positive_roots(DynkinType::A(1)),
            vec![DimensionVector::new(vec![1])]
        );
        let a2: BTreeSet<_> = positive_roots(DynkinType::A(2)).into_iter().collect();
        let expected: BTreeSet<_> = [vec![1, 0], vec![0, 1], vec![1, 1]]
            .into_iter()
            .map(DimensionVector::new)
            .collect();
        assert_eq!(a2, expected);
        assert_eq!(positive_roots(DynkinType::A(3)).len(), 6);
        assert_eq!(positive_roots(DynkinType::D(4)).len(), 12);
    }

    #[test]
    fn root_counts_match_known_values() {
        for n in 1..=8u32 {
            assert_eq!(
                positive_roots(DynkinType::A(n)).len() as u32,
                n * (n + 1) / 2
            );
        }
        assert_eq!(positive_roots(DynkinType::D(5)).len(), 20);
        assert_eq!(positive_roots(DynkinType::E(6)).len(), 36);
        assert_eq!(positive_roots(DynkinType::E(7)).len(), 63);
        assert_eq!(positive_roots(DynkinType::E(8)).len(), 120);
    }

    #[test]
    fn roots_ignore_orientation() {
        let forward = Quiver::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let backward = Quiver::new(3, vec![(1, 0), (1, 2)]).unwrap();
        assert_eq!(
            positive_roots_of_quiver(&forward).unwrap(),
            positive_roots_of_quiver(&backward).unwrap()
        );
    }

    #[test]
    fn brute_force_on_a2() {
        let q = star_quiver(1);
        assert_eq!(
            brute_force_indecomposables(&q, &DimensionVector::new(vec![1, 1])).unwrap(),
            1
        );
        assert_eq!(
            brute_force_indecomposables(&q, &DimensionVector::new(vec![2, 1])).unwrap(),
            0
        );
    }

    #[test]
    fn brute_force_on_d4_highest_root() {
        let q = star_quiver(3);
        assert_eq!(
            brute_force_indecomposables(&q, &DimensionVector::new(vec![2, 1, 1, 1])).unwrap(),
            1
        );
    }

    #[test]
    fn brute_force_guards() {
        let q = star_quiver(1);
        assert!(matches!(
            brute_force_indecomposables(&q, &DimensionVector::new(vec![5, 1])),
            Err(QuiverError::BruteForceCap { .. })
        ));
        assert!(matches!(
            brute_force_indecomposables(&q, &DimensionVector::new(vec![1])),
            Err(QuiverError::DimensionVectorLength { .. })
        ));
        let cycle = Quiver::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(
            brute_force_indecomposables(&cycle, &DimensionVector::new(vec![1, 1, 1])),
            Err(QuiverError::NotDynkin(_))
        ));
        assert_eq!(
            brute_force_indecomposables(&q, &DimensionVector::new(vec![0, 0])).unwrap(),
            0
        );
    }

    #[test]
    fn rdim_of_quiver_categories() {
        assert_eq!(quiver_category_rdim(&star_quiver(3)).unwrap(), 0);
        assert_eq!(quiver_category_rdim(&star_quiver(0)).unwrap(), 0);
        let cycle = Quiver::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(
            quiver_category_rdim(&cycle),
            Err(QuiverError::RdimUnknown(_))
        ));
    }
}
