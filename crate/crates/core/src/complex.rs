//! Abstract and geometric simplicial complexes.
//!
//! Vertices are indices `0..n` internally and `1..=n` in every user-facing
//! rendering (JSON, reports, `Display`). A face is a bitmask over the ground
//! set, which caps the ground set at 64 vertices; desk-scale complexes stay
//! far below that.

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::Echelon;

pub const MAX_VERTICES: usize = 64;

/// A finite vertex set, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_bits(bits: u64) -> Face {
        Face(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(v: usize) -> Face {
        assert!(v < MAX_VERTICES, "vertex {v} exceeds the supported ground set");
        Face(1 << v)
    }

    /// Face on `0..n`.
    pub fn full(n: usize) -> Face {
        assert!(n <= MAX_VERTICES, "ground set of {n} vertices is too large");
        if n == MAX_VERTICES {
            Face(u64::MAX)
        } else {
            Face((1u64 << n) - 1)
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn dim(self) -> isize {
        self.len() as isize - 1
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1 << v) != 0
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn minus(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn with(self, v: usize) -> Face {
        self.union(Face::singleton(v))
    }

    pub fn without(self, v: usize) -> Face {
        self.minus(Face::singleton(v))
    }

    pub fn max_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Vertices in increasing order.
    pub fn vertices(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            (bits != 0).then(|| {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                v
            })
        })
    }

    /// All subsets, including the empty face and the face itself.
    pub fn subsets(self) -> impl Iterator<Item = Face> {
        let full = self.0;
        let mut next = Some(full);
        std::iter::from_fn(move || {
            let s = next?;
            next = if s == 0 { None } else { Some((s - 1) & full) };
            Some(Face(s))
        })
    }

    /// Vertex ids as shown to users (1-based).
    pub fn labels(self) -> Vec<usize> {
        self.vertices().map(|v| v + 1).collect()
    }
}

impl FromIterator<usize> for Face {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(Face::EMPTY, |f, v| f.with(v))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Face {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.labels().serialize(s)
    }
}

#[derive(Clone, Debug)]
struct FaceTable {
    by_size: Vec<Vec<Face>>,
    all: HashSet<Face>,
}

/// A simplicial complex on the ground set `0..n`, given by its facets.
///
/// The void complex has no faces at all; the complex `{∅}` has the empty face
/// as its only face. Faces per dimension are materialized on first use.
#[derive(Clone, Debug)]
pub struct AbstractComplex {
    n: usize,
    facets: Vec<Face>,
    table: OnceLock<FaceTable>,
}

impl PartialEq for AbstractComplex {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.facets == other.facets
    }
}

impl Eq for AbstractComplex {}

fn maximal(mut faces: Vec<Face>) -> (Vec<Face>, usize) {
    faces.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    faces.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
    let mut dropped = 0;
    for f in faces {
        if kept.iter().any(|k| f.is_subset(*k)) {
            dropped += 1;
        } else {
            kept.push(f);
        }
    }
    kept.sort();
    (kept, dropped)
}

impl AbstractComplex {
    /// Complex with the given facets. Input sets contained in other input
    /// sets are dropped with a warning.
    ///
    /// # Panics
    /// If a vertex index is `>= n` or `n` exceeds [`MAX_VERTICES`].
    pub fn new(n: usize, facets: impl IntoIterator<Item = Face>) -> Self {
        Self::generated_with_report(n, facets.into_iter().collect(), true)
    }

    fn generated_with_report(n: usize, gens: Vec<Face>, warn: bool) -> Self {
        assert!(n <= MAX_VERTICES, "ground set of {n} vertices is too large");
        for g in &gens {
            assert!(g.is_subset(Face::full(n)), "face {g} leaves the ground set of size {n}");
        }
        let total = gens.len();
        let (facets, dropped) = maximal(gens);
        if warn && dropped > 0 {
            log::warn!("dropped {dropped} of {total} input facets contained in other facets");
        }
        AbstractComplex { n, facets, table: OnceLock::new() }
    }

    /// Smallest complex containing the given faces, without warnings.
    pub fn generated_by(n: usize, faces: Vec<Face>) -> Self {
        Self::generated_with_report(n, faces, false)
    }

    pub fn void(n: usize) -> Self {
        Self::generated_by(n, Vec::new())
    }

    /// The complex `{∅}`.
    pub fn empty_face(n: usize) -> Self {
        Self::generated_by(n, vec![Face::EMPTY])
    }

    /// The full simplex on `face` with all its faces.
    pub fn simplex(n: usize, face: Face) -> Self {
        Self::generated_by(n, vec![face])
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `max |F| - 1` over facets; `-1` for `{∅}` and for the void complex.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.dim()).max().unwrap_or(-1)
    }

    pub fn vertex_set(&self) -> Face {
        self.facets.iter().fold(Face::EMPTY, |a, f| a.union(*f))
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.vertex_set().vertices().collect()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    fn table(&self) -> &FaceTable {
        self.table.get_or_init(|| {
            let mut all = HashSet::new();
            for f in &self.facets {
                for s in f.subsets() {
                    all.insert(s);
                }
            }
            let top = self.facets.iter().map(|f| f.len()).max().map_or(0, |m| m + 1);
            let mut by_size = vec![Vec::new(); top];
            for f in &all {
                by_size[f.len()].push(*f);
            }
            for b in &mut by_size {
                b.sort();
            }
            FaceTable { by_size, all }
        })
    }

    pub fn contains(&self, face: Face) -> bool {
        self.table().all.contains(&face)
    }

    pub fn num_faces(&self) -> usize {
        self.table().all.len()
    }

    /// Faces with exactly `size` vertices, in a fixed order.
    pub fn faces_of_size(&self, size: usize) -> &[Face] {
        self.table().by_size.get(size).map_or(&[], |v| v.as_slice())
    }

    pub fn faces_of_dim(&self, dim: isize) -> &[Face] {
        if dim < -1 {
            return &[];
        }
        self.faces_of_size((dim + 1) as usize)
    }

    /// All faces ordered by size.
    pub fn faces(&self) -> impl Iterator<Item = Face> + '_ {
        self.table().by_size.iter().flatten().copied()
    }

    /// `(f_{-1}, f_0, ..., f_dim)`; empty for the void complex.
    pub fn f_vector(&self) -> Vec<usize> {
        self.table().by_size.iter().map(|b| b.len()).collect()
    }

    /// Same facets on a larger ground set.
    pub fn with_ground_size(&self, n: usize) -> Self {
        assert!(self.vertex_set().is_subset(Face::full(n)), "ground set too small");
        AbstractComplex { n, facets: self.facets.clone(), table: OnceLock::new() }
    }

    fn require_face(&self, sigma: Face) -> Result<()> {
        if self.contains(sigma) {
            Ok(())
        } else {
            Err(Error::NotAFace(sigma))
        }
    }

    /// `St_σ Δ`: faces `τ` with `τ ∪ σ ∈ Δ`.
    pub fn star(&self, sigma: Face) -> Result<Self> {
        self.require_face(sigma)?;
        let gens = self.facets.iter().filter(|f| sigma.is_subset(**f)).copied().collect();
        Ok(Self::generated_by(self.n, gens))
    }

    /// `Lk_σ Δ = {τ ∖ σ : σ ⊆ τ ∈ Δ}`.
    pub fn link(&self, sigma: Face) -> Result<Self> {
        self.require_face(sigma)?;
        let gens = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset(**f))
            .map(|f| f.minus(sigma))
            .collect();
        Ok(Self::generated_by(self.n, gens))
    }

    /// The relative pair `(St_v Δ, ∂St_v Δ)`; its relative faces are exactly
    /// the faces containing `v`.
    pub fn open_star(&self, v: usize) -> Result<RelativeComplex> {
        if !self.vertex_set().contains(v) {
            return Err(Error::NotAVertex(v + 1));
        }
        let star = self.star(Face::singleton(v))?;
        let boundary = Self::generated_by(
            self.n,
            star.facets.iter().map(|f| f.without(v)).collect(),
        );
        RelativeComplex::new(star, boundary)
    }

    /// Faces of dimension at most `k`.
    pub fn skeleton(&self, k: isize) -> Self {
        if k < -1 {
            return Self::void(self.n);
        }
        let size = (k + 1) as usize;
        let mut gens: Vec<Face> = self.facets.iter().filter(|f| f.len() <= size).copied().collect();
        gens.extend_from_slice(self.faces_of_size(size));
        Self::generated_by(self.n, gens)
    }

    /// Subcomplex generated by the facets of dimension at least `k`.
    pub fn generated_in_dim_at_least(&self, k: isize) -> Self {
        let gens = self.facets.iter().filter(|f| f.dim() >= k).copied().collect();
        Self::generated_by(self.n, gens)
    }

    /// Induced subcomplex `Δ_W = {σ ∈ Δ : σ ⊆ W}`.
    pub fn induced(&self, w: Face) -> Self {
        if self.is_void() {
            return self.clone();
        }
        Self::generated_by(self.n, self.facets.iter().map(|f| f.intersection(w)).collect())
    }

    pub fn union(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "ground sets differ");
        let mut gens = self.facets.clone();
        gens.extend_from_slice(&other.facets);
        Self::generated_by(self.n, gens)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "ground sets differ");
        let mut gens = Vec::new();
        for f in &self.facets {
            for g in &other.facets {
                gens.push(f.intersection(*g));
            }
        }
        Self::generated_by(self.n, gens)
    }

    /// Join with another complex on a disjoint vertex set.
    pub fn join(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "ground sets differ");
        assert!(
            self.vertex_set().intersection(other.vertex_set()).is_empty(),
            "join needs disjoint vertex sets"
        );
        let mut gens = Vec::new();
        for f in &self.facets {
            for g in &other.facets {
                gens.push(f.union(*g));
            }
        }
        Self::generated_by(self.n, gens)
    }

    /// Cone with apex `v`, which must not be a vertex of the complex.
    pub fn cone(&self, v: usize) -> Self {
        self.join(&Self::simplex(self.n, Face::singleton(v)))
    }

    pub fn is_subcomplex_of(&self, other: &Self) -> bool {
        self.facets.iter().all(|f| other.contains(*f))
    }

    /// Whether `self = other_{V(self)}`.
    pub fn is_induced_in(&self, other: &Self) -> bool {
        self.is_subcomplex_of(other) && other.induced(self.vertex_set()) == *self
    }

    /// `Cl_k Δ`: vertex sets of `Δ` all of whose faces of dimension `≤ k-1`
    /// lie in `Δ`.
    pub fn clique_complex(&self, k: usize) -> Self {
        assert!(k >= 1, "clique complexes need k >= 1");
        let verts = self.vertices();
        let mut found: Vec<Face> = Vec::new();
        let mut stack: Vec<(Face, usize)> = vec![(Face::EMPTY, 0)];
        while let Some((sigma, start)) = stack.pop() {
            let mut extended = false;
            for (i, &v) in verts.iter().enumerate().skip(start) {
                let ok = sigma
                    .subsets()
                    .filter(|t| t.len() < k)
                    .all(|t| self.contains(t.with(v)));
                if ok {
                    extended = true;
                    stack.push((sigma.with(v), i + 1));
                }
            }
            if !extended {
                found.push(sigma);
            }
        }
        Self::generated_by(self.n, found)
    }

    /// Minimal nonfaces `σ ⊆ V(Δ)` with `dmin ≤ dim σ ≤ dmax`.
    pub fn missing_faces(&self, dmin: isize, dmax: isize) -> Vec<Face> {
        let verts = self.vertices();
        let lo = dmin.max(1) + 1;
        let hi = dmax.min(self.dim() + 1) + 1;
        let mut out = Vec::new();
        for size in lo..=hi {
            for &tau in self.faces_of_size(size as usize - 1) {
                let top = tau.max_vertex().unwrap_or(0);
                for &v in verts.iter().filter(|&&v| v > top) {
                    let sigma = tau.with(v);
                    if !self.contains(sigma) && sigma.vertices().all(|u| self.contains(sigma.without(u)))
                    {
                        out.push(sigma);
                    }
                }
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        out
    }

    /// f-, h- and g-vectors; h and g only for pure complexes.
    pub fn fhg(&self) -> FhgVector {
        let f = self.f_vector();
        if !self.is_pure() || self.is_void() {
            return FhgVector { f, h: None, g: None };
        }
        let h = h_from_f(&f);
        let g = g_from_h(&h);
        FhgVector { f, h: Some(h), g: Some(g) }
    }
}

fn binomial(n: i128, k: i128) -> i128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i128, |acc, i| acc * (n - i) / (i + 1))
}

/// h-vector of a pure complex from `(f_{-1}, ..., f_{d-1})`:
/// `h_k = Σ_{i ≤ k} (-1)^{k-i} C(d-i, k-i) f_{i-1}`.
pub fn h_from_f(f: &[usize]) -> Vec<i64> {
    let d = f.len() as i128 - 1;
    (0..=d)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                    sign * binomial(d - i, k - i) * f[i as usize] as i128
                })
                .sum::<i128>() as i64
        })
        .collect()
}

/// Inverse transform: `f_{j-1} = Σ_{i ≤ j} C(d-i, j-i) h_i`.
pub fn f_from_h(h: &[i64]) -> Vec<i64> {
    let d = h.len() as i128 - 1;
    (0..=d)
        .map(|j| (0..=j).map(|i| binomial(d - i, j - i) * h[i as usize] as i128).sum::<i128>() as i64)
        .collect()
}

/// `g_i = h_i - h_{i-1}` for `0 ≤ i ≤ ⌈d/2⌉`, with `d = len(h) - 1`.
pub fn g_from_h(h: &[i64]) -> Vec<i64> {
    let d = h.len().saturating_sub(1);
    let top = d.div_ceil(2).min(d);
    (0..=top).map(|i| h[i] - if i == 0 { 0 } else { h[i - 1] }).collect()
}

/// Face numbers and their binomial transforms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FhgVector {
    /// `(f_{-1}, f_0, ..., f_dim)`.
    pub f: Vec<usize>,
    pub h: Option<Vec<i64>>,
    pub g: Option<Vec<i64>>,
}

/// A pair `(Δ, Γ)` with `Γ ⊆ Δ`; the relative faces are `Δ ∖ Γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeComplex {
    pub complex: AbstractComplex,
    pub sub: AbstractComplex,
    pub induced: bool,
}

impl RelativeComplex {
    pub fn new(complex: AbstractComplex, sub: AbstractComplex) -> Result<Self> {
        if let Some(f) = sub.facets().iter().find(|f| !complex.contains(**f)) {
            return Err(Error::NotAFace(*f));
        }
        let induced = sub.is_induced_in(&complex);
        Ok(RelativeComplex { complex, sub, induced })
    }

    pub fn relative_faces(&self) -> Vec<Face> {
        self.complex.faces().filter(|f| !self.sub.contains(*f)).collect()
    }

    /// Number of relative faces per dimension, starting at dimension -1.
    pub fn relative_f_vector(&self) -> Vec<usize> {
        let mut counts = vec![0; (self.complex.dim() + 2).max(0) as usize];
        for f in self.relative_faces() {
            counts[f.len()] += 1;
        }
        counts
    }
}

/// Vertex coloring with colors `1..=d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        Coloring { colors }
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn num_colors(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    pub fn vertices_of_color(&self, c: usize) -> Face {
        self.colors.iter().enumerate().filter(|(_, k)| **k == c).map(|(v, _)| v).collect()
    }

    pub fn vertices_with_colors(&self, colors: &[usize]) -> Face {
        self.colors
            .iter()
            .enumerate()
            .filter(|(_, k)| colors.contains(k))
            .map(|(v, _)| v)
            .collect()
    }

    /// Checks injectivity on every facet and that every vertex is colored.
    pub fn validate(&self, complex: &AbstractComplex) -> Result<()> {
        if self.colors.len() < complex.ground_size() {
            return Err(Error::Contract("coloring does not cover the ground set".into()));
        }
        for &f in complex.facets() {
            let mut seen = HashSet::new();
            for v in f.vertices() {
                if self.colors[v] == 0 || !seen.insert(self.colors[v]) {
                    return Err(Error::InvalidColoring(f));
                }
            }
        }
        Ok(())
    }
}

/// Simplicial complex with exact rational vertex coordinates in `ℚ^d`.
#[derive(Clone, Debug)]
pub struct GeometricComplex {
    complex: AbstractComplex,
    coords: Vec<Vec<BigRational>>,
    ambient_dim: usize,
    coloring: Option<Coloring>,
    improper: OnceLock<Option<Face>>,
}

impl GeometricComplex {
    /// `coords[v]` is the position of vertex `v`; one entry per ground-set
    /// vertex, each of length `ambient_dim`.
    pub fn new(complex: AbstractComplex, coords: Vec<Vec<BigRational>>, ambient_dim: usize) -> Result<Self> {
        if coords.len() != complex.ground_size() {
            return Err(Error::Contract(format!(
                "{} coordinate vectors for {} vertices",
                coords.len(),
                complex.ground_size()
            )));
        }
        if let Some(v) = coords.iter().position(|c| c.len() != ambient_dim) {
            return Err(Error::Contract(format!("vertex {} has wrong coordinate length", v + 1)));
        }
        Ok(GeometricComplex { complex, coords, ambient_dim, coloring: None, improper: OnceLock::new() })
    }

    pub fn with_coloring(mut self, coloring: Coloring) -> Result<Self> {
        coloring.validate(&self.complex)?;
        self.coloring = Some(coloring);
        Ok(self)
    }

    pub fn complex(&self) -> &AbstractComplex {
        &self.complex
    }

    pub fn coloring(&self) -> Option<&Coloring> {
        self.coloring.as_ref()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn ground_size(&self) -> usize {
        self.complex.ground_size()
    }

    pub fn coords(&self) -> &[Vec<BigRational>] {
        &self.coords
    }

    pub fn vertex_coords(&self, v: usize) -> &[BigRational] {
        &self.coords[v]
    }

    /// Row `j` of the coordinate matrix: the `j`-th coordinate of every vertex.
    pub fn coordinate_row(&self, j: usize) -> Vec<BigRational> {
        self.coords.iter().map(|c| c[j].clone()).collect()
    }

    /// Same coordinates and coloring on a different complex over the same
    /// ground set.
    pub fn with_complex(&self, complex: AbstractComplex) -> GeometricComplex {
        assert_eq!(complex.ground_size(), self.ground_size(), "ground sets differ");
        GeometricComplex {
            complex,
            coords: self.coords.clone(),
            ambient_dim: self.ambient_dim,
            coloring: self.coloring.clone(),
            improper: OnceLock::new(),
        }
    }

    /// Replaces the coordinates, keeping complex and coloring.
    pub fn with_coords(&self, coords: Vec<Vec<BigRational>>, ambient_dim: usize) -> Result<GeometricComplex> {
        let mut g = GeometricComplex::new(self.complex.clone(), coords, ambient_dim)?;
        g.coloring = self.coloring.clone();
        Ok(g)
    }

    /// Appends one coordinate per vertex, realizing a given linear form as an
    /// extra coordinate in `ℚ^{d+1}`.
    pub fn lift(&self, extra: &[BigRational]) -> GeometricComplex {
        assert_eq!(extra.len(), self.ground_size(), "lift needs one value per vertex");
        let coords = self
            .coords
            .iter()
            .zip(extra)
            .map(|(c, e)| {
                let mut c = c.clone();
                c.push(e.clone());
                c
            })
            .collect();
        self.with_coords(coords, self.ambient_dim + 1).expect("lengths match by construction")
    }

    /// Applies a linear map given as an `m × d` matrix of rows.
    pub fn project(&self, matrix: &[Vec<BigRational>]) -> GeometricComplex {
        let m = matrix.len();
        let coords = self
            .coords
            .iter()
            .map(|c| {
                matrix
                    .iter()
                    .map(|row| row.iter().zip(c).fold(BigRational::zero(), |acc, (a, b)| acc + a * b))
                    .collect()
            })
            .collect();
        self.with_coords(coords, m).expect("lengths match by construction")
    }

    /// First face of dimension `< d` (in size order) whose coordinate
    /// vectors are linearly dependent.
    pub fn improper_face(&self) -> Option<Face> {
        *self.improper.get_or_init(|| {
            let d = self.ambient_dim;
            for size in 1..=d {
                for &f in self.complex.faces_of_size(size) {
                    let mut e = Echelon::new();
                    let independent = f.vertices().all(|v| {
                        let row = crate::linalg::to_sparse(&self.coords[v]);
                        e.insert(&row)
                    });
                    if !independent {
                        return Some(f);
                    }
                }
            }
            None
        })
    }

    pub fn is_proper(&self) -> bool {
        self.improper_face().is_none()
    }
}
