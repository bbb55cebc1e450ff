//! Stress spaces.
//!
//! The degree-`k` part of `S̃(Δ)` is spanned by the monomials of degree `k`
//! whose support is a face of `Δ`. Stresses are the elements of that span
//! killed by every coordinate differential `θ_j = Σ_i V[j][i] ∂/∂x_i`, so each
//! stress space is the kernel of one sparse matrix from face-supported
//! monomials of degree `k` to `d` copies of those of degree `k-1`.
//!
//! A relative space of `(Δ, Γ)` uses only monomials with support in `Δ ∖ Γ`;
//! derivative terms whose support falls into `Γ` are projected away. When `Γ`
//! is not void, the empty face belongs to `Γ`, so constants are excluded.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::complex::{AbstractComplex, Face, GeometricComplex};
use crate::differential::LinearDifferential;
use crate::linalg::{self, Echelon, RationalMatrix, SparseVec};

/// Exponent vector of a monomial in `x_1, ..., x_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Box<[u8]>);

impl Monomial {
    pub fn constant(n: usize) -> Self {
        Monomial(vec![0; n].into_boxed_slice())
    }

    pub fn from_exponents(exps: Vec<u8>) -> Self {
        Monomial(exps.into_boxed_slice())
    }

    /// `x^σ = Π_{v ∈ σ} x_v`.
    pub fn squarefree(n: usize, face: Face) -> Self {
        Monomial((0..n).map(|i| u8::from(face.contains(i))).collect())
    }

    pub fn exponents(&self) -> &[u8] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn support(&self) -> Face {
        self.0.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i).collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    fn lowered(&self, i: usize) -> Monomial {
        let mut e = self.0.clone();
        e[i] -= 1;
        Monomial(e)
    }
}

/// The face-supported monomials of one degree, in descending lexicographic
/// order of exponent vectors.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    n: usize,
    degree: usize,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

fn compositions(face: Face, k: usize, n: usize, out: &mut Vec<Monomial>) {
    let verts: Vec<usize> = face.vertices().collect();
    if verts.is_empty() {
        if k == 0 {
            out.push(Monomial::constant(n));
        }
        return;
    }
    if verts.len() > k {
        return;
    }
    let mut exps = vec![0u8; n];
    fn rec(verts: &[usize], left: usize, exps: &mut Vec<u8>, out: &mut Vec<Monomial>) {
        if verts.len() == 1 {
            exps[verts[0]] = left as u8;
            out.push(Monomial::from_exponents(exps.clone()));
            exps[verts[0]] = 0;
            return;
        }
        for e in 1..=left - (verts.len() - 1) {
            exps[verts[0]] = e as u8;
            rec(&verts[1..], left - e, exps, out);
        }
        exps[verts[0]] = 0;
    }
    rec(&verts, k, &mut exps, out);
}

impl MonomialBasis {
    /// Degree-`k` monomials supported on faces of `complex` that are not
    /// faces of `relative_to`.
    pub fn new(complex: &AbstractComplex, relative_to: Option<&AbstractComplex>, k: usize) -> Self {
        assert!(k < u8::MAX as usize, "degree {k} too large");
        let n = complex.ground_size();
        let mut monomials = Vec::new();
        for size in 0..=k.min(n) {
            for &f in complex.faces_of_size(size) {
                if relative_to.is_some_and(|g| g.contains(f)) {
                    continue;
                }
                compositions(f, k, n, &mut monomials);
            }
        }
        monomials.sort_by(|a, b| b.cmp(a));
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        MonomialBasis { n, degree: k, monomials, index }
    }

    fn empty(n: usize) -> Self {
        MonomialBasis { n, degree: 0, monomials: Vec::new(), index: HashMap::new() }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinates of a polynomial in this basis; terms outside the basis are
    /// dropped (the projection used for relative spaces).
    pub fn project(&self, s: &Stress) -> SparseVec {
        let mut v: SparseVec =
            s.terms.iter().filter_map(|(m, c)| self.index_of(m).map(|i| (i, c.clone()))).collect();
        v.sort_by_key(|(i, _)| *i);
        v
    }

    /// Coordinates of a polynomial all of whose terms lie in this basis.
    pub fn coordinates(&self, s: &Stress) -> Option<SparseVec> {
        let v = self.project(s);
        (v.len() == s.terms.len()).then_some(v)
    }

    pub fn polynomial(&self, v: &SparseVec) -> Stress {
        let terms = v.iter().map(|(i, c)| (self.monomials[*i].clone(), c.clone())).collect();
        Stress { n: self.n, degree: self.degree, terms }
    }
}

/// A homogeneous polynomial stored as a sparse monomial-to-coefficient map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stress {
    n: usize,
    degree: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Stress {
    pub fn zero(n: usize, degree: usize) -> Self {
        Stress { n, degree, terms: BTreeMap::new() }
    }

    /// Builds a polynomial from terms of equal degree; zero coefficients are
    /// dropped and repeated monomials summed.
    pub fn from_terms(n: usize, degree: usize, terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut s = Stress::zero(n, degree);
        for (m, c) in terms {
            assert_eq!(m.exponents().len(), n, "monomial has the wrong number of variables");
            assert_eq!(m.degree(), degree, "monomial has the wrong degree");
            s.add_term(m, c);
        }
        s
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m.clone()).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `γ^(0)`: vertices occurring in some monomial with nonzero coefficient.
    pub fn vertex_support(&self) -> Face {
        self.terms.keys().fold(Face::EMPTY, |f, m| f.union(m.support()))
    }

    /// Complex generated by the supports of the nonzero monomials; void for
    /// the zero polynomial.
    pub fn support(&self) -> AbstractComplex {
        AbstractComplex::generated_by(self.n, self.terms.keys().map(|m| m.support()).collect())
    }

    /// `c∨γ = Σ_i c_i ∂γ/∂x_i`. Degree-0 input gives the zero polynomial.
    pub fn apply(&self, c: &LinearDifferential) -> Stress {
        assert_eq!(c.len(), self.n, "differential and stress live on different ground sets");
        let mut out = Stress::zero(self.n, self.degree.saturating_sub(1));
        if self.degree == 0 {
            return out;
        }
        let mut acc: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (m, coeff) in &self.terms {
            for i in m.support().vertices() {
                let ci = c.coeff(i);
                if ci.is_zero() {
                    continue;
                }
                let a = BigRational::from_integer(BigInt::from(m.exponents()[i]));
                *acc.entry(m.lowered(i)).or_insert_with(BigRational::zero) += coeff * ci * a;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        out.terms = acc;
        out
    }

    pub fn add(&self, other: &Stress) -> Stress {
        assert_eq!(self.degree, other.degree, "degrees differ");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            let e = out.terms.entry(m.clone()).or_insert_with(BigRational::zero);
            *e += c;
        }
        out.terms.retain(|_, v| !v.is_zero());
        out
    }

    pub fn scale(&self, c: &BigRational) -> Stress {
        let mut out = self.clone();
        if c.is_zero() {
            out.terms.clear();
        } else {
            for v in out.terms.values_mut() {
                *v = &*v * c;
            }
        }
        out
    }

    /// Terms whose monomial support contains `v`.
    pub fn restrict_to_vertex(&self, v: usize) -> Stress {
        let terms = self.terms.iter().filter(|(m, _)| m.support().contains(v)).map(|(m, c)| (m.clone(), c.clone()));
        Stress { n: self.n, degree: self.degree, terms: terms.collect() }
    }
}

/// Exact basis of a (relative) stress space `S_k(Δ, Γ; Θ)`.
#[derive(Debug)]
pub struct StressSpace {
    degree: isize,
    basis: MonomialBasis,
    vectors: Vec<SparseVec>,
    proper: bool,
    span: OnceLock<Echelon>,
}

impl StressSpace {
    /// `S_k` of `complex` relative to `relative_to`, cut out by the given
    /// parameter differentials. Negative degrees give the zero space.
    pub fn compute(
        complex: &AbstractComplex,
        relative_to: Option<&AbstractComplex>,
        params: &[LinearDifferential],
        k: isize,
    ) -> StressSpace {
        let n = complex.ground_size();
        if k < 0 {
            return StressSpace { degree: k, basis: MonomialBasis::empty(n), vectors: Vec::new(), proper: true, span: OnceLock::new() };
        }
        let k = k as usize;
        let basis = MonomialBasis::new(complex, relative_to, k);
        let vectors = if k == 0 {
            (0..basis.len()).map(|i| vec![(i, BigRational::one())]).collect()
        } else {
            let lower = MonomialBasis::new(complex, relative_to, k - 1);
            let m = constraint_matrix(&basis, &lower, params);
            linalg::kernel_basis_sparse(&m)
        };
        StressSpace { degree: k as isize, basis, vectors, proper: true, span: OnceLock::new() }
    }

    /// Stress space of a geometric complex with its coordinate rows as
    /// parameters. Improper input is allowed but flagged.
    pub fn of(geo: &GeometricComplex, k: isize, relative_to: Option<&AbstractComplex>) -> StressSpace {
        let mut s = Self::compute(geo.complex(), relative_to, &coordinate_params(geo), k);
        s.proper = geo.is_proper();
        if !s.proper {
            log::debug!("stress space of an improper complex (face {:?})", geo.improper_face());
        }
        s
    }

    pub fn degree(&self) -> isize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// False when the owning complex failed the properness check.
    pub fn is_proper_input(&self) -> bool {
        self.proper
    }

    pub fn basis(&self) -> &MonomialBasis {
        &self.basis
    }

    /// Basis vectors in monomial coordinates.
    pub fn vectors(&self) -> &[SparseVec] {
        &self.vectors
    }

    pub fn stress(&self, i: usize) -> Stress {
        self.basis.polynomial(&self.vectors[i])
    }

    pub fn stresses(&self) -> Vec<Stress> {
        (0..self.dim()).map(|i| self.stress(i)).collect()
    }

    fn span(&self) -> &Echelon {
        self.span.get_or_init(|| {
            let mut e = Echelon::new();
            for v in &self.vectors {
                e.insert(v);
            }
            e
        })
    }

    /// Whether `s` is an element of this space.
    pub fn contains(&self, s: &Stress) -> bool {
        if s.is_zero() {
            return true;
        }
        if self.degree < 0 || s.degree() as isize != self.degree {
            return false;
        }
        match self.basis.coordinates(s) {
            Some(v) => self.span().contains(&v),
            None => false,
        }
    }

    /// Integer combination of the basis with coefficients in `[-9, 9]`.
    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Stress {
        let mut acc: BTreeMap<usize, BigRational> = BTreeMap::new();
        for v in &self.vectors {
            let c = BigRational::from_integer(BigInt::from(rng.gen_range(-9i32..=9)));
            if c.is_zero() {
                continue;
            }
            for (i, x) in v {
                *acc.entry(*i).or_insert_with(BigRational::zero) += x * &c;
            }
        }
        let v: SparseVec = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
        self.basis.polynomial(&v)
    }
}

pub fn coordinate_params(geo: &GeometricComplex) -> Vec<LinearDifferential> {
    (0..geo.ambient_dim()).map(|j| LinearDifferential::new(geo.coordinate_row(j))).collect()
}

fn constraint_matrix(basis: &MonomialBasis, lower: &MonomialBasis, params: &[LinearDifferential]) -> RationalMatrix {
    let block = lower.len();
    let mut rows: Vec<SparseVec> = vec![Vec::new(); block * params.len()];
    for (col, m) in basis.monomials().iter().enumerate() {
        for i in m.support().vertices() {
            let Some(target) = lower.index_of(&m.lowered(i)) else { continue };
            let a = BigRational::from_integer(BigInt::from(m.exponents()[i]));
            for (j, p) in params.iter().enumerate() {
                let c = p.coeff(i);
                if !c.is_zero() {
                    rows[j * block + target].push((col, c * &a));
                }
            }
        }
    }
    RationalMatrix::from_sparse_rows(basis.len(), rows)
}

/// Rank data of a linear map between two stress spaces.
#[derive(Clone, Debug)]
pub struct MapRank {
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    /// A nonzero element of the kernel, when there is one.
    pub kernel_witness: Option<Stress>,
    /// Whether every image landed in the target space.
    pub image_in_target: bool,
}

impl MapRank {
    pub fn kernel_dim(&self) -> usize {
        self.source_dim - self.rank
    }

    pub fn cokernel_dim(&self) -> usize {
        self.target_dim.saturating_sub(self.rank)
    }

    pub fn is_surjective(&self) -> bool {
        self.image_in_target && self.rank == self.target_dim
    }

    pub fn is_injective(&self) -> bool {
        self.rank == self.source_dim
    }
}

/// Images of the basis of `source` under `op` applied `power` times, in the
/// monomial coordinates of `target` (terms outside the target basis dropped).
pub fn images(op: &LinearDifferential, power: usize, source: &StressSpace, target: &StressSpace) -> Vec<SparseVec> {
    (0..source.dim())
        .map(|i| {
            let mut s = source.stress(i);
            for _ in 0..power {
                s = s.apply(op);
            }
            if target.degree < 0 {
                Vec::new()
            } else {
                target.basis.project(&s)
            }
        })
        .collect()
}

/// Rank of `op^power : source → target`.
pub fn map_rank_power(op: &LinearDifferential, power: usize, source: &StressSpace, target: &StressSpace) -> MapRank {
    let imgs = images(op, power, source, target);
    let image_in_target = imgs.iter().all(|v| v.is_empty() || target.span().contains(v));
    let m = RationalMatrix::from_columns(target.basis.len(), &imgs);
    let kernel = linalg::kernel_basis(&m);
    let rank = source.dim() - kernel.len();
    let kernel_witness = kernel.first().map(|c| {
        let mut acc = Stress::zero(source.basis.n, source.degree.max(0) as usize);
        for (i, x) in c.iter().enumerate() {
            if !x.is_zero() {
                acc = acc.add(&source.stress(i).scale(x));
            }
        }
        acc
    });
    MapRank { source_dim: source.dim(), target_dim: target.dim(), rank, kernel_witness, image_in_target }
}

pub fn map_rank(op: &LinearDifferential, source: &StressSpace, target: &StressSpace) -> MapRank {
    map_rank_power(op, 1, source, target)
}

/// Rank of a family of stresses inside the monomial coordinates of `space`.
pub fn span_rank(space: &StressSpace, stresses: &[Stress]) -> usize {
    let mut e = Echelon::new();
    for s in stresses {
        e.insert(&space.basis.project(s));
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compositions_cover_all_supports() {
        let tri = AbstractComplex::simplex(3, Face::full(3));
        let b = MonomialBasis::new(&tri, None, 3);
        assert_eq!(b.len(), 10);
        assert_eq!(b.monomials()[0].exponents(), &[3, 0, 0]);
        let rel = MonomialBasis::new(&tri, Some(&tri.skeleton(1)), 3);
        assert_eq!(rel.len(), 1);
    }

    #[test]
    fn apply_lowers_degree() {
        let m = Monomial::from_exponents(vec![2, 1]);
        let s = Stress::from_terms(2, 3, [(m, BigRational::one())]);
        let d = s.apply(&LinearDifferential::ones(2));
        assert_eq!(d.degree(), 2);
        assert_eq!(d.coefficient(&Monomial::from_exponents(vec![1, 1])), BigRational::from_integer(2.into()));
        assert_eq!(d.coefficient(&Monomial::from_exponents(vec![2, 0])), BigRational::one());
    }

    #[test]
    fn degree_zero_differential_vanishes() {
        let s = Stress::from_terms(2, 0, [(Monomial::constant(2), BigRational::one())]);
        assert!(s.apply(&LinearDifferential::ones(2)).is_zero());
    }
}
