//! Reduced simplicial homology over `ℚ` and the checks built on it.
//!
//! Chain groups include `C_{-1} = ℚ·∅` (augmentation), so `{∅}` has
//! `β̃_{-1} = 1` while the void complex has no homology at all.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::chordality::{self, BadSet};
use crate::complex::{AbstractComplex, Face, GeometricComplex};
use crate::differential::LinearDifferential;
use crate::error::{Error, Result};
use crate::io::RationalString;
use crate::linalg::{self, Echelon, RationalMatrix, SparseVec};
use crate::report::{Certificate, Hypothesis, Report, Verdict};
use crate::stress::{self, StressSpace};

/// Default largest ground set for exhaustive subset enumeration.
pub const DEFAULT_SUBSET_CAP: usize = 14;

/// Signed boundary of a face: `∂σ = Σ_i (-1)^i (σ ∖ v_i)`.
pub fn face_boundary(sigma: Face) -> Vec<(Face, i64)> {
    sigma
        .vertices()
        .enumerate()
        .map(|(i, v)| (sigma.without(v), if i % 2 == 0 { 1 } else { -1 }))
        .collect()
}

/// Augmented simplicial chain complex with rational coefficients.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    /// `faces[s]` is the ordered basis of `C_{s-1}`.
    faces: Vec<Vec<Face>>,
    index: Vec<HashMap<Face, usize>>,
}

impl ChainComplex {
    pub fn new(complex: &AbstractComplex) -> Self {
        let faces: Vec<Vec<Face>> = complex.f_vector().iter().enumerate().map(|(s, _)| complex.faces_of_size(s).to_vec()).collect();
        let index = faces.iter().map(|b| b.iter().enumerate().map(|(i, f)| (*f, i)).collect()).collect();
        let chain = ChainComplex { faces, index };
        debug_assert!(chain.boundary_squares_to_zero(), "∂∂ ≠ 0");
        chain
    }

    /// Checks `∂_{k-1} ∘ ∂_k = 0` face by face.
    pub fn boundary_squares_to_zero(&self) -> bool {
        self.faces.iter().flatten().all(|&sigma| {
            let mut acc: HashMap<Face, i64> = HashMap::new();
            for (tau, s) in face_boundary(sigma) {
                for (rho, t) in face_boundary(tau) {
                    *acc.entry(rho).or_default() += s * t;
                }
            }
            acc.values().all(|v| *v == 0)
        })
    }

    /// Basis of `C_i`.
    pub fn basis(&self, i: isize) -> &[Face] {
        usize::try_from(i + 1).ok().and_then(|s| self.faces.get(s)).map_or(&[], |v| v.as_slice())
    }

    fn position(&self, face: Face) -> Option<usize> {
        self.index.get(face.len())?.get(&face).copied()
    }

    /// Image of a basis element of `C_i` under `∂_i`, in the basis of
    /// `C_{i-1}`.
    fn boundary_vector(&self, sigma: Face) -> SparseVec {
        let mut v: SparseVec = face_boundary(sigma)
            .into_iter()
            .map(|(tau, s)| (self.position(tau).expect("boundary face present"), BigRational::from_integer(s.into())))
            .collect();
        v.sort_by_key(|(i, _)| *i);
        v
    }

    /// Matrix of `∂_i : C_i → C_{i-1}`.
    pub fn boundary_matrix(&self, i: isize) -> RationalMatrix {
        let cols: Vec<SparseVec> = self.basis(i).iter().map(|f| self.boundary_vector(*f)).collect();
        RationalMatrix::from_columns(self.basis(i - 1).len(), &cols)
    }

    fn boundary_rank(&self, i: isize) -> usize {
        if i <= -1 {
            return 0;
        }
        let mut e = Echelon::new();
        for f in self.basis(i) {
            e.insert(&self.boundary_vector(*f));
        }
        e.rank()
    }

    pub fn top_dim(&self) -> isize {
        self.faces.len() as isize - 2
    }

    pub fn reduced_betti(&self) -> ReducedBetti {
        let top = self.top_dim();
        let ranks: Vec<usize> = (-1..=top + 1).map(|i| self.boundary_rank(i)).collect();
        let values = (-1..=top)
            .map(|i| {
                let k = (i + 1) as usize;
                self.basis(i).len() - ranks[k] - ranks[k + 1]
            })
            .collect();
        ReducedBetti { values }
    }
}

/// Reduced Betti numbers `β̃_{-1}, β̃_0, ..., β̃_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedBetti {
    values: Vec<usize>,
}

impl ReducedBetti {
    /// `β̃_i`, zero outside the stored range.
    pub fn get(&self, i: isize) -> usize {
        usize::try_from(i + 1).ok().and_then(|k| self.values.get(k)).copied().unwrap_or(0)
    }

    /// `(β̃_0, ..., β̃_dim)`.
    pub fn from_zero(&self) -> Vec<usize> {
        self.values.iter().skip(1).copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|b| *b == 0)
    }

    /// First `i` with `β̃_i ≠ 0`.
    pub fn first_nonzero(&self) -> Option<isize> {
        self.values.iter().position(|b| *b != 0).map(|k| k as isize - 1)
    }
}

impl Serialize for ReducedBetti {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Shape<'a> {
            minus_one: usize,
            from_zero: &'a [usize],
        }
        let minus_one = self.values.first().copied().unwrap_or(0);
        Shape { minus_one, from_zero: self.values.get(1..).unwrap_or(&[]) }.serialize(s)
    }
}

pub fn reduced_betti(complex: &AbstractComplex) -> ReducedBetti {
    ChainComplex::new(complex).reduced_betti()
}

/// Whether every link `Lk_σ` (including `σ = ∅`) has the reduced homology of
/// a sphere of dimension `dim Δ - |σ|`.
pub fn is_homology_sphere(complex: &AbstractComplex) -> bool {
    if complex.is_void() || !complex.is_pure() {
        return false;
    }
    let dim = complex.dim();
    complex.faces().all(|sigma| {
        let b = reduced_betti(&complex.link(sigma).expect("face of the complex"));
        let top = dim - sigma.len() as isize;
        (-1..=top).all(|i| b.get(i) == usize::from(i == top))
    })
}

/// Reisner criterion and depth.
#[derive(Clone, Debug, Serialize)]
pub struct ReisnerReport {
    pub cohen_macaulay: bool,
    /// First face (in size order) whose link has homology below the
    /// allowed range, with the offending degree.
    pub witness: Option<(Face, isize)>,
    /// `dim Δ + 1`.
    pub krull_dim: usize,
    /// Depth from link homology: `min_σ (first nonzero β̃_i(Lk_σ) + |σ| + 1)`.
    pub depth_from_links: usize,
    /// Largest `t` such that the skeleton `Δ^(≤ t-1)` is Cohen-Macaulay.
    pub depth_from_skeleta: usize,
}

fn reisner_witness(complex: &AbstractComplex) -> Option<(Face, isize)> {
    let dim = complex.dim();
    for sigma in complex.faces() {
        let b = reduced_betti(&complex.link(sigma).expect("face of the complex"));
        let bound = dim - sigma.len() as isize;
        if let Some(i) = (-1..bound).find(|&i| b.get(i) != 0) {
            return Some((sigma, i));
        }
    }
    None
}

fn depth_from_links(complex: &AbstractComplex) -> usize {
    let krull = (complex.dim() + 1).max(0) as usize;
    complex
        .faces()
        .filter_map(|sigma| {
            let b = reduced_betti(&complex.link(sigma).expect("face of the complex"));
            b.first_nonzero().map(|i| (i + sigma.len() as isize + 1).max(0) as usize)
        })
        .min()
        .unwrap_or(krull)
        .min(krull)
}

pub fn reisner_cm_check(complex: &AbstractComplex) -> ReisnerReport {
    let witness = if complex.is_void() { None } else { reisner_witness(complex) };
    let krull_dim = (complex.dim() + 1).max(0) as usize;
    let depth_from_skeleta = (0..=krull_dim)
        .rev()
        .find(|&t| reisner_witness(&complex.skeleton(t as isize - 1)).is_none())
        .unwrap_or(0);
    ReisnerReport {
        cohen_macaulay: witness.is_none(),
        witness,
        krull_dim,
        depth_from_links: if complex.is_void() { 0 } else { depth_from_links(complex) },
        depth_from_skeleta,
    }
}

impl Certificate for ReisnerReport {
    fn report(&self) -> Report {
        let verdict = if self.cohen_macaulay { Verdict::Verified } else { Verdict::Violated };
        let witness = self.witness.map(|(f, i)| serde_json::json!({"face": f, "degree": i}));
        Report::new("reisner", Vec::new(), verdict, witness, self)
    }
}

/// A rational chain: faces with coefficients.
pub type Chain = Vec<(Face, BigRational)>;

/// Outcome of the resolution chordality check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ResolutionVerdict {
    /// A chain `c` with `∂c = z` and `c^(0) = z^(0)`.
    Resolvable(Chain),
    NotResolvable,
    /// Every `β̃_k(Δ_W)` vanishes, so every `k`-cycle has a resolution.
    ChordalCertified,
    /// A `k`-cycle that does not bound inside its own vertex set.
    NotChordal(Chain),
    Inconclusive,
}

fn chain_boundary(chain: &Chain) -> HashMap<Face, BigRational> {
    let mut acc: HashMap<Face, BigRational> = HashMap::new();
    for (f, c) in chain {
        for (t, s) in face_boundary(*f) {
            *acc.entry(t).or_insert_with(BigRational::zero) += c * BigRational::from_integer(s.into());
        }
    }
    acc.retain(|_, v| !v.is_zero());
    acc
}

/// Decides whether the `k`-cycle `z` bounds inside `Δ_{z^(0)}`.
pub fn resolve_cycle(complex: &AbstractComplex, k: isize, z: &Chain) -> Result<ResolutionVerdict> {
    if let Some((f, _)) = z.iter().find(|(f, _)| f.dim() != k || !complex.contains(*f)) {
        return Err(Error::Contract(format!("{f} is not a {k}-face of the complex")));
    }
    if !chain_boundary(z).is_empty() {
        return Err(Error::Contract("the given chain is not a cycle".into()));
    }
    let support = z.iter().filter(|(_, c)| !c.is_zero()).fold(Face::EMPTY, |a, (f, _)| a.union(*f));
    let sub = complex.induced(support);
    let chain = ChainComplex::new(&sub);
    let rows = chain.basis(k).len();
    let m = chain.boundary_matrix(k + 1);
    let mut b = vec![BigRational::zero(); rows];
    for (f, c) in z {
        if let Some(i) = chain.position(*f) {
            b[i] += c;
        }
    }
    if rows == 0 {
        return Ok(ResolutionVerdict::Resolvable(Vec::new()));
    }
    Ok(match linalg::solve(&m, &b) {
        Some(x) => ResolutionVerdict::Resolvable(
            chain.basis(k + 1).iter().zip(x).filter(|(_, c)| !c.is_zero()).map(|(f, c)| (*f, c)).collect(),
        ),
        None => ResolutionVerdict::NotResolvable,
    })
}

/// A `k`-cycle of `complex` that is not a boundary, if `β̃_k ≠ 0`.
pub fn nonbounding_cycle(complex: &AbstractComplex, k: isize) -> Option<Chain> {
    let chain = ChainComplex::new(complex);
    let mut boundaries = Echelon::new();
    for f in chain.basis(k + 1) {
        boundaries.insert(&chain.boundary_vector(*f));
    }
    let cycles = linalg::kernel_basis_sparse(&chain.boundary_matrix(k));
    let z = cycles.into_iter().find(|z| !boundaries.contains(z))?;
    Some(z.into_iter().map(|(i, c)| (chain.basis(k)[i], c)).collect())
}

fn check_cap(complex: &AbstractComplex, cap: usize) -> Result<()> {
    let n = complex.vertex_set().len();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(())
}

/// Global resolution `k`-chordality: `β̃_k(Δ_W) = 0` for every vertex set `W`
/// certifies it; a nonzero group yields a cycle whose lack of resolution is
/// then confirmed by [`resolve_cycle`].
pub fn resolution_chordal_check(complex: &AbstractComplex, k: isize, cap: usize) -> Result<ResolutionVerdict> {
    check_cap(complex, cap)?;
    for w in complex.vertex_set().subsets() {
        let sub = complex.induced(w);
        if reduced_betti(&sub).get(k) == 0 {
            continue;
        }
        let Some(z) = nonbounding_cycle(&sub, k) else { return Ok(ResolutionVerdict::Inconclusive) };
        return Ok(match resolve_cycle(complex, k, &z)? {
            ResolutionVerdict::NotResolvable => ResolutionVerdict::NotChordal(z),
            _ => ResolutionVerdict::Inconclusive,
        });
    }
    Ok(ResolutionVerdict::ChordalCertified)
}

/// `g_i = dim S_i - dim S_{i-1}` from stress dimensions.
pub fn stress_g(geo: &GeometricComplex, i: isize) -> i64 {
    StressSpace::of(geo, i, None).dim() as i64 - StressSpace::of(geo, i - 1, None).dim() as i64
}

/// Whether `geo` is a homology sphere of dimension `d - 1` in `ℝ^d`.
pub fn is_polytope_like_sphere(geo: &GeometricComplex) -> bool {
    geo.complex().dim() + 1 == geo.ambient_dim() as isize && is_homology_sphere(geo.complex())
}

/// One bound of the induced-subcomplex Betti theorem.
#[derive(Clone, Debug, Serialize)]
pub struct BettiBound {
    /// `"-g_{k+1}"` (applies for `k ≥ d/2`) or `"g_k"` (for `k ≤ d/2`).
    pub name: String,
    pub value: i64,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SubsetBettiReport {
    pub k: isize,
    pub sphere: bool,
    pub max_betti: usize,
    pub argmax: Face,
    pub bounds: Vec<BettiBound>,
    pub subsets_checked: usize,
}

/// Maximum of `β̃_{k-1}(Δ_W)` over all vertex sets `W`, compared with
/// `-g_{k+1}` when `k ≥ d/2` and with `g_k` when `k ≤ d/2`.
pub fn subset_betti_bound_check(geo: &GeometricComplex, k: isize, cap: usize) -> Result<SubsetBettiReport> {
    let complex = geo.complex();
    check_cap(complex, cap)?;
    let d = geo.ambient_dim() as isize;
    let mut best: Option<(usize, Face)> = None;
    let mut count = 0;
    for w in complex.vertex_set().subsets() {
        count += 1;
        let b = reduced_betti(&complex.induced(w)).get(k - 1);
        if best.is_none_or(|(m, _)| b > m) {
            best = Some((b, w));
        }
    }
    let (max_betti, argmax) = best.expect("at least the empty vertex set");
    let mut bounds = Vec::new();
    if 2 * k >= d {
        let value = -stress_g(geo, k + 1);
        bounds.push(BettiBound { name: "-g_{k+1}".into(), value, holds: max_betti as i64 <= value });
    }
    if 2 * k <= d {
        let value = stress_g(geo, k);
        bounds.push(BettiBound { name: "g_k".into(), value, holds: max_betti as i64 <= value });
    }
    Ok(SubsetBettiReport { k, sphere: is_polytope_like_sphere(geo), max_betti, argmax, bounds, subsets_checked: count })
}

impl Certificate for SubsetBettiReport {
    fn report(&self) -> Report {
        let holds = self.bounds.iter().all(|b| b.holds);
        let verdict = if !self.sphere { Verdict::NotApplicable } else if holds { Verdict::Verified } else { Verdict::Violated };
        let hyps = vec![Hypothesis::new("polytope boundary (homology sphere of dimension d-1)", self.sphere)];
        Report::new("subset-betti", hyps, verdict, serde_json::json!({"argmax": self.argmax}), self)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BadSetBettiReport {
    pub k: isize,
    pub g_next: i64,
    pub bad_set: BadSet,
    /// A vertex set `W` with `β̃_{k-1}(Δ_{W ∪ ℰ}) ≠ 0`, if any.
    pub counterexample: Option<Face>,
    pub subsets_checked: usize,
}

/// `β̃_{k-1}(Δ_{W ∪ ℰ}) = 0` for every `W`, where `ℰ` is the weak bad set of
/// `ω` in degree `k`; applicable when `g_{k+1} ≥ 0`.
pub fn bad_set_betti_check(geo: &GeometricComplex, k: isize, omega: &LinearDifferential, cap: usize) -> Result<BadSetBettiReport> {
    let complex = geo.complex();
    check_cap(complex, cap)?;
    let bad_set = chordality::weak_chordality_bad_set(geo, k, omega);
    let g_next = stress_g(geo, k + 1);
    let rest = complex.vertex_set().minus(bad_set.vertices);
    let mut counterexample = None;
    let mut count = 0;
    for w in rest.subsets() {
        count += 1;
        if reduced_betti(&complex.induced(w.union(bad_set.vertices))).get(k - 1) != 0 {
            counterexample = Some(w);
            break;
        }
    }
    Ok(BadSetBettiReport { k, g_next, bad_set, counterexample, subsets_checked: count })
}

impl Certificate for BadSetBettiReport {
    fn report(&self) -> Report {
        let applicable = self.g_next >= 0;
        let verdict = Verdict::from_checks(applicable, self.counterexample.is_none());
        let hyps = vec![Hypothesis::with_detail("g_{k+1} >= 0", applicable, format!("g_{{k+1}} = {}", self.g_next))];
        Report::new("bad-set-betti", hyps, verdict, serde_json::json!({"W": self.counterexample}), self)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IsoTayReport {
    pub d: usize,
    pub hypothesis: bool,
    pub dim_top_stresses: usize,
    pub rank_delta: usize,
    pub quotient_dim: usize,
    pub betti: usize,
}

/// `dim S_d / δ S_{d+1}` against `β̃_{d-1}` for a proper `(d-1)`-complex in
/// `ℝ^d`.
pub fn iso_tay_check(geo: &GeometricComplex) -> IsoTayReport {
    let d = geo.ambient_dim();
    let hypothesis = geo.is_proper() && geo.complex().dim() == d as isize - 1;
    let top = StressSpace::of(geo, d as isize, None);
    let above = StressSpace::of(geo, d as isize + 1, None);
    let r = stress::map_rank(&LinearDifferential::ones(geo.ground_size()), &above, &top);
    let betti = reduced_betti(geo.complex()).get(d as isize - 1);
    IsoTayReport {
        d,
        hypothesis,
        dim_top_stresses: top.dim(),
        rank_delta: r.rank,
        quotient_dim: top.dim() - r.rank,
        betti,
    }
}

impl Certificate for IsoTayReport {
    fn report(&self) -> Report {
        let verdict = Verdict::from_checks(self.hypothesis, self.quotient_dim == self.betti);
        let hyps = vec![Hypothesis::new("proper (d-1)-complex in R^d", self.hypothesis)];
        Report::new("iso-tay", hyps, verdict, serde_json::Value::Null, self)
    }
}

/// Serializable form of a chain.
pub fn chain_json(chain: &Chain) -> Vec<(Face, RationalString)> {
    chain.iter().map(|(f, c)| (*f, RationalString::from(c))).collect()
}

/// Chain with every coefficient 1.
pub fn unit_chain(faces: &[Face]) -> Chain {
    faces.iter().map(|f| (*f, BigRational::one())).collect()
}

/// Chain with integer coefficients.
pub fn int_chain(faces: &[(Face, i64)]) -> Chain {
    faces.iter().map(|(f, c)| (*f, BigRational::from_integer(BigInt::from(*c)))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face(vs: &[usize]) -> Face {
        vs.iter().map(|v| v - 1).collect()
    }

    fn bowtie() -> AbstractComplex {
        AbstractComplex::new(5, [face(&[1, 2, 3]), face(&[3, 4, 5])])
    }

    #[test]
    fn betti_of_small_complexes() {
        let edges = AbstractComplex::new(4, [face(&[1, 2]), face(&[3, 4])]);
        assert_eq!(reduced_betti(&edges).from_zero(), vec![1, 0]);
        assert_eq!(reduced_betti(&AbstractComplex::empty_face(3)).get(-1), 1);
        assert!(reduced_betti(&AbstractComplex::void(3)).is_zero());
    }

    #[test]
    fn bowtie_is_not_cohen_macaulay() {
        let r = reisner_cm_check(&bowtie());
        assert!(!r.cohen_macaulay);
        assert_eq!(r.witness, Some((face(&[3]), 0)));
        assert_eq!(r.depth_from_links, r.depth_from_skeleta);
        assert_eq!(r.depth_from_links, 2);
    }

    #[test]
    fn square_cycle_has_no_resolution() {
        let square = AbstractComplex::new(4, [face(&[1, 2]), face(&[2, 3]), face(&[3, 4]), face(&[1, 4])]);
        let z = int_chain(&[(face(&[1, 2]), 1), (face(&[2, 3]), 1), (face(&[3, 4]), 1), (face(&[1, 4]), -1)]);
        assert_eq!(resolve_cycle(&square, 1, &z).unwrap(), ResolutionVerdict::NotResolvable);
        assert!(matches!(resolution_chordal_check(&square, 1, 14).unwrap(), ResolutionVerdict::NotChordal(_)));
    }

    #[test]
    fn non_cycle_is_rejected() {
        let square = AbstractComplex::new(4, [face(&[1, 2]), face(&[2, 3])]);
        let z = unit_chain(&[face(&[1, 2])]);
        assert!(resolve_cycle(&square, 1, &z).is_err());
    }
}
