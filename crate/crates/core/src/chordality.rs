//! Toric chordality: certificates, bad-vertex sets, propagation, and the
//! cut check.
//!
//! `(Δ, ω)` is toric `k`-chordal when `ω : S_{k+1} → S_k` is onto and
//! `ω : S_k → S_{k-1}` is one-to-one, and weakly toric `k`-chordal when the
//! second map is one-to-one on `S_k(St_v)` for every vertex `v`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::complex::{AbstractComplex, Face, GeometricComplex};
use crate::cone;
use crate::differential::LinearDifferential;
use crate::error::{Error, Result};
use crate::homology::{self, ReisnerReport};
use crate::io::{self, StressTerm};
use crate::linalg::{self, RationalMatrix, SparseVec};
use crate::report::{Certificate, Hypothesis, Report, Verdict};
use crate::stress::{self, coordinate_params, MapRank, Stress, StressSpace};

/// Rank data of one map, without the witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankSummary {
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub kernel_dim: usize,
    pub cokernel_dim: usize,
    pub image_in_target: bool,
}

impl RankSummary {
    pub fn is_surjective(&self) -> bool {
        self.image_in_target && self.cokernel_dim == 0
    }

    pub fn is_injective(&self) -> bool {
        self.kernel_dim == 0
    }
}

impl From<&MapRank> for RankSummary {
    fn from(r: &MapRank) -> Self {
        RankSummary {
            source_dim: r.source_dim,
            target_dim: r.target_dim,
            rank: r.rank,
            kernel_dim: r.kernel_dim(),
            cokernel_dim: r.cokernel_dim(),
            image_in_target: r.image_in_target,
        }
    }
}

/// Injectivity of `ω : S_k(St_v) → S_{k-1}(St_v)` at one vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexInjectivity {
    pub vertex: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub injective: bool,
}

/// Vertices at which star-wise injectivity fails, with the bound
/// `((k+1) g_{k+1} + (d+1-k) g_k)_+`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BadSet {
    pub k: isize,
    pub vertices: Face,
    pub per_vertex: Vec<VertexInjectivity>,
    pub g_k: i64,
    pub g_next: i64,
    pub bound: i64,
    pub within_bound: bool,
    /// Whether the complex is a homology `(d-1)`-sphere in `ℝ^d`, the setting
    /// in which the bound is a theorem.
    pub sphere: bool,
}

impl BadSet {
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

impl Certificate for BadSet {
    fn report(&self) -> Report {
        let verdict = Verdict::from_checks(self.sphere, self.within_bound);
        let verdict = if verdict == Verdict::HypothesesNotMet { Verdict::NotApplicable } else { verdict };
        let hyps = vec![Hypothesis::new("polytope boundary (homology sphere of dimension d-1)", self.sphere)];
        Report::new("weak-bad-set", hyps, verdict, json!({"bad_set": self.vertices}), self)
    }
}

/// Star-wise injectivity of `ω` in degree `k` at every vertex.
pub fn star_injectivity(geo: &GeometricComplex, k: isize, omega: &LinearDifferential) -> Vec<VertexInjectivity> {
    geo.complex()
        .vertices()
        .into_iter()
        .map(|v| {
            let star = cone::star_of(geo, v).expect("vertex of the complex");
            let src = StressSpace::of(&star, k, None);
            let tgt = StressSpace::of(&star, k - 1, None);
            let r = stress::map_rank(omega, &src, &tgt);
            VertexInjectivity {
                vertex: v + 1,
                source_dim: r.source_dim,
                target_dim: r.target_dim,
                rank: r.rank,
                injective: r.is_injective(),
            }
        })
        .collect()
}

fn bound_value(d: usize, k: isize, g_k: i64, g_next: i64) -> i64 {
    ((k as i64 + 1) * g_next + (d as i64 + 1 - k as i64) * g_k).max(0)
}

fn assemble_bad_set(geo: &GeometricComplex, k: isize, omega: &LinearDifferential, dims: [usize; 3]) -> BadSet {
    let [below, at, above] = dims.map(|x| x as i64);
    let per_vertex = star_injectivity(geo, k, omega);
    let vertices: Face = per_vertex.iter().filter(|p| !p.injective).map(|p| p.vertex - 1).collect();
    let (g_k, g_next) = (at - below, above - at);
    let bound = bound_value(geo.ambient_dim(), k, g_k, g_next);
    BadSet {
        k,
        within_bound: vertices.len() as i64 <= bound,
        vertices,
        per_vertex,
        g_k,
        g_next,
        bound,
        sphere: homology::is_polytope_like_sphere(geo),
    }
}

/// `ℰ = {v : ω not injective on S_k(St_v) → S_{k-1}(St_v)}` and its bound.
pub fn weak_chordality_bad_set(geo: &GeometricComplex, k: isize, omega: &LinearDifferential) -> BadSet {
    let dims = [k - 1, k, k + 1].map(|i| StressSpace::of(geo, i, None).dim());
    assemble_bad_set(geo, k, omega, dims)
}

/// Rank certificate for toric `k`-chordality.
#[derive(Clone, Debug, Serialize)]
pub struct ChordalityCertificate {
    pub k: isize,
    pub omega: LinearDifferential,
    pub proper: bool,
    /// `ω : S_{k+1} → S_k`.
    pub surjection: RankSummary,
    /// `ω : S_k → S_{k-1}`.
    pub injection: RankSummary,
    /// A nonzero element of the kernel of the injection, when it fails.
    pub kernel_witness: Option<Vec<StressTerm>>,
    pub bad_set: BadSet,
}

impl ChordalityCertificate {
    pub fn is_toric_chordal(&self) -> bool {
        self.surjection.is_surjective() && self.injection.is_injective()
    }

    pub fn is_weakly_toric_chordal(&self) -> bool {
        self.bad_set.is_empty()
    }

    /// Which rank condition failed, if any.
    pub fn failure(&self) -> Option<serde_json::Value> {
        if !self.surjection.is_surjective() {
            return Some(json!({
                "failed": "surjection S_{k+1} -> S_k",
                "cokernel_dim": self.surjection.cokernel_dim,
            }));
        }
        if !self.injection.is_injective() {
            return Some(json!({
                "failed": "injection S_k -> S_{k-1}",
                "kernel_dim": self.injection.kernel_dim,
                "kernel_vector": self.kernel_witness,
            }));
        }
        None
    }
}

impl Certificate for ChordalityCertificate {
    fn report(&self) -> Report {
        let verdict = Verdict::from_checks(self.proper, self.is_toric_chordal());
        let hyps = vec![Hypothesis::new("proper", self.proper)];
        Report::new("certify-chordal", hyps, verdict, self.failure(), self)
    }
}

pub fn certify_toric_chordal(geo: &GeometricComplex, k: isize, omega: &LinearDifferential) -> ChordalityCertificate {
    let below = StressSpace::of(geo, k - 1, None);
    let at = StressSpace::of(geo, k, None);
    let above = StressSpace::of(geo, k + 1, None);
    let surjection = stress::map_rank(omega, &above, &at);
    let injection = stress::map_rank(omega, &at, &below);
    let bad_set = assemble_bad_set(geo, k, omega, [below.dim(), at.dim(), above.dim()]);
    ChordalityCertificate {
        k,
        omega: omega.clone(),
        proper: geo.is_proper(),
        surjection: RankSummary::from(&surjection),
        injection: RankSummary::from(&injection),
        kernel_witness: injection.kernel_witness.as_ref().map(io::stress_terms),
        bad_set,
    }
}

/// Vertex supports of `γ` and `ωγ` against the sandwich
/// `γ^(0) ∖ ℰ ⊆ (ωγ)^(0) ⊆ γ^(0)`.
#[derive(Clone, Debug, Serialize)]
pub struct SupportReport {
    pub k: isize,
    pub gamma_support: Face,
    pub image_support: Face,
    pub bad_set: Face,
    /// `(ωγ)^(0) ⊆ γ^(0)`.
    pub upper: bool,
    /// `γ^(0) ∖ ℰ ⊆ (ωγ)^(0)`.
    pub lower: bool,
    pub equal: bool,
}

impl SupportReport {
    /// The sandwich holds, and when `ℰ = ∅` the supports are equal.
    pub fn holds(&self) -> bool {
        self.upper && self.lower && (!self.bad_set.is_empty() || self.equal)
    }
}

impl Certificate for SupportReport {
    fn report(&self) -> Report {
        let verdict = if self.holds() { Verdict::Verified } else { Verdict::Violated };
        let hyps = vec![Hypothesis::new("gamma in S_{k+1}", true)];
        Report::new("support-preservation", hyps, verdict, serde_json::Value::Null, self)
    }
}

/// Support comparison for `γ ∈ S_{k+1}` given the degree-`k` bad set of `ω`.
pub fn support_sandwich(gamma: &Stress, omega: &LinearDifferential, bad: &BadSet) -> SupportReport {
    let before = gamma.vertex_support();
    let after = gamma.apply(omega).vertex_support();
    SupportReport {
        k: bad.k,
        gamma_support: before,
        image_support: after,
        bad_set: bad.vertices,
        upper: after.is_subset(before),
        lower: before.minus(bad.vertices).is_subset(after),
        equal: before == after,
    }
}

pub fn support_preservation_check(
    geo: &GeometricComplex,
    k: isize,
    omega: &LinearDifferential,
    gamma: &Stress,
) -> Result<SupportReport> {
    if !gamma.is_zero() && gamma.degree() as isize != k + 1 {
        return Err(Error::Contract(format!("expected a stress of degree {}, got degree {}", k + 1, gamma.degree())));
    }
    if !StressSpace::of(geo, k + 1, None).contains(gamma) {
        return Err(Error::Contract("the given polynomial is not a stress of the complex".into()));
    }
    Ok(support_sandwich(gamma, omega, &weak_chordality_bad_set(geo, k, omega)))
}

/// Both sides of `Σ_v g_k(Lk_v) = (k+1) g_{k+1} + (d+1-k) g_k`.
#[derive(Clone, Debug, Serialize)]
pub struct McMullenReport {
    pub k: isize,
    pub sphere: bool,
    /// `(vertex, g_k(L̂k_v))`.
    pub link_g: Vec<(usize, i64)>,
    pub lhs: i64,
    pub rhs: i64,
}

impl Certificate for McMullenReport {
    fn report(&self) -> Report {
        let verdict = match (self.sphere, self.lhs == self.rhs) {
            (false, _) => Verdict::NotApplicable,
            (true, true) => Verdict::Verified,
            (true, false) => Verdict::Violated,
        };
        let hyps = vec![Hypothesis::new("proper homology sphere of dimension d-1 in R^d", self.sphere)];
        Report::new("mcmullen", hyps, verdict, serde_json::Value::Null, self)
    }
}

pub fn mcmullen_integral_check(geo: &GeometricComplex, k: isize) -> Result<McMullenReport> {
    let mut link_g = Vec::new();
    for v in geo.complex().vertices() {
        let link = cone::projected_link(geo, v)?;
        link_g.push((v + 1, homology::stress_g(&link, k)));
    }
    let lhs = link_g.iter().map(|(_, g)| g).sum();
    let d = geo.ambient_dim() as i64;
    let rhs = (k as i64 + 1) * homology::stress_g(geo, k + 1) + (d + 1 - k as i64) * homology::stress_g(geo, k);
    Ok(McMullenReport { k, sphere: geo.is_proper() && homology::is_polytope_like_sphere(geo), link_g, lhs, rhs })
}

/// Toric `k`-chordality plus no missing `(k+1)`-faces against toric
/// `(k+1)`-chordality.
#[derive(Clone, Debug, Serialize)]
pub struct PropagationReport {
    pub k: isize,
    pub base: ChordalityCertificate,
    pub missing_faces: Vec<Face>,
    pub next: ChordalityCertificate,
}

impl PropagationReport {
    pub fn hypotheses_hold(&self) -> bool {
        self.base.is_toric_chordal() && self.missing_faces.is_empty()
    }
}

impl Certificate for PropagationReport {
    fn report(&self) -> Report {
        let hyps = vec![
            Hypothesis::new("toric k-chordal", self.base.is_toric_chordal()),
            Hypothesis::new("no missing faces of dimension k+1", self.missing_faces.is_empty()),
        ];
        let verdict = Verdict::from_checks(self.hypotheses_hold(), self.next.is_toric_chordal());
        let witness = if let Some(f) = self.base.failure() {
            f
        } else if let Some(face) = self.missing_faces.first() {
            json!({"missing_face": face})
        } else {
            self.next.failure().unwrap_or(serde_json::Value::Null)
        };
        Report::new("propagation", hyps, verdict, witness, self)
    }
}

pub fn propagation_verify(geo: &GeometricComplex, k: isize, omega: &LinearDifferential) -> PropagationReport {
    PropagationReport {
        k,
        base: certify_toric_chordal(geo, k, omega),
        missing_faces: geo.complex().missing_faces(k + 1, k + 1),
        next: certify_toric_chordal(geo, k + 1, omega),
    }
}

/// `ℰ(k) = ∅ ⇒ ℰ(ℓ) = ∅` for `k ≤ ℓ ≤ max_degree`.
#[derive(Clone, Debug, Serialize)]
pub struct WeakPropagationReport {
    pub k: isize,
    /// `(ℓ, ℰ(ℓ))` for `ℓ = k..=max_degree`.
    pub bad_sets: Vec<(isize, Face)>,
}

impl Certificate for WeakPropagationReport {
    fn report(&self) -> Report {
        let base = self.bad_sets.first().is_some_and(|(_, e)| e.is_empty());
        let all = self.bad_sets.iter().all(|(_, e)| e.is_empty());
        let hyps = vec![Hypothesis::new("weakly toric k-chordal", base)];
        let witness = self.bad_sets.iter().find(|(_, e)| !e.is_empty()).map(|(l, e)| json!({"degree": l, "bad_set": e}));
        Report::new("weak-propagation", hyps, Verdict::from_checks(base, all), witness, self)
    }
}

pub fn weak_propagation_check(
    geo: &GeometricComplex,
    k: isize,
    omega: &LinearDifferential,
    max_degree: isize,
) -> WeakPropagationReport {
    let bad_sets = (k..=max_degree)
        .map(|l| {
            let e: Face = star_injectivity(geo, l, omega).iter().filter(|p| !p.injective).map(|p| p.vertex - 1).collect();
            (l, e)
        })
        .collect();
    WeakPropagationReport { k, bad_sets }
}

/// `ker[ω : S_{i+1} → S_i]` for `i = k..=d`.
#[derive(Clone, Debug, Serialize)]
pub struct KernelVanishingReport {
    pub k: isize,
    pub toric_chordal: bool,
    pub proper: bool,
    /// Missing faces of dimension greater than `k`.
    pub missing_faces: Vec<Face>,
    /// `(i, dim ker[ω : S_{i+1} → S_i])`.
    pub kernels: Vec<(isize, usize)>,
}

impl Certificate for KernelVanishingReport {
    fn report(&self) -> Report {
        let hyps = vec![
            Hypothesis::new("proper", self.proper),
            Hypothesis::new("toric k-chordal", self.toric_chordal),
            Hypothesis::new("no missing faces of dimension > k", self.missing_faces.is_empty()),
        ];
        let ok = self.proper && self.toric_chordal && self.missing_faces.is_empty();
        let conclusion = self.kernels.iter().all(|(_, n)| *n == 0);
        let witness = self.kernels.iter().find(|(_, n)| *n != 0).map(|(i, n)| json!({"degree": i, "kernel_dim": n}));
        Report::new("kernel-vanishing", hyps, Verdict::from_checks(ok, conclusion), witness, self)
    }
}

pub fn kernel_vanishing_check(geo: &GeometricComplex, k: isize, omega: &LinearDifferential) -> KernelVanishingReport {
    let d = geo.ambient_dim() as isize;
    let spaces: Vec<StressSpace> = (k..=d + 1).map(|i| StressSpace::of(geo, i, None)).collect();
    let kernels = spaces.windows(2).map(|w| (w[0].degree(), stress::map_rank(omega, &w[1], &w[0]).kernel_dim())).collect();
    KernelVanishingReport {
        k,
        toric_chordal: certify_toric_chordal(geo, k, omega).is_toric_chordal(),
        proper: geo.is_proper(),
        missing_faces: geo.complex().missing_faces(k + 1, isize::MAX),
        kernels,
    }
}

/// One step of the regularity test: `op : S_{i+1}(Δ; Θ_{j-1}) → S_i(Δ; Θ_{j-1})`
/// where `Θ_{j-1}` are the first `j-1` differentials of `(θ_1, ..., θ_d, ω)`.
#[derive(Clone, Debug, Serialize)]
pub struct RegularityStep {
    pub step: usize,
    pub degree: isize,
    pub rank: RankSummary,
}

#[derive(Clone, Debug, Serialize)]
pub struct CohenMacaulayCorollaryReport {
    pub k: isize,
    pub toric_chordal: bool,
    pub missing_faces: Vec<Face>,
    pub regularity: Vec<RegularityStep>,
    pub reisner: ReisnerReport,
}

impl CohenMacaulayCorollaryReport {
    pub fn regular(&self) -> bool {
        self.regularity.iter().all(|s| s.rank.is_surjective())
    }
}

impl Certificate for CohenMacaulayCorollaryReport {
    fn report(&self) -> Report {
        let hyps = vec![
            Hypothesis::new("toric k-chordal", self.toric_chordal),
            Hypothesis::new("no missing faces of dimension > k", self.missing_faces.is_empty()),
            Hypothesis::new("parameters and omega regular up to degree k", self.regular()),
        ];
        let ok = self.toric_chordal && self.missing_faces.is_empty() && self.regular();
        let witness = self.reisner.witness.map(|(f, i)| json!({"face": f, "degree": i}));
        let verdict = Verdict::from_checks(ok, self.reisner.cohen_macaulay);
        Report::new("cohen-macaulay-corollary", hyps, verdict, witness, self)
    }
}

pub fn cohen_macaulay_corollary_check(
    geo: &GeometricComplex,
    k: isize,
    omega: &LinearDifferential,
) -> CohenMacaulayCorollaryReport {
    let complex = geo.complex();
    let mut params = coordinate_params(geo);
    params.push(omega.clone());
    let mut regularity = Vec::new();
    for j in 1..=params.len() {
        let prefix = &params[..j - 1];
        for i in 0..=k {
            let src = StressSpace::compute(complex, None, prefix, i + 1);
            let tgt = StressSpace::compute(complex, None, prefix, i);
            let r = stress::map_rank(&params[j - 1], &src, &tgt);
            regularity.push(RegularityStep { step: j, degree: i, rank: RankSummary::from(&r) });
        }
    }
    CohenMacaulayCorollaryReport {
        k,
        toric_chordal: certify_toric_chordal(geo, k, omega).is_toric_chordal(),
        missing_faces: complex.missing_faces(k + 1, isize::MAX),
        regularity,
        reisner: homology::reisner_cm_check(complex),
    }
}

/// The premise and outcome of the support refinement for one `γ`.
#[derive(Clone, Debug, Serialize)]
pub struct RefinementCase {
    pub gamma_support: Face,
    /// Whether each part has a preimage `π_i` with `Δ̄ ∩ π_i^(0) = γ^(0)`.
    pub premise: [bool; 2],
    /// Whether some `β ∈ S_k(Δ̄)` has `ωβ = γ` and `β^(0) = γ^(0)`.
    pub preimage_with_equal_support: bool,
}

impl RefinementCase {
    pub fn holds(&self) -> bool {
        !(self.premise[0] && self.premise[1]) || self.preimage_with_equal_support
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CutReport {
    pub k: isize,
    pub intersection: Vec<Face>,
    /// `ψ : S_k(Δ_i, Δ̄) → S_{k-1}(Δ̄)` for both parts.
    pub parts: [RankSummary; 2],
    /// `ω` on the stress space of `Δ` lifted by `ψ`, degree `k+1 → k`.
    pub lifted_surjection: RankSummary,
    /// Same, degree `k → k-1`.
    pub lifted_injection: RankSummary,
    /// `ω : S_k(Δ̄) → S_{k-1}(Δ̄)`.
    pub conclusion: RankSummary,
    pub refinement: Vec<RefinementCase>,
}

impl CutReport {
    pub fn hypotheses(&self) -> Vec<Hypothesis> {
        vec![
            Hypothesis::new("intersection is induced", true),
            Hypothesis::new("psi surjective from the first part", self.parts[0].is_surjective()),
            Hypothesis::new("psi surjective from the second part", self.parts[1].is_surjective()),
            Hypothesis::new("omega surjective on ker psi, degree k+1 -> k", self.lifted_surjection.is_surjective()),
            Hypothesis::new("omega injective on ker psi, degree k -> k-1", self.lifted_injection.is_injective()),
        ]
    }

    pub fn refinement_holds(&self) -> bool {
        self.refinement.iter().all(RefinementCase::holds)
    }
}

impl Certificate for CutReport {
    fn report(&self) -> Report {
        let hyps = self.hypotheses();
        let ok = hyps.iter().all(|h| h.holds);
        let verdict = Verdict::from_checks(ok, self.conclusion.is_surjective() && self.refinement_holds());
        let witness = self.refinement.iter().find(|c| !c.holds()).map(|c| json!({"refinement_fails_for_support": c.gamma_support}));
        Report::new("cut", hyps, verdict, witness, self)
    }
}

/// Solves for coefficients `c` with `Σ c_j cols_j = rhs`.
fn solvable(nrows: usize, cols: &[SparseVec], rhs: &SparseVec) -> bool {
    if cols.is_empty() {
        return rhs.is_empty();
    }
    let m = RationalMatrix::from_columns(nrows, cols);
    linalg::solve(&m, &linalg::to_dense(rhs, nrows)).is_some()
}

/// Whether some `π ∈ space` has `ψπ` projecting to `gamma` on `target` and no
/// monomial touching `forbidden`.
fn has_restricted_preimage(
    space: &StressSpace,
    psi: &LinearDifferential,
    target: &StressSpace,
    gamma: &Stress,
    forbidden: Face,
) -> bool {
    let blocked: Vec<usize> = space
        .basis()
        .monomials()
        .iter()
        .enumerate()
        .filter(|(_, m)| !m.support().intersection(forbidden).is_empty())
        .map(|(i, _)| i)
        .collect();
    let offset = target.basis().len();
    let images = stress::images(psi, 1, space, target);
    let cols: Vec<SparseVec> = space
        .vectors()
        .iter()
        .zip(images)
        .map(|(v, mut img)| {
            for (row, idx) in blocked.iter().enumerate() {
                if let Some((_, c)) = v.iter().find(|(i, _)| i == idx) {
                    img.push((offset + row, c.clone()));
                }
            }
            img
        })
        .collect();
    solvable(offset + blocked.len(), &cols, &target.basis().project(gamma))
}

/// Checks the cut statement for `Δ = Δ_1 ∪ Δ_2` with shared coordinates.
/// `ψ` enters both hypothesis (A) and the lift used for hypothesis (B).
pub fn cut_theorem_check(
    first: &GeometricComplex,
    second: &GeometricComplex,
    k: isize,
    psi: &LinearDifferential,
    omega: &LinearDifferential,
    seed: u64,
) -> Result<CutReport> {
    if first.coords() != second.coords() || first.ambient_dim() != second.ambient_dim() {
        return Err(Error::Contract("the two parts must share vertex coordinates".into()));
    }
    let union = first.complex().union(second.complex());
    let bar = first.complex().intersection(second.complex());
    if !bar.is_induced_in(&union) {
        return Err(Error::Contract("the intersection of the parts is not an induced subcomplex".into()));
    }
    let whole = first.with_complex(union);
    let bar_geo = first.with_complex(bar.clone());
    let target = StressSpace::of(&bar_geo, k - 1, None);
    let relative: Vec<StressSpace> =
        [first, second].iter().map(|g| StressSpace::of(g, k, Some(&bar))).collect();
    let parts = [0, 1].map(|i| RankSummary::from(&stress::map_rank(psi, &relative[i], &target)));

    let lifted = whole.lift(psi.coeffs());
    let lifted_spaces: Vec<StressSpace> = [k - 1, k, k + 1].iter().map(|i| StressSpace::of(&lifted, *i, None)).collect();
    let lifted_surjection = RankSummary::from(&stress::map_rank(omega, &lifted_spaces[2], &lifted_spaces[1]));
    let lifted_injection = RankSummary::from(&stress::map_rank(omega, &lifted_spaces[1], &lifted_spaces[0]));

    let top = StressSpace::of(&bar_geo, k, None);
    let conclusion = RankSummary::from(&stress::map_rank(omega, &top, &target));

    let mut gammas = target.stresses();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    gammas.extend((0..3).map(|_| target.random_element(&mut rng)));
    let bar_vertices = bar.vertex_set();
    let refinement = gammas
        .iter()
        .filter(|g| !g.is_zero())
        .map(|gamma| {
            let w = gamma.vertex_support();
            let forbidden = bar_vertices.minus(w);
            let premise = [0, 1].map(|i| has_restricted_preimage(&relative[i], psi, &target, gamma, forbidden));
            let local = StressSpace::of(&bar_geo.with_complex(bar.induced(w)), k, None);
            let cols = stress::images(omega, 1, &local, &target);
            let found = solvable(target.basis().len(), &cols, &target.basis().project(gamma));
            RefinementCase { gamma_support: w, premise, preimage_with_equal_support: found }
        })
        .collect();

    Ok(CutReport { k, intersection: bar.facets().to_vec(), parts, lifted_surjection, lifted_injection, conclusion, refinement })
}

/// Default `ψ` for a cut: the last coordinate row.
pub fn last_coordinate(geo: &GeometricComplex) -> LinearDifferential {
    LinearDifferential::new(geo.coordinate_row(geo.ambient_dim() - 1))
}

/// Two parts of a split complex as geometric complexes with the same
/// coordinates.
pub fn split_parts(geo: &GeometricComplex, first: &AbstractComplex, second: &AbstractComplex) -> (GeometricComplex, GeometricComplex) {
    (geo.with_complex(first.clone()), geo.with_complex(second.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn simplex_boundary_is_toric_chordal() {
        let s = generators::simplex_boundary(3);
        let delta = LinearDifferential::ones(4);
        for k in 1..=2 {
            let c = certify_toric_chordal(&s, k, &delta);
            assert!(c.is_toric_chordal(), "k = {k}");
            assert!(c.is_weakly_toric_chordal());
            assert_eq!(c.bad_set.bound, 0);
        }
    }

    #[test]
    fn octahedron_fails_injection_in_degree_one() {
        let oct = generators::cross_polytope_boundary(3);
        let c = certify_toric_chordal(&oct, 1, &LinearDifferential::ones(6));
        assert!(!c.is_toric_chordal());
        assert_eq!(c.injection.kernel_dim, 2);
        assert!(c.kernel_witness.is_some());
        assert_eq!(c.bad_set.bound, 6);
        assert!(c.bad_set.within_bound);
    }

    #[test]
    fn mcmullen_on_octahedron() {
        let oct = generators::cross_polytope_boundary(3);
        let r = mcmullen_integral_check(&oct, 1).unwrap();
        assert_eq!((r.lhs, r.rhs), (6, 6));
    }

    #[test]
    fn propagation_from_degree_one_on_four_simplex() {
        let s = generators::simplex_boundary(4);
        let r = propagation_verify(&s, 1, &LinearDifferential::ones(5));
        assert!(r.hypotheses_hold());
        assert_eq!(r.report().verdict, Verdict::Verified);
    }

    #[test]
    fn zero_psi_fails_hypothesis_a() {
        let split = generators::bipyramid_split();
        let (a, b) = split_parts(&split.complex, &split.upper, &split.lower);
        let r = cut_theorem_check(&a, &b, 1, &LinearDifferential::zero(6), &LinearDifferential::ones(6), 1).unwrap();
        assert!(!r.parts[0].is_surjective());
        assert_eq!(r.report().verdict, Verdict::HypothesesNotMet);
    }

    #[test]
    fn non_induced_intersection_is_rejected() {
        let tri = generators::simplex_boundary(2);
        let facets = tri.complex().facets().to_vec();
        let a = AbstractComplex::new(3, facets[..2].iter().copied());
        let b = AbstractComplex::new(3, facets[2..].iter().copied());
        let (ga, gb) = split_parts(&tri, &a, &b);
        assert!(cut_theorem_check(&ga, &gb, 1, &LinearDifferential::ones(3), &LinearDifferential::ones(3), 1).is_err());
    }
}
