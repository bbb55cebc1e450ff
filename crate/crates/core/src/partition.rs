//! Shellings and the partition-of-unity surjections onto stress spaces.

use serde::Serialize;

use crate::complex::{AbstractComplex, Face, GeometricComplex};
use crate::differential::LinearDifferential;
use crate::error::{Error, Result};
use crate::generators;
use crate::report::{Certificate, Hypothesis, Report, Verdict};
use crate::stress::{self, StressSpace};

/// Node budget of [`shelling_search`].
pub const DEFAULT_SHELLING_BUDGET: usize = 200_000;

/// Whether `facet ∩ (F_1 ∪ ... ∪ F_m)` is empty or pure of dimension
/// `facet.dim() - 1`.
fn attaches_cleanly(facet: Face, later: &[Face]) -> bool {
    let ridge = facet.len() - 1;
    let pieces: Vec<Face> = later.iter().map(|g| facet.intersection(*g)).collect();
    let ridges: Vec<Face> = pieces.iter().copied().filter(|p| p.len() == ridge).collect();
    pieces.iter().all(|p| p.is_empty()) || pieces.iter().all(|p| ridges.iter().any(|r| p.is_subset(*r)))
}

/// Checks that `order` lists the facets of a pure complex so that each facet
/// meets the union of all later facets in a pure complex of codimension one,
/// or not at all.
pub fn validate_shelling(complex: &AbstractComplex, order: &[Face]) -> Result<()> {
    if !complex.is_pure() {
        return Err(Error::InvalidShelling { step: 0, reason: "complex is not pure".into() });
    }
    let mut sorted = order.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut facets = complex.facets().to_vec();
    facets.sort();
    if sorted.len() != order.len() || sorted != facets {
        return Err(Error::InvalidShelling { step: 0, reason: "order is not a permutation of the facets".into() });
    }
    for (i, f) in order.iter().enumerate() {
        if !attaches_cleanly(*f, &order[i + 1..]) {
            return Err(Error::InvalidShelling {
                step: i + 1,
                reason: format!("{f} meets the later facets in a complex that is neither empty nor pure of codimension one"),
            });
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShellingSearch {
    Found(Vec<Face>),
    /// The search space was exhausted.
    NoneFound,
    /// The node budget ran out; says nothing about shellability.
    Inconclusive,
}

/// Backtracking search that builds the order from the back, preferring
/// facets that meet the already placed ones in a nonempty ridge complex.
pub fn shelling_search(complex: &AbstractComplex, budget: usize) -> Result<ShellingSearch> {
    if !complex.is_pure() {
        return Err(Error::Contract("shellings are defined for pure complexes only".into()));
    }
    let facets = complex.facets().to_vec();
    let mut placed: Vec<Face> = Vec::new();
    let mut used = vec![false; facets.len()];
    let mut nodes = 0;
    if extend(&facets, &mut placed, &mut used, &mut nodes, budget) {
        placed.reverse();
        return Ok(ShellingSearch::Found(placed));
    }
    if nodes >= budget {
        log::info!("shelling search stopped after {nodes} nodes");
        return Ok(ShellingSearch::Inconclusive);
    }
    Ok(ShellingSearch::NoneFound)
}

fn extend(facets: &[Face], placed: &mut Vec<Face>, used: &mut [bool], nodes: &mut usize, budget: usize) -> bool {
    if placed.len() == facets.len() {
        return true;
    }
    let mut candidates: Vec<(bool, usize)> = (0..facets.len())
        .filter(|&i| !used[i] && attaches_cleanly(facets[i], placed))
        .map(|i| (placed.iter().all(|g| facets[i].intersection(*g).is_empty()), i))
        .collect();
    candidates.sort();
    for (_, i) in candidates {
        *nodes += 1;
        if *nodes >= budget {
            return false;
        }
        used[i] = true;
        placed.push(facets[i]);
        if extend(facets, placed, used, nodes, budget) {
            return true;
        }
        placed.pop();
        used[i] = false;
    }
    false
}

#[derive(Clone, Debug, Serialize)]
pub struct PartitionReport {
    pub k: isize,
    pub shelling: Vec<Face>,
    pub target_dim: usize,
    /// Rank of the union of the star stress spaces inside `S_k(Δ)`.
    pub union_rank: usize,
    /// Whether every star stress is a stress of `Δ`.
    pub contained: bool,
}

impl PartitionReport {
    pub fn surjective(&self) -> bool {
        self.contained && self.union_rank == self.target_dim
    }
}

impl Certificate for PartitionReport {
    fn report(&self) -> Report {
        let hyps = vec![Hypothesis::new("valid shelling", true), Hypothesis::new("k < d", true)];
        let verdict = if self.surjective() { Verdict::Verified } else { Verdict::Violated };
        Report::new("partition", hyps, verdict, serde_json::Value::Null, self)
    }
}

/// Rank of `⊕_v S_k(St_v Δ) → S_k(Δ)` for a shellable `Δ` and `k < d`.
pub fn partition_of_unity_check(geo: &GeometricComplex, k: isize, shelling: &[Face]) -> Result<PartitionReport> {
    let d = geo.ambient_dim() as isize;
    if k >= d {
        return Err(Error::Contract(format!("partition of unity needs k < d, got k = {k}, d = {d}")));
    }
    validate_shelling(geo.complex(), shelling)?;
    let target = StressSpace::of(geo, k, None);
    let mut pieces = Vec::new();
    for v in geo.complex().vertices() {
        let star = geo.with_complex(geo.complex().star(Face::singleton(v))?);
        pieces.extend(StressSpace::of(&star, k, None).stresses());
    }
    Ok(PartitionReport {
        k,
        shelling: shelling.to_vec(),
        target_dim: target.dim(),
        union_rank: stress::span_rank(&target, &pieces),
        contained: pieces.iter().all(|p| target.contains(p)),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BalancedDegree {
    pub degree: isize,
    pub target_dim: usize,
    pub union_rank: usize,
    pub contained: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BalancedPartitionReport {
    pub color: usize,
    /// Seed of the projection to `ℝ^{d-1}`, when one was needed.
    pub projection_seed: Option<u64>,
    pub shellable: bool,
    pub degrees: Vec<BalancedDegree>,
}

impl BalancedPartitionReport {
    pub fn surjective(&self) -> bool {
        self.degrees.iter().all(|g| g.contained && g.union_rank == g.target_dim)
    }
}

impl Certificate for BalancedPartitionReport {
    fn report(&self) -> Report {
        let hyps = vec![Hypothesis::new("balanced", true), Hypothesis::new("shellable", self.shellable)];
        let verdict = Verdict::from_checks(self.shellable, self.surjective());
        let witness = self.degrees.iter().find(|g| g.union_rank != g.target_dim).map(|g| g.degree);
        Report::new("balanced-partition", hyps, verdict, witness, self)
    }
}

fn complex_dim_colors(geo: &GeometricComplex) -> Result<usize> {
    let coloring = geo.coloring().ok_or_else(|| Error::Contract("a coloring is required".into()))?;
    coloring.validate(geo.complex())?;
    let d = (geo.complex().dim() + 1) as usize;
    if coloring.num_colors() > d {
        return Err(Error::Contract(format!("{} colors on a complex of dimension {}", coloring.num_colors(), d - 1)));
    }
    Ok(d)
}

/// `⊕_{v of color c} S(Lk_v Δ) → S(Δ_{[d] ∖ c})` in every degree, with `Δ`
/// placed in `ℝ^{d-1}` (generically projected when given in `ℝ^d`).
pub fn balanced_partition_check(geo: &GeometricComplex, color: usize, seed: u64) -> Result<BalancedPartitionReport> {
    let d = complex_dim_colors(geo)?;
    let (placed, projection_seed) = if geo.ambient_dim() > d - 1 {
        (generators::generic_projection(geo, d - 1, seed)?, Some(seed))
    } else {
        (geo.clone(), None)
    };
    let coloring = geo.coloring().expect("validated above");
    let others: Vec<usize> = (1..=d).filter(|c| *c != color).collect();
    let rest = placed.with_complex(placed.complex().induced(coloring.vertices_with_colors(&others)));
    let shellable = matches!(shelling_search(geo.complex(), DEFAULT_SHELLING_BUDGET), Ok(ShellingSearch::Found(_)));
    let links: Vec<GeometricComplex> = coloring
        .vertices_of_color(color)
        .vertices()
        .filter(|v| geo.complex().vertex_set().contains(*v))
        .map(|v| Ok(placed.with_complex(placed.complex().link(Face::singleton(v))?)))
        .collect::<Result<_>>()?;
    let mut degrees = Vec::new();
    for i in 0..=d as isize {
        let target = StressSpace::of(&rest, i, None);
        let pieces: Vec<_> = links.iter().flat_map(|l| StressSpace::of(l, i, None).stresses()).collect();
        degrees.push(BalancedDegree {
            degree: i,
            target_dim: target.dim(),
            union_rank: stress::span_rank(&target, &pieces),
            contained: pieces.iter().all(|p| target.contains(p)),
        });
    }
    Ok(BalancedPartitionReport { color, projection_seed, shellable, degrees })
}

/// `ω : S_k(Δ̃_S) → S_{k-1}(Δ̃_S)` on a generic projection of the color-`S`
/// restriction to `ℝ^{|S|}`.
#[derive(Clone, Debug, Serialize)]
pub struct ColorSurjection {
    pub colors: Vec<usize>,
    pub seed: u64,
    pub k: isize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub surjective: bool,
}

pub fn color_restriction_surjection(
    geo: &GeometricComplex,
    colors: &[usize],
    k: isize,
    omega: &LinearDifferential,
    seed: u64,
) -> Result<ColorSurjection> {
    complex_dim_colors(geo)?;
    let coloring = geo.coloring().expect("validated above");
    let restricted = geo.with_complex(geo.complex().induced(coloring.vertices_with_colors(colors)));
    let projected = generators::generic_projection(&restricted, colors.len(), seed)?;
    let src = StressSpace::of(&projected, k, None);
    let tgt = StressSpace::of(&projected, k - 1, None);
    let r = stress::map_rank(omega, &src, &tgt);
    Ok(ColorSurjection {
        colors: colors.to_vec(),
        seed,
        k,
        source_dim: r.source_dim,
        target_dim: r.target_dim,
        rank: r.rank,
        surjective: r.is_surjective(),
    })
}
