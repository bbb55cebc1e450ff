//! Triangulations built from clique complexes: the `k`-stacked
//! triangulation `Cl_k ∂P` and the balanced `k`-clique complex.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::chordality::{certify_toric_chordal, ChordalityCertificate};
use crate::complex::{AbstractComplex, Coloring, Face, GeometricComplex};
use crate::differential::LinearDifferential;
use crate::error::{Error, Result};
use crate::homology::{self, ReducedBetti};
use crate::report::{Certificate, Hypothesis, Report, Verdict};
use crate::stress::StressSpace;

/// Faces of `complex` of dimension `≤ max_dim` that are not faces of `boundary`.
fn interior_faces(complex: &AbstractComplex, boundary: &AbstractComplex, max_dim: isize) -> Vec<Face> {
    complex.faces().filter(|f| f.dim() <= max_dim && !boundary.contains(*f)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct StackedTriangulationReport {
    pub k: usize,
    pub d: usize,
    pub g_k: i64,
    pub certificate: ChordalityCertificate,
    pub facets: Vec<Face>,
    /// Faces of `Cl_k Δ` of dimension `≤ d - k` that are not in `Δ`.
    pub interior_faces: Vec<Face>,
    pub cohen_macaulay: bool,
    pub betti: ReducedBetti,
}

impl StackedTriangulationReport {
    pub fn hypotheses(&self) -> Vec<Hypothesis> {
        vec![
            Hypothesis::with_detail("g_k = 0", self.g_k == 0, format!("g_{} = {}", self.k, self.g_k)),
            Hypothesis::new("2k <= d", 2 * self.k <= self.d),
        ]
    }

    pub fn conclusion(&self) -> bool {
        self.certificate.is_toric_chordal() && self.interior_faces.is_empty() && self.cohen_macaulay && self.betti.is_zero()
    }
}

impl Certificate for StackedTriangulationReport {
    fn report(&self) -> Report {
        let hyps = self.hypotheses();
        let verdict = Verdict::from_checks(hyps.iter().all(|h| h.holds), self.conclusion());
        Report::new("glbt", hyps, verdict, self.interior_faces.first(), self)
    }
}

/// `Cl_k Δ` for a polytope boundary `Δ`, with the checks that make it a
/// `k`-stacked triangulation: toric `k`-chordality under `δ`, no interior
/// faces of dimension `≤ d - k`, Cohen-Macaulayness and acyclicity.
pub fn k_stacked_triangulation(geo: &GeometricComplex, k: usize) -> Result<(AbstractComplex, StackedTriangulationReport)> {
    if k == 0 {
        return Err(Error::Contract("k-stacked triangulations need k >= 1".into()));
    }
    let d = geo.ambient_dim();
    let cl = geo.complex().clique_complex(k);
    let omega = LinearDifferential::ones(geo.ground_size());
    let report = StackedTriangulationReport {
        k,
        d,
        g_k: homology::stress_g(geo, k as isize),
        certificate: certify_toric_chordal(geo, k as isize, &omega),
        facets: cl.facets().to_vec(),
        interior_faces: interior_faces(&cl, geo.complex(), (d - k.min(d)) as isize),
        cohen_macaulay: homology::reisner_cm_check(&cl).cohen_macaulay,
        betti: homology::reduced_betti(&cl),
    };
    Ok((cl, report))
}

/// Faces with pairwise distinct colors all of whose faces of dimension
/// `≤ k - 1` lie in `complex`.
fn colorful_clique_complex(complex: &AbstractComplex, coloring: &Coloring, k: usize) -> AbstractComplex {
    let verts = complex.vertices();
    let mut found = Vec::new();
    let mut stack = vec![(Face::EMPTY, 0usize)];
    while let Some((sigma, start)) = stack.pop() {
        let mut extended = false;
        for (i, &v) in verts.iter().enumerate().skip(start) {
            let fresh = sigma.vertices().all(|u| coloring.color(u) != coloring.color(v));
            if fresh && sigma.subsets().filter(|t| t.len() < k).all(|t| complex.contains(t.with(v))) {
                extended = true;
                stack.push((sigma.with(v), i + 1));
            }
        }
        if !extended {
            found.push(sigma);
        }
    }
    AbstractComplex::generated_by(complex.ground_size(), found)
}

/// Whether `complex` is combinatorially the boundary of a crosspolytope:
/// its non-edges form a perfect matching of the vertices and the facets are
/// exactly the transversals of that matching.
pub fn is_crosspolytope_boundary(complex: &AbstractComplex) -> bool {
    let verts = complex.vertices();
    if verts.is_empty() || !verts.len().is_multiple_of(2) {
        return false;
    }
    let mut partner: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, &a) in verts.iter().enumerate() {
        for &b in &verts[i + 1..] {
            if !complex.contains(Face::singleton(a).with(b)) {
                if partner.contains_key(&a) || partner.contains_key(&b) {
                    return false;
                }
                partner.insert(a, b);
                partner.insert(b, a);
            }
        }
    }
    if partner.len() != verts.len() {
        return false;
    }
    let pairs: Vec<(usize, usize)> = partner.iter().filter(|(a, b)| a < b).map(|(a, b)| (*a, *b)).collect();
    let mut transversals = vec![Face::EMPTY];
    for &(a, b) in &pairs {
        transversals = transversals.iter().flat_map(|t| [t.with(a), t.with(b)]).collect();
    }
    transversals.sort();
    let mut facets = complex.facets().to_vec();
    facets.sort();
    facets == transversals
}

#[derive(Clone, Debug, Serialize)]
pub struct CenterReport {
    /// 1-based label of the center in the output.
    pub vertex: usize,
    /// Antipodes identified into this center, 1-based.
    pub antipodes: Vec<(usize, usize)>,
    pub link_facets: usize,
    pub link_is_crosspolytope: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BalancedCliqueReport {
    pub k: usize,
    pub d: usize,
    pub antipodes: usize,
    pub centers: Vec<CenterReport>,
    pub facets: Vec<Face>,
    pub betti: ReducedBetti,
    /// Faces on the original colors of dimension `≤ d - k` that are not in `Δ`.
    pub interior_faces: Vec<Face>,
}

impl BalancedCliqueReport {
    pub fn conclusion(&self) -> bool {
        self.betti.is_zero()
            && self.interior_faces.is_empty()
            && self.centers.iter().all(|c| c.link_is_crosspolytope)
    }
}

impl Certificate for BalancedCliqueReport {
    fn report(&self) -> Report {
        let hyps = vec![Hypothesis::new("balanced", true), Hypothesis::new("k <= d/2", 2 * self.k <= self.d)];
        let verdict = Verdict::from_checks(2 * self.k <= self.d, self.conclusion());
        let witness = self
            .interior_faces
            .first()
            .map(|f| serde_json::json!({ "interior_face": f }))
            .or_else(|| {
                self.centers
                    .iter()
                    .find(|c| !c.link_is_crosspolytope)
                    .map(|c| serde_json::json!({ "center": c.vertex }))
            });
        Report::new("balanced-clique", hyps, verdict, witness, self)
    }
}

fn find(parent: &mut [usize], i: usize) -> usize {
    let mut r = i;
    while parent[r] != r {
        r = parent[r];
    }
    parent[i] = r;
    r
}

/// The balanced `k`-clique complex of a balanced complex. New centers get
/// color `d + 1` and sit at the origin; they are appended to the ground set.
pub fn balanced_clique_complex(geo: &GeometricComplex, k: usize) -> Result<(GeometricComplex, BalancedCliqueReport)> {
    if k == 0 {
        return Err(Error::Contract("balanced clique complexes need k >= 1".into()));
    }
    let coloring = geo.coloring().ok_or_else(|| Error::Contract("a coloring is required".into()))?;
    coloring.validate(geo.complex())?;
    let complex = geo.complex();
    let n = geo.ground_size();
    let d = (complex.dim() + 1) as usize;

    // Antipodes whose star in I_{v,v'} carries a (k-1)-stress.
    let verts = complex.vertices();
    let mut antipodes: Vec<((usize, usize), AbstractComplex)> = Vec::new();
    let mut considered = 0;
    for (i, &v) in verts.iter().enumerate() {
        for &w in &verts[i + 1..] {
            if coloring.color(v) != coloring.color(w) {
                continue;
            }
            considered += 1;
            let common = complex.star(Face::singleton(v))?.intersection(&complex.star(Face::singleton(w))?);
            let pair = AbstractComplex::new(n, [Face::singleton(v), Face::singleton(w)]);
            let ideal = pair.join(&common.generated_in_dim_at_least(k as isize - 2));
            let star = geo.with_complex(ideal.star(Face::singleton(v))?);
            if StressSpace::of(&star, k as isize - 1, None).dim() > 0 {
                antipodes.push(((v, w), ideal));
            }
        }
    }

    let mut parent: Vec<usize> = (0..antipodes.len()).collect();
    for a in 0..antipodes.len() {
        for b in a + 1..antipodes.len() {
            let (w, w2) = antipodes[b].0;
            if Face::singleton(w).with(w2).is_subset(antipodes[a].1.vertex_set()) {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for a in 0..antipodes.len() {
        let r = find(&mut parent, a);
        classes.entry(r).or_default().push(a);
    }
    let total = n + classes.len();
    if total > 64 {
        return Err(Error::Contract(format!("{total} vertices exceed the supported ground set")));
    }

    let mut glued = complex.with_ground_size(total);
    let mut center_of = Vec::new();
    for (c, members) in classes.values().enumerate() {
        let o = n + c;
        for &a in members {
            glued = glued.union(&antipodes[a].1.with_ground_size(total).cone(o));
        }
        center_of.push((o, members.clone()));
    }

    let mut colors = coloring.colors()[..n].to_vec();
    colors.resize(total, d + 1);
    let extended = Coloring::new(colors);
    let mut coords = geo.coords().to_vec();
    coords.resize(total, vec![BigRational::zero(); geo.ambient_dim()]);

    let result = colorful_clique_complex(&glued, &extended, k);
    let out = GeometricComplex::new(result.clone(), coords, geo.ambient_dim())?.with_coloring(extended)?;

    let centers = center_of
        .into_iter()
        .map(|(o, members)| {
            let link = result.link(Face::singleton(o))?;
            Ok(CenterReport {
                vertex: o + 1,
                antipodes: members.iter().map(|&a| (antipodes[a].0 .0 + 1, antipodes[a].0 .1 + 1)).collect(),
                link_facets: link.facets().len(),
                link_is_crosspolytope: is_crosspolytope_boundary(&link),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let original = Face::full(n);
    let boundary = complex.with_ground_size(total);
    let interior = interior_faces(&result, &boundary, (d - k.min(d)) as isize)
        .into_iter()
        .filter(|f| f.is_subset(original))
        .collect();
    log::info!("balanced clique complex: {considered} antipodes considered, {} centers", centers.len());
    let report = BalancedCliqueReport {
        k,
        d,
        antipodes: considered,
        centers,
        facets: result.facets().to_vec(),
        betti: homology::reduced_betti(&result),
        interior_faces: interior,
    };
    Ok((out, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn simplex_boundary_fills_to_the_simplex() {
        let s = generators::simplex_boundary(3);
        let (cl, r) = k_stacked_triangulation(&s, 1).unwrap();
        assert_eq!(cl.facets(), &[Face::full(4)]);
        assert!(r.conclusion(), "{r:?}");
    }

    #[test]
    fn octahedron_stays_hollow_at_k2() {
        let oct = generators::cross_polytope_boundary(3);
        let (cl, r) = k_stacked_triangulation(&oct, 2).unwrap();
        assert_eq!(&cl, oct.complex());
        assert_eq!(r.g_k, 0);
        assert_eq!(r.report().verdict, Verdict::HypothesesNotMet);
    }

    #[test]
    fn crosspolytope_recognition() {
        assert!(is_crosspolytope_boundary(generators::cross_polytope_boundary(3).complex()));
        assert!(!is_crosspolytope_boundary(generators::simplex_boundary(3).complex()));
    }

    #[test]
    fn octahedron_gets_one_center() {
        let oct = generators::cross_polytope_boundary(3);
        let (out, r) = balanced_clique_complex(&oct, 1).unwrap();
        assert_eq!(r.centers.len(), 1);
        assert_eq!(r.centers[0].antipodes.len(), 3);
        assert_eq!(out.complex().facets().len(), 8);
        assert!(r.conclusion(), "{r:?}");
    }
}
