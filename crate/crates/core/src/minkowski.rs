//! Minkowski weights: the squarefree parts of stresses and the balancing
//! condition that characterizes them.
//!
//! A weight of degree `k` lives on the `(k-1)`-faces. It is balanced when,
//! for every `(k-2)`-face `τ`, `Σ_{σ ⊃ τ} c(σ) v_{σ∖τ}` lies in `span(τ)`.
//! Membership is tested against a basis of the annihilator of `span(τ)`.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::complex::{Face, GeometricComplex};
use crate::error::{Error, Result};
use crate::io::RationalString;
use crate::linalg::{self, Echelon, RationalMatrix, SparseVec};
use crate::report::{Certificate, Hypothesis, Report, Verdict};
use crate::stress::{Stress, StressSpace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinkowskiWeight {
    degree: usize,
    weights: BTreeMap<Face, BigRational>,
}

impl MinkowskiWeight {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn weight(&self, face: Face) -> BigRational {
        self.weights.get(&face).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn weights(&self) -> &BTreeMap<Face, BigRational> {
        &self.weights
    }

    pub fn is_zero(&self) -> bool {
        self.weights.is_empty()
    }
}

impl Serialize for MinkowskiWeight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            face: Face,
            coeff: RationalString,
        }
        let entries: Vec<Entry> =
            self.weights.iter().map(|(f, c)| Entry { face: *f, coeff: RationalString::from(c) }).collect();
        entries.serialize(s)
    }
}

fn check_dimensions(geo: &GeometricComplex, k: usize) -> Result<()> {
    let d = geo.ambient_dim();
    if geo.complex().dim() > d as isize {
        return Err(Error::Contract(format!(
            "a complex of dimension {} does not fit the weight theory in R^{d}",
            geo.complex().dim()
        )));
    }
    if k > d + 1 {
        return Err(Error::Contract(format!("weights of degree {k} need faces of dimension {} > {d}", k - 1)));
    }
    Ok(())
}

/// Squarefree terms of `γ` as a weight on the `(k-1)`-faces.
pub fn squarefree_restriction(geo: &GeometricComplex, gamma: &Stress) -> Result<MinkowskiWeight> {
    check_dimensions(geo, gamma.degree())?;
    let weights = gamma.terms().filter(|(m, _)| m.is_squarefree()).map(|(m, c)| (m.support(), c.clone())).collect();
    Ok(MinkowskiWeight { degree: gamma.degree(), weights })
}

/// Rows spanning the annihilator of `span(τ)`; errors if `τ` is improper.
fn annihilator(geo: &GeometricComplex, tau: Face) -> Result<Vec<Vec<BigRational>>> {
    let d = geo.ambient_dim();
    let rows: Vec<Vec<BigRational>> = tau.vertices().map(|v| geo.vertex_coords(v).to_vec()).collect();
    let m = RationalMatrix::from_dense(d, &rows);
    if linalg::rank(&m) != tau.len() {
        return Err(Error::ImproperFace(tau));
    }
    Ok(linalg::kernel_basis(&m))
}

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

/// The stacked balancing system: one column per `(k-1)`-face, one block of
/// rows per `(k-2)`-face.
fn balancing_matrix(geo: &GeometricComplex, k: usize) -> Result<(Vec<Face>, RationalMatrix)> {
    let complex = geo.complex();
    let cols: Vec<Face> = complex.faces_of_size(k).to_vec();
    let index: BTreeMap<Face, usize> = cols.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let mut rows: Vec<SparseVec> = Vec::new();
    if k == 0 {
        return Ok((cols.clone(), RationalMatrix::from_sparse_rows(cols.len(), rows)));
    }
    for &tau in complex.faces_of_size(k - 1) {
        let ann = annihilator(geo, tau)?;
        let cofaces: Vec<(usize, usize)> = cols
            .iter()
            .filter(|s| tau.is_subset(**s))
            .map(|s| (index[s], s.minus(tau).vertices().next().expect("one extra vertex")))
            .collect();
        for y in &ann {
            let mut row: SparseVec = cofaces
                .iter()
                .map(|(col, v)| (*col, dot(y, geo.vertex_coords(*v))))
                .filter(|(_, c)| !c.is_zero())
                .collect();
            row.sort_by_key(|(i, _)| *i);
            rows.push(row);
        }
    }
    Ok((cols.clone(), RationalMatrix::from_sparse_rows(cols.len(), rows)))
}

/// Basis of the balanced weights of degree `k`.
pub fn minkowski_weight_space(geo: &GeometricComplex, k: usize) -> Result<Vec<MinkowskiWeight>> {
    check_dimensions(geo, k)?;
    let (cols, m) = balancing_matrix(geo, k)?;
    Ok(linalg::kernel_basis_sparse(&m)
        .into_iter()
        .map(|v| MinkowskiWeight { degree: k, weights: v.into_iter().map(|(i, c)| (cols[i], c)).collect() })
        .collect())
}

pub fn is_balanced(geo: &GeometricComplex, w: &MinkowskiWeight) -> Result<bool> {
    let (cols, m) = balancing_matrix(geo, w.degree)?;
    let x: Vec<BigRational> = cols.iter().map(|f| w.weight(*f)).collect();
    Ok(m.mul_vec(&x).iter().all(|c| c.is_zero()))
}

/// Injectivity of the squarefree restriction on `S_k` and agreement with
/// the balancing description.
#[derive(Clone, Debug, Serialize)]
pub struct RestrictionReport {
    pub k: usize,
    pub stress_dim: usize,
    pub weight_dim: usize,
    pub restriction_rank: usize,
    pub images_balanced: bool,
}

impl RestrictionReport {
    pub fn isomorphism(&self) -> bool {
        self.images_balanced && self.restriction_rank == self.stress_dim && self.stress_dim == self.weight_dim
    }
}

impl Certificate for RestrictionReport {
    fn report(&self) -> Report {
        let verdict = if self.isomorphism() { Verdict::Verified } else { Verdict::Violated };
        let hyps = vec![Hypothesis::new("proper", true)];
        Report::new("squarefree-restriction", hyps, verdict, serde_json::Value::Null, self)
    }
}

pub fn restriction_check(geo: &GeometricComplex, k: usize) -> Result<RestrictionReport> {
    let weights = minkowski_weight_space(geo, k)?;
    let space = StressSpace::of(geo, k as isize, None);
    let (cols, _) = balancing_matrix(geo, k)?;
    let index: BTreeMap<Face, usize> = cols.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let mut e = Echelon::new();
    let mut images_balanced = true;
    for s in space.stresses() {
        let w = squarefree_restriction(geo, &s)?;
        images_balanced &= is_balanced(geo, &w)?;
        let mut v: SparseVec = w.weights.iter().map(|(f, c)| (index[f], c.clone())).collect();
        v.sort_by_key(|(i, _)| *i);
        e.insert(&v);
    }
    Ok(RestrictionReport {
        k,
        stress_dim: space.dim(),
        weight_dim: weights.len(),
        restriction_rank: e.rank(),
        images_balanced,
    })
}
