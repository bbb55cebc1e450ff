//! Projected links and the two cone isomorphisms
//! `S_k(L̂k_v) ≅ S_k(St_v)` and `δ_v : S_{k+1}(St°_v) → S_k(St_v)`.

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::complex::{Face, GeometricComplex};
use crate::differential::LinearDifferential;
use crate::error::{Error, Result};
use crate::report::{Certificate, Hypothesis, Report, Verdict};
use crate::stress::{self, StressSpace};

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

fn check_vertex(geo: &GeometricComplex, v: usize) -> Result<()> {
    if !geo.complex().vertex_set().contains(v) {
        return Err(Error::NotAVertex(v + 1));
    }
    if geo.vertex_coords(v).iter().all(|x| x.is_zero()) {
        return Err(Error::Contract(format!("vertex {} sits at the origin", v + 1)));
    }
    Ok(())
}

/// `Lk_v Δ` with every vertex `w` moved to `w - (w·v / v·v) v`, the
/// orthogonal projection onto `v^⊥`. Coordinates stay in `ℚ^d`.
pub fn projected_link(geo: &GeometricComplex, v: usize) -> Result<GeometricComplex> {
    check_vertex(geo, v)?;
    let link = geo.complex().link(Face::singleton(v))?;
    let p = geo.vertex_coords(v);
    let norm = dot(p, p);
    let coords = geo
        .coords()
        .iter()
        .map(|w| {
            let t = dot(w, p) / &norm;
            w.iter().zip(p).map(|(x, y)| x - &t * y).collect()
        })
        .collect();
    GeometricComplex::new(link, coords, geo.ambient_dim())
}

/// Star of a vertex with the coordinates of the whole complex.
pub fn star_of(geo: &GeometricComplex, v: usize) -> Result<GeometricComplex> {
    Ok(geo.with_complex(geo.complex().star(Face::singleton(v))?))
}

#[derive(Clone, Debug, Serialize)]
pub struct ConeLemmaReport {
    pub vertex: usize,
    pub k: isize,
    /// `dim S_k(L̂k_v)`.
    pub link_dim: usize,
    /// `dim S_k(St_v)`.
    pub star_dim: usize,
    /// `dim S_{k+1}(St°_v)`.
    pub open_star_dim: usize,
    /// Rank of `δ_v : S_{k+1}(St°_v) → S_k(St_v)`.
    pub delta_v_rank: usize,
    pub image_in_target: bool,
}

impl ConeLemmaReport {
    pub fn dims_agree(&self) -> bool {
        self.link_dim == self.star_dim && self.star_dim == self.open_star_dim
    }

    pub fn full_rank(&self) -> bool {
        self.image_in_target && self.delta_v_rank == self.open_star_dim && self.delta_v_rank == self.star_dim
    }
}

pub fn cone_lemma_check(geo: &GeometricComplex, v: usize, k: isize) -> Result<ConeLemmaReport> {
    let link = projected_link(geo, v)?;
    let star = star_of(geo, v)?;
    let open = geo.complex().open_star(v)?;
    let link_space = StressSpace::of(&link, k, None);
    let star_space = StressSpace::of(&star, k, None);
    let open_space = StressSpace::of(&star, k + 1, Some(&open.sub));
    let r = stress::map_rank(&LinearDifferential::vertex(geo.ground_size(), v), &open_space, &star_space);
    Ok(ConeLemmaReport {
        vertex: v + 1,
        k,
        link_dim: link_space.dim(),
        star_dim: star_space.dim(),
        open_star_dim: open_space.dim(),
        delta_v_rank: r.rank,
        image_in_target: r.image_in_target,
    })
}

impl Certificate for ConeLemmaReport {
    fn report(&self) -> Report {
        let verdict = if self.dims_agree() && self.full_rank() { Verdict::Verified } else { Verdict::Violated };
        let hyps = vec![Hypothesis::new("vertex has nonzero coordinates", true)];
        Report::new("cone-lemma", hyps, verdict, serde_json::Value::Null, self)
    }
}
