//! Hard Lefschetz ranks `δ^{d-2k} : S_{d-k} → S_k`.

use serde::Serialize;

use crate::complex::GeometricComplex;
use crate::differential::LinearDifferential;
use crate::homology;
use crate::report::{Certificate, Hypothesis, Report, Verdict};
use crate::stress::{self, StressSpace};

#[derive(Clone, Debug, Serialize)]
pub struct LefschetzDegree {
    pub k: usize,
    pub power: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub image_in_target: bool,
}

impl LefschetzDegree {
    pub fn invertible(&self) -> bool {
        self.image_in_target && self.source_dim == self.target_dim && self.rank == self.source_dim
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LefschetzReport {
    pub d: usize,
    pub sphere: bool,
    pub proper: bool,
    pub degrees: Vec<LefschetzDegree>,
}

impl LefschetzReport {
    pub fn all_invertible(&self) -> bool {
        self.degrees.iter().all(LefschetzDegree::invertible)
    }
}

impl Certificate for LefschetzReport {
    fn report(&self) -> Report {
        let hyps = vec![Hypothesis::new("homology sphere", self.sphere), Hypothesis::new("proper", self.proper)];
        let verdict = Verdict::from_checks(self.sphere && self.proper, self.all_invertible());
        let witness = self.degrees.iter().find(|g| !g.invertible()).map(|g| g.k);
        Report::new("lefschetz", hyps, verdict, witness, self)
    }
}

/// `ω^{d-2k} : S_{d-k}(Δ) → S_k(Δ)` for every `0 ≤ k ≤ d/2`.
pub fn hard_lefschetz_check(geo: &GeometricComplex, omega: &LinearDifferential) -> LefschetzReport {
    let d = geo.ambient_dim();
    let degrees = (0..=d / 2)
        .map(|k| {
            let src = StressSpace::of(geo, (d - k) as isize, None);
            let tgt = StressSpace::of(geo, k as isize, None);
            let r = stress::map_rank_power(omega, d - 2 * k, &src, &tgt);
            LefschetzDegree {
                k,
                power: d - 2 * k,
                source_dim: r.source_dim,
                target_dim: r.target_dim,
                rank: r.rank,
                image_in_target: r.image_in_target,
            }
        })
        .collect();
    LefschetzReport {
        d,
        sphere: homology::is_homology_sphere(geo.complex()) && geo.complex().dim() + 1 == d as isize,
        proper: geo.is_proper(),
        degrees,
    }
}
