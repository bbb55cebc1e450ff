//! Test-side oracles that do not go through the library's own face tables,
//! h-vector conversion or elimination.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Zero};
use stressca::{generators, AbstractComplex, GeometricComplex};

pub type Facets = Vec<Vec<usize>>;

pub fn facets_of(complex: &AbstractComplex) -> Facets {
    complex.facets().iter().map(|f| f.vertices().collect()).collect()
}

/// Every face (including the empty one) by subset enumeration.
pub fn all_faces(facets: &Facets) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    for f in facets {
        for mask in 0u32..(1 << f.len()) {
            out.insert(f.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, v)| *v).collect());
        }
    }
    out
}

/// `(f_{-1}, ..., f_{dim})`.
pub fn f_vector(facets: &Facets) -> Vec<i64> {
    let faces = all_faces(facets);
    let top = faces.iter().map(Vec::len).max().unwrap_or(0);
    (0..=top).map(|s| faces.iter().filter(|f| f.len() == s).count() as i64).collect()
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `h_k = Σ_i (-1)^{k-i} C(d-i, k-i) f_{i-1}` with `d = dim + 1`.
pub fn h_vector(facets: &Facets) -> Vec<i64> {
    let f = f_vector(facets);
    let d = f.len() as i64 - 1;
    (0..=d)
        .map(|k| (0..=k).map(|i| (if (k - i) % 2 == 0 { 1 } else { -1 }) * binom(d - i, k - i) * f[i as usize]).sum())
        .collect()
}

pub fn h_at(h: &[i64], k: isize) -> i64 {
    usize::try_from(k).ok().and_then(|k| h.get(k)).copied().unwrap_or(0)
}

pub fn g_at(h: &[i64], k: isize) -> i64 {
    h_at(h, k) - h_at(h, k - 1)
}

pub fn link_facets(facets: &Facets, v: usize) -> Facets {
    facets.iter().filter(|f| f.contains(&v)).map(|f| f.iter().copied().filter(|w| *w != v).collect()).collect()
}

/// Rank by textbook Gaussian elimination over dense rationals.
pub fn naive_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, p);
        let inv = BigRational::one() / m[rank][col].clone();
        let pivot: Vec<BigRational> = m[rank].iter().map(|x| x * &inv).collect();
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let c = m[r][col].clone();
                for j in 0..ncols {
                    let delta = &c * &pivot[j];
                    m[r][j] -= delta;
                }
            }
        }
        m[rank] = pivot;
        rank += 1;
    }
    rank
}

/// The polytope boundaries the invariants are checked on.
pub fn suite() -> Vec<(String, GeometricComplex)> {
    let mut out = Vec::new();
    for d in 1..=5 {
        out.push((format!("simplex d={d}"), generators::simplex_boundary(d)));
    }
    for d in 2..=4 {
        out.push((format!("cross d={d}"), generators::cross_polytope_boundary(d)));
    }
    out.push(("cyclic C(4,6)".into(), generators::cyclic_boundary(4, 6)));
    out.push(("cyclic C(4,7)".into(), generators::cyclic_boundary(4, 7)));
    out.push(("stacked d=4 n=7".into(), generators::stacked_boundary(4, 7)));
    out.push(("stacked d=4 n=8".into(), generators::stacked_boundary(4, 8)));
    out
}
