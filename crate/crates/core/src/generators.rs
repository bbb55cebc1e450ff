//! Canonical geometric complexes with exact coordinates.
//!
//! Every polytope is placed with the origin strictly in its interior so that
//! its boundary complex is proper and the coordinate rows form a linear system
//! of parameters.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{AbstractComplex, Coloring, Face, GeometricComplex};
use crate::differential::GENERIC_BOUND;
use crate::error::{Error, Result};
use crate::linalg::{self, RationalMatrix};

/// Projection attempts before giving up on a degenerate input.
pub const PROJECTION_ATTEMPTS: usize = 10;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn int_coords(rows: Vec<Vec<i64>>) -> Vec<Vec<BigRational>> {
    rows.into_iter().map(|r| r.into_iter().map(q).collect()).collect()
}

fn all_subsets_of_size(n: usize, size: usize) -> Vec<Face> {
    Face::full(n).subsets().filter(|f| f.len() == size).collect()
}

/// `∂Δ^d` in `ℝ^d` with vertices `e_1, ..., e_d, -(1, ..., 1)`.
pub fn simplex_boundary(d: usize) -> GeometricComplex {
    assert!(d >= 1, "simplex boundary needs d >= 1");
    let n = d + 1;
    let mut rows: Vec<Vec<i64>> = (0..d).map(|i| (0..d).map(|j| i64::from(i == j)).collect()).collect();
    rows.push(vec![-1; d]);
    let complex = AbstractComplex::new(n, all_subsets_of_size(n, d));
    GeometricComplex::new(complex, int_coords(rows), d).expect("consistent by construction")
}

/// Boundary of the `d`-dimensional cross-polytope. Vertex `2i` is `e_{i+1}`,
/// vertex `2i+1` is `-e_{i+1}`, and both carry color `i+1`.
pub fn cross_polytope_boundary(d: usize) -> GeometricComplex {
    assert!(d >= 1, "cross-polytope needs d >= 1");
    let n = 2 * d;
    let rows = (0..n)
        .map(|v| (0..d).map(|j| if v / 2 == j { if v % 2 == 0 { 1 } else { -1 } } else { 0 }).collect())
        .collect();
    let facets = (0..1u64 << d).map(|signs| (0..d).map(|i| 2 * i + ((signs >> i) & 1) as usize).collect());
    let complex = AbstractComplex::new(n, facets);
    let coloring = Coloring::new((0..n).map(|v| v / 2 + 1).collect());
    GeometricComplex::new(complex, int_coords(rows), d)
        .and_then(|g| g.with_coloring(coloring))
        .expect("consistent by construction")
}

/// Facets of the cyclic polytope `C(d, n)` by Gale's evenness condition.
pub fn gale_facets(d: usize, n: usize) -> Vec<Face> {
    all_subsets_of_size(n, d)
        .into_iter()
        .filter(|s| {
            let outside: Vec<usize> = (0..n).filter(|v| !s.contains(*v)).collect();
            outside.windows(2).all(|w| s.vertices().filter(|v| *v > w[0] && *v < w[1]).count() % 2 == 0)
        })
        .collect()
}

/// Boundary of `C(d, n)`: moment-curve points at `t = 1..n`, centered at
/// their centroid and scaled by `n` to keep integer coordinates.
pub fn cyclic_boundary(d: usize, n: usize) -> GeometricComplex {
    assert!(d >= 2 && n > d, "cyclic polytope needs d >= 2 and n >= d + 1");
    let moment: Vec<Vec<i64>> =
        (1..=n as i64).map(|t| (1..=d as u32).map(|j| t.pow(j)).collect()).collect();
    let sums: Vec<i64> = (0..d).map(|j| moment.iter().map(|p| p[j]).sum()).collect();
    let rows = moment
        .iter()
        .map(|p| (0..d).map(|j| n as i64 * p[j] - sums[j]).collect())
        .collect();
    let complex = AbstractComplex::new(n, gale_facets(d, n));
    GeometricComplex::new(complex, int_coords(rows), d).expect("consistent by construction")
}

/// Normal `a` of the hyperplane `a·x = 1` through the vertices of `facet`.
fn facet_normal(coords: &[Vec<BigRational>], facet: Face, d: usize) -> Vec<BigRational> {
    let rows: Vec<Vec<BigRational>> = facet.vertices().map(|v| coords[v].clone()).collect();
    let m = RationalMatrix::from_dense(d, &rows);
    linalg::solve(&m, &vec![BigRational::one(); rows.len()]).expect("facet hyperplane misses the origin")
}

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

/// Stacked `d`-polytope on `n` vertices: starting from `∂Δ^d`, each new
/// vertex is placed just beyond one facet (the first facet, in the fixed
/// facet order, containing the previously added vertex), at
/// `centroid + a / M` with the facet normal `a` and `M` doubled until the
/// point lies beneath every other facet.
pub fn stacked_boundary(d: usize, n: usize) -> GeometricComplex {
    assert!(d >= 2 && n > d, "stacked polytope needs d >= 2 and n >= d + 1");
    let base = simplex_boundary(d);
    let mut coords: Vec<Vec<BigRational>> = base.coords().to_vec();
    let mut facets: Vec<Face> = base.complex().facets().to_vec();
    for new in d + 1..n {
        let last = new - 1;
        let pick = *facets.iter().find(|f| f.contains(last)).unwrap_or(&facets[0]);
        let a = facet_normal(&coords, pick, d);
        let size = BigRational::from_integer(BigInt::from(d as i64));
        let centroid: Vec<BigRational> = (0..d)
            .map(|j| pick.vertices().fold(BigRational::zero(), |acc, v| acc + &coords[v][j]) / &size)
            .collect();
        let others: Vec<Vec<BigRational>> =
            facets.iter().filter(|f| **f != pick).map(|f| facet_normal(&coords, *f, d)).collect();
        let mut scale = q(2);
        let point = loop {
            let p: Vec<BigRational> = centroid.iter().zip(&a).map(|(c, x)| c + x / &scale).collect();
            if others.iter().all(|b| dot(b, &p) < BigRational::one()) {
                break p;
            }
            scale *= q(2);
        };
        coords.push(point);
        facets.retain(|f| *f != pick);
        facets.extend(pick.vertices().map(|u| pick.without(u).with(new)));
        facets.sort();
    }
    let complex = AbstractComplex::new(n, facets);
    GeometricComplex::new(complex, coords, d).expect("consistent by construction")
}

/// Seeded random `m × d` integer matrix with entries in `[-B, B]`.
pub fn random_projection_matrix(m: usize, d: usize, seed: u64) -> Vec<Vec<BigRational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..m).map(|_| (0..d).map(|_| q(rng.gen_range(-GENERIC_BOUND..=GENERIC_BOUND))).collect()).collect()
}

/// Image of `geo` under a seeded random linear map to `ℚ^m`, resampled (and
/// logged) until the image is proper.
pub fn generic_projection(geo: &GeometricComplex, m: usize, seed: u64) -> Result<GeometricComplex> {
    if m > geo.ambient_dim() {
        return Err(Error::Contract(format!(
            "cannot project from dimension {} to {m}",
            geo.ambient_dim()
        )));
    }
    for attempt in 0..PROJECTION_ATTEMPTS as u64 {
        let s = seed.wrapping_add(attempt);
        let image = geo.project(&random_projection_matrix(m, geo.ambient_dim(), s));
        if image.is_proper() {
            return Ok(image);
        }
        log::info!("projection with seed {s} is improper at {:?}; resampling", image.improper_face());
    }
    Err(Error::DegenerateProjection(PROJECTION_ATTEMPTS))
}

/// The octahedron viewed as a bipyramid over the square `1-2-3-4`, with apex
/// `5` above and `6` below, split along the square.
#[derive(Clone, Debug)]
pub struct BipyramidSplit {
    pub complex: GeometricComplex,
    pub upper: AbstractComplex,
    pub lower: AbstractComplex,
    pub equator: AbstractComplex,
}

pub fn bipyramid_split() -> BipyramidSplit {
    let rows = vec![
        vec![1, 0, 0],
        vec![0, 1, 0],
        vec![-1, 0, 0],
        vec![0, -1, 0],
        vec![0, 0, 1],
        vec![0, 0, -1],
    ];
    let ring: Vec<Face> = (0..4).map(|i| Face::singleton(i).with((i + 1) % 4)).collect();
    let upper = AbstractComplex::new(6, ring.iter().map(|e| e.with(4)));
    let lower = AbstractComplex::new(6, ring.iter().map(|e| e.with(5)));
    let complex = upper.union(&lower);
    let equator = upper.intersection(&lower);
    let geo = GeometricComplex::new(complex, int_coords(rows), 3).expect("consistent by construction");
    BipyramidSplit { complex: geo, upper, lower, equator }
}
