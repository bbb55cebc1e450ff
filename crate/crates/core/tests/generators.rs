mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use stressca::report::{Certificate, Verdict};
use stressca::triangulation::{self, balanced_clique_complex, k_stacked_triangulation};
use stressca::{generators, homology, AbstractComplex, Coloring, Error, Face, GeometricComplex, StressSpace};

use common::{facets_of, h_vector};

fn face(vs: &[usize]) -> Face {
    vs.iter().map(|v| v - 1).collect()
}

fn binom(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

fn stress_dims(geo: &GeometricComplex) -> Vec<i64> {
    (0..=geo.ambient_dim() as isize).map(|k| StressSpace::of(geo, k, None).dim() as i64).collect()
}

#[test]
fn simplex_boundaries() {
    assert_eq!(generators::simplex_boundary(3).complex().f_vector(), vec![1, 4, 6, 4]);
    assert_eq!(generators::simplex_boundary(2).complex().f_vector(), vec![1, 3, 3]);
    assert_eq!(generators::simplex_boundary(4).complex().facets().len(), 5);
}

#[test]
fn cross_polytope_boundaries() {
    assert_eq!(generators::cross_polytope_boundary(3).complex().f_vector(), vec![1, 6, 12, 8]);
    let square = generators::cross_polytope_boundary(2);
    assert_eq!(square.coloring().unwrap(), &Coloring::new(vec![1, 1, 2, 2]));
    let c4 = generators::cross_polytope_boundary(4);
    assert_eq!(c4.complex().facets().len(), 16);
    let h: Vec<i64> = (0..=4).map(|i| binom(4, i)).collect();
    assert_eq!(h_vector(&facets_of(c4.complex())), h);
    assert_eq!(stress_dims(&c4), h);
}

#[test]
fn cyclic_polytopes() {
    assert_eq!(generators::cyclic_boundary(4, 6).complex().facets().len(), 9);
    assert_eq!(generators::cyclic_boundary(4, 7).complex().facets().len(), 14);
    let pentagon = generators::cyclic_boundary(2, 5);
    assert_eq!(pentagon.complex().f_vector(), vec![1, 5, 5]);
    assert!(homology::is_homology_sphere(pentagon.complex()));
    assert!(pentagon.is_proper());
}

#[test]
fn stacked_polytopes() {
    let s = generators::stacked_boundary(4, 7);
    assert_eq!(s.complex().facets().len(), 11);
    assert_eq!(h_vector(&facets_of(s.complex())), vec![1, 3, 3, 3, 1]);
    assert_eq!(homology::stress_g(&s, 2), 0);
    assert_eq!(generators::stacked_boundary(4, 5).complex(), generators::simplex_boundary(4).complex());
    // Each stacking replaces one facet by d.
    assert_eq!(generators::stacked_boundary(3, 6).complex().facets().len(), 8);
}

#[test]
fn projecting_a_vertex_link_to_the_plane() {
    let oct = generators::cross_polytope_boundary(3);
    let link = oct.with_complex(oct.complex().link(Face::singleton(0)).unwrap());
    let flat = generators::generic_projection(&link, 2, 1).unwrap();
    assert_eq!(flat.ambient_dim(), 2);
    assert!(flat.is_proper());
    assert_eq!(stress_dims(&flat), vec![1, 2, 1]);
}

#[test]
fn projection_to_the_same_dimension_keeps_properness() {
    let oct = generators::cross_polytope_boundary(3);
    assert!(generators::generic_projection(&oct, 3, 4).unwrap().is_proper());
    assert!(matches!(generators::generic_projection(&oct, 4, 4), Err(Error::Contract(_))));
}

#[test]
fn projecting_a_color_restriction() {
    let c4 = generators::cross_polytope_boundary(4);
    let colors = c4.coloring().unwrap().vertices_with_colors(&[1, 2, 3]);
    let restricted = c4.with_complex(c4.complex().induced(colors));
    let projected = generators::generic_projection(&restricted, 3, 2).unwrap();
    assert!(projected.is_proper());
    let expected = h_vector(&facets_of(restricted.complex()));
    assert_eq!(expected, vec![1, 3, 3, 1]);
    assert_eq!(stress_dims(&projected), expected);
}

#[test]
fn bipyramid_split_shares_the_equator() {
    let b = generators::bipyramid_split();
    assert_eq!(b.complex.complex().f_vector(), vec![1, 6, 12, 8]);
    assert_eq!(b.upper.union(&b.lower), *b.complex.complex());
    assert_eq!(b.upper.intersection(&b.lower), b.equator);
    assert_eq!(b.equator.facets().len(), 4);
    assert!(b.equator.is_induced_in(b.complex.complex()));
}

#[test]
fn simplex_boundary_fills_to_the_solid_simplex() {
    for d in 2..=4 {
        let s = generators::simplex_boundary(d);
        let (cl, r) = k_stacked_triangulation(&s, 1).unwrap();
        assert_eq!(cl.facets(), &[Face::full(d + 1)]);
        assert_eq!(r.report().verdict, Verdict::Verified, "d={d}");
    }
}

#[test]
fn stacked_four_polytope_triangulation() {
    let s = generators::stacked_boundary(4, 7);
    let (cl, r) = k_stacked_triangulation(&s, 2).unwrap();
    assert_eq!(cl.facets().len(), 3);
    assert!(r.cohen_macaulay && r.betti.is_zero() && r.interior_faces.is_empty());
    assert_eq!(r.report().verdict, Verdict::Verified);
}

#[test]
fn octahedron_is_its_own_two_clique_complex() {
    let oct = generators::cross_polytope_boundary(3);
    let (cl, r) = k_stacked_triangulation(&oct, 2).unwrap();
    assert_eq!(&cl, oct.complex());
    assert_eq!(r.g_k, 0);
    assert_eq!(r.report().verdict, Verdict::HypothesesNotMet);
    assert!(k_stacked_triangulation(&oct, 0).is_err());
}

#[test]
fn octahedron_balanced_clique_complex() {
    let oct = generators::cross_polytope_boundary(3);
    let (out, r) = balanced_clique_complex(&oct, 1).unwrap();
    assert_eq!(r.antipodes, 3);
    assert_eq!(r.centers.len(), 1);
    assert_eq!(r.centers[0].vertex, 7);
    assert_eq!(r.centers[0].antipodes, vec![(1, 2), (3, 4), (5, 6)]);
    assert!(r.centers[0].link_is_crosspolytope);
    assert_eq!(out.complex().facets().len(), 8);
    assert!(out.complex().facets().iter().all(|f| f.contains(6) && f.len() == 4));
    assert!(homology::reduced_betti(out.complex()).is_zero());
    assert_eq!(out.coloring().unwrap().color(6), 4);
    assert_eq!(r.report().verdict, Verdict::Verified);
}

#[test]
fn four_dimensional_cross_polytope_balanced_clique_complex() {
    let c4 = generators::cross_polytope_boundary(4);
    let (out, r) = balanced_clique_complex(&c4, 2).unwrap();
    assert!(!r.centers.is_empty());
    for c in &r.centers {
        let link = out.complex().link(Face::singleton(c.vertex - 1)).unwrap();
        assert_eq!(triangulation::is_crosspolytope_boundary(&link), c.link_is_crosspolytope);
        assert!(c.link_is_crosspolytope);
    }
    assert!(r.conclusion(), "{r:?}");
}

#[test]
fn no_same_color_pairs_means_no_centers() {
    let rows = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    let coords = rows.iter().map(|r| r.iter().map(|x| BigRational::from_integer(BigInt::from(*x))).collect()).collect();
    let triangle = AbstractComplex::new(3, [Face::full(3)]);
    let geo = GeometricComplex::new(triangle.clone(), coords, 3).unwrap().with_coloring(Coloring::new(vec![1, 2, 3])).unwrap();
    let (out, r) = balanced_clique_complex(&geo, 1).unwrap();
    assert_eq!(r.antipodes, 0);
    assert!(r.centers.is_empty());
    assert_eq!(out.complex(), &triangle.clique_complex(1));
}

#[test]
fn balanced_clique_needs_a_coloring() {
    let s = generators::simplex_boundary(3);
    assert!(matches!(balanced_clique_complex(&s, 1), Err(Error::Contract(_))));
}

#[test]
fn crosspolytope_recognition() {
    assert!(triangulation::is_crosspolytope_boundary(generators::cross_polytope_boundary(3).complex()));
    assert!(!triangulation::is_crosspolytope_boundary(generators::simplex_boundary(3).complex()));
    let hexagon = AbstractComplex::new(6, (1..=6).map(|i| face(&[i, i % 6 + 1])));
    assert!(!triangulation::is_crosspolytope_boundary(&hexagon));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn cyclic_four_polytopes_have_the_expected_facet_count(n in 5usize..=10) {
        let c = generators::cyclic_boundary(4, n);
        prop_assert_eq!(c.complex().facets().len(), n * (n - 3) / 2);
        prop_assert!(c.is_proper());
    }

    #[test]
    fn stacking_adds_d_minus_one_facets(d in 2usize..=5, extra in 0usize..=3) {
        let s = generators::stacked_boundary(d, d + 1 + extra);
        prop_assert_eq!(s.complex().facets().len(), d + 1 + extra * (d - 1));
        prop_assert!(homology::is_homology_sphere(s.complex()));
    }
}
