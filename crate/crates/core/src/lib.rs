//! Exact stress spaces of geometric simplicial complexes.
//!
//! The crate computes stress spaces `S_k(Δ)` of complexes with rational
//! vertex coordinates, the maps induced by linear differentials between
//! them, and rank-based certificates for toric chordality and related
//! statements about face numbers, homology and Cohen-Macaulayness.
//! Everything is exact; there is no floating point in any decision.

pub mod chordality;
pub mod complex;
pub mod cone;
pub mod differential;
pub mod error;
pub mod generators;
pub mod homology;
pub mod io;
pub mod lefschetz;
pub mod linalg;
pub mod minkowski;
pub mod partition;
pub mod report;
pub mod stress;
pub mod triangulation;

pub use complex::{AbstractComplex, Coloring, Face, FhgVector, GeometricComplex, RelativeComplex};
pub use differential::LinearDifferential;
pub use error::{Error, Result};
pub use stress::{MapRank, Monomial, MonomialBasis, Stress, StressSpace};
