use thiserror::Error;

use crate::complex::Face;

/// Contract violations and input errors. Mathematical outcomes (a map that is
/// not surjective, a complex that is not Cohen-Macaulay) are verdicts in
/// reports, never errors.
#[derive(Debug, Error)]
pub enum Error {
    /// The given vertex set is not a face of the complex.
    #[error("{0} is not a face of the complex")]
    NotAFace(Face),
    /// The given vertex does not belong to the complex.
    #[error("vertex {0} is not a vertex of the complex")]
    NotAVertex(usize),
    /// Two vertices of one facet share a color.
    #[error("coloring is not injective on facet {0}")]
    InvalidColoring(Face),
    /// The coordinates of a face span a subspace of too small a dimension.
    #[error("face {0} spans a deficient linear subspace")]
    ImproperFace(Face),
    /// A proposed shelling order breaks the purity condition.
    #[error("invalid shelling at step {step}: {reason}")]
    InvalidShelling { step: usize, reason: String },
    /// An exhaustive subset enumeration would exceed the configured budget.
    #[error("enumerating all 2^{n} induced subcomplexes exceeds the cap n <= {cap}")]
    CapExceeded { n: usize, cap: usize },
    /// Generic projection kept producing an improper image.
    #[error("generic projection stayed improper after {0} attempts")]
    DegenerateProjection(usize),
    /// A precondition of an operation does not hold.
    #[error("contract violated: {0}")]
    Contract(String),
    /// Malformed complex or stress input.
    #[error("invalid input: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
