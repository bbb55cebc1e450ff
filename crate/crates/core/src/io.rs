//! The shared complex JSON format and rational string encoding.
//!
//! ```json
//! {"ambient_dim": 2,
//!  "vertices": [{"id": 1, "coords": ["1/1", "0/1"], "color": 1}, ...],
//!  "facets": [[1, 2], ...]}
//! ```
//!
//! Rationals are always written as `"p/q"`; on input a bare integer string
//! (`"3"`) or a JSON integer is accepted too. An optional `"parts"` object
//! carries the two halves of a split complex for the cut check.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::complex::{AbstractComplex, Coloring, Face, GeometricComplex};
use crate::error::{Error, Result};
use crate::stress::Stress;

pub fn format_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// A rational serialized as `"p/q"`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct RationalString(pub String);

impl From<&BigRational> for RationalString {
    fn from(q: &BigRational) -> Self {
        RationalString(format_rational(q))
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct VertexEntry {
    id: usize,
    coords: Vec<serde_json::Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    color: Option<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
struct SplitParts {
    first: Vec<Vec<usize>>,
    second: Vec<Vec<usize>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct ComplexFile {
    ambient_dim: usize,
    vertices: Vec<VertexEntry>,
    facets: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    parts: Option<SplitParts>,
}

/// A parsed complex file.
#[derive(Clone, Debug)]
pub struct ComplexDocument {
    pub complex: GeometricComplex,
    /// The two halves of a split complex, if the file carries them.
    pub parts: Option<(AbstractComplex, AbstractComplex)>,
}

fn value_to_rational(v: &serde_json::Value) -> Result<BigRational> {
    match v {
        serde_json::Value::String(s) => parse_rational(s),
        serde_json::Value::Number(n) if n.is_i64() => Ok(BigRational::from_integer(n.as_i64().unwrap().into())),
        other => Err(Error::Parse(format!("coordinate must be a \"p/q\" string, got {other}"))),
    }
}

fn facet_from_ids(ids: &[usize], n: usize) -> Result<Face> {
    let mut f = Face::EMPTY;
    for &id in ids {
        if id == 0 || id > n {
            return Err(Error::Parse(format!("facet refers to unknown vertex id {id}")));
        }
        if f.contains(id - 1) {
            return Err(Error::Parse(format!("facet repeats vertex id {id}")));
        }
        f = f.with(id - 1);
    }
    Ok(f)
}

pub fn parse_complex(text: &str) -> Result<ComplexDocument> {
    let file: ComplexFile = serde_json::from_str(text)?;
    let n = file.vertices.len();
    if n > crate::complex::MAX_VERTICES {
        return Err(Error::Parse(format!("{n} vertices exceed the supported maximum")));
    }
    let mut coords = vec![Vec::new(); n];
    let mut colors = vec![0; n];
    let mut seen = vec![false; n];
    let mut any_color = false;
    for v in &file.vertices {
        if v.id == 0 || v.id > n || seen[v.id - 1] {
            return Err(Error::Parse(format!("vertex ids must be exactly 1..{n}; bad id {}", v.id)));
        }
        seen[v.id - 1] = true;
        if v.coords.len() != file.ambient_dim {
            return Err(Error::Parse(format!("vertex {} has {} coordinates", v.id, v.coords.len())));
        }
        coords[v.id - 1] = v.coords.iter().map(value_to_rational).collect::<Result<_>>()?;
        if let Some(c) = v.color {
            colors[v.id - 1] = c;
            any_color = true;
        }
    }
    let facets = file.facets.iter().map(|f| facet_from_ids(f, n)).collect::<Result<Vec<_>>>()?;
    let complex = AbstractComplex::new(n, facets);
    let mut geo = GeometricComplex::new(complex, coords, file.ambient_dim)?;
    if any_color {
        geo = geo.with_coloring(Coloring::new(colors))?;
    }
    let parts = match file.parts {
        Some(p) => {
            let first = p.first.iter().map(|f| facet_from_ids(f, n)).collect::<Result<Vec<_>>>()?;
            let second = p.second.iter().map(|f| facet_from_ids(f, n)).collect::<Result<Vec<_>>>()?;
            Some((AbstractComplex::new(n, first), AbstractComplex::new(n, second)))
        }
        None => None,
    };
    Ok(ComplexDocument { complex: geo, parts })
}

pub fn read_complex(path: &std::path::Path) -> Result<ComplexDocument> {
    parse_complex(&std::fs::read_to_string(path)?)
}

fn facet_ids(c: &AbstractComplex) -> Vec<Vec<usize>> {
    c.facets().iter().map(|f| f.labels()).collect()
}

/// Serializes a complex (and optionally the halves of a split) to the shared
/// JSON format.
pub fn complex_to_json(geo: &GeometricComplex, parts: Option<(&AbstractComplex, &AbstractComplex)>) -> String {
    let vertices = (0..geo.ground_size())
        .map(|v| VertexEntry {
            id: v + 1,
            coords: geo.vertex_coords(v).iter().map(|q| format_rational(q).into()).collect(),
            color: geo.coloring().map(|c| c.color(v)),
        })
        .collect();
    let file = ComplexFile {
        ambient_dim: geo.ambient_dim(),
        vertices,
        facets: facet_ids(geo.complex()),
        parts: parts.map(|(a, b)| SplitParts { first: facet_ids(a), second: facet_ids(b) }),
    };
    serde_json::to_string_pretty(&file).expect("complex serialization cannot fail")
}

/// One monomial term of a serialized stress.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StressTerm {
    pub monomial: Vec<u32>,
    pub coeff: RationalString,
}

pub fn stress_terms(s: &Stress) -> Vec<StressTerm> {
    s.terms()
        .map(|(m, c)| StressTerm {
            monomial: m.exponents().iter().map(|e| *e as u32).collect(),
            coeff: c.into(),
        })
        .collect()
}
