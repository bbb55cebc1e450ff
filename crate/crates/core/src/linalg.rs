//! Exact sparse linear algebra over the rationals.
//!
//! Every row handed to the eliminator is cleared of denominators and divided
//! by its content, so elimination runs on primitive integer rows. A pivot row
//! `p` clears the entry of a row `r` at the pivot column via
//! `r <- (p_c / g) * r - (r_c / g) * p` with `g = gcd(p_c, r_c)`, and the result
//! is made primitive again. This keeps coefficients close to the size of the
//! corresponding minors without ever forming a fraction. Kernel vectors and
//! solutions come from back-substitution on the fully reduced echelon form.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Sparse rational vector: `(index, value)` pairs, indices strictly increasing,
/// no stored zeros.
pub type SparseVec = Vec<(usize, BigRational)>;

type IntRow = Vec<(usize, BigInt)>;

/// Sparse row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<SparseVec>,
}

impl RationalMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        RationalMatrix { nrows, ncols, rows: vec![Vec::new(); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i].push((i, BigRational::one()));
        }
        m
    }

    /// Builds a matrix from sparse rows. Entries may arrive unsorted and with
    /// repeated columns; they are summed and zeros dropped.
    pub fn from_sparse_rows(ncols: usize, rows: Vec<SparseVec>) -> Self {
        let nrows = rows.len();
        let rows = rows.into_iter().map(|r| normalize(r, ncols)).collect();
        RationalMatrix { nrows, ncols, rows }
    }

    pub fn from_dense(ncols: usize, rows: &[Vec<BigRational>]) -> Self {
        let sparse = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), ncols, "row length does not match column count");
                r.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j, v.clone()))
                    .collect()
            })
            .collect();
        RationalMatrix { nrows: rows.len(), ncols, rows: sparse }
    }

    /// Matrix whose columns are the given sparse vectors of length `nrows`.
    pub fn from_columns(nrows: usize, columns: &[SparseVec]) -> Self {
        let mut rows: Vec<SparseVec> = vec![Vec::new(); nrows];
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col {
                assert!(*i < nrows, "column entry out of range");
                if !v.is_zero() {
                    rows[*i].push((j, v.clone()));
                }
            }
        }
        RationalMatrix { nrows, ncols: columns.len(), rows }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> BigRational {
        self.rows[i]
            .binary_search_by_key(&j, |(c, _)| *c)
            .map(|k| self.rows[i][k].1.clone())
            .unwrap_or_else(|_| BigRational::zero())
    }

    pub fn transpose(&self) -> RationalMatrix {
        RationalMatrix::from_columns(self.ncols, &self.rows)
    }

    pub fn mul_vec(&self, x: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(x.len(), self.ncols, "vector length does not match column count");
        self.rows
            .iter()
            .map(|r| r.iter().fold(BigRational::zero(), |acc, (j, v)| acc + v * &x[*j]))
            .collect()
    }
}

fn normalize(mut row: SparseVec, ncols: usize) -> SparseVec {
    row.sort_by_key(|(j, _)| *j);
    let mut out: SparseVec = Vec::with_capacity(row.len());
    for (j, v) in row {
        assert!(j < ncols, "column index {j} out of range {ncols}");
        match out.last_mut() {
            Some((lj, lv)) if *lj == j => *lv += v,
            _ => out.push((j, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// Rational row scaled to a primitive integer row with positive leading entry.
fn primitive(row: &SparseVec) -> IntRow {
    let lcm = row.iter().fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    let ints: IntRow = row
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(j, v)| (*j, v.numer() * (&lcm / v.denom())))
        .collect();
    make_primitive(ints)
}

fn make_primitive(mut row: IntRow) -> IntRow {
    let Some(first) = row.first() else { return row };
    let mut g = BigInt::zero();
    for (_, v) in &row {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    if first.1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
    row
}

fn coeff_at(row: &IntRow, col: usize) -> Option<&BigInt> {
    row.binary_search_by_key(&col, |(c, _)| *c).ok().map(|k| &row[k].1)
}

/// Clears column `col` of `row` using `pivot`, whose entry at `col` is nonzero.
fn eliminate(row: &IntRow, pivot: &IntRow, col: usize) -> IntRow {
    let p = coeff_at(pivot, col).expect("pivot row has no entry at pivot column");
    let Some(r) = coeff_at(row, col) else { return row.clone() };
    let g = p.gcd(r);
    let a = p / &g;
    let b = r / &g;
    let mut out: IntRow = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut k) = (0, 0);
    while i < row.len() || k < pivot.len() {
        let ci = row.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let ck = pivot.get(k).map(|e| e.0).unwrap_or(usize::MAX);
        if ci < ck {
            out.push((ci, &a * &row[i].1));
            i += 1;
        } else if ck < ci {
            out.push((ck, -(&b * &pivot[k].1)));
            k += 1;
        } else {
            let v = &a * &row[i].1 - &b * &pivot[k].1;
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            k += 1;
        }
    }
    make_primitive(out)
}

/// Incremental row echelon form of a set of rational vectors.
///
/// Supports rank growth tests and span membership without recomputing from
/// scratch, which is how images of stress bases are compared.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, IntRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn reduce(&self, mut row: IntRow) -> IntRow {
        while let Some(&(lead, _)) = row.first() {
            match self.pivots.get(&lead) {
                Some(p) => row = eliminate(&row, p, lead),
                None => break,
            }
        }
        row
    }

    /// Adds a vector; returns whether it increased the rank.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        self.insert_int(primitive(v))
    }

    fn insert_int(&mut self, row: IntRow) -> bool {
        let row = self.reduce(row);
        match row.first() {
            Some(&(lead, _)) => {
                self.pivots.insert(lead, row);
                true
            }
            None => false,
        }
    }

    /// Whether `v` lies in the span of the inserted vectors.
    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(primitive(v)).is_empty()
    }

    /// Rows of the fully reduced echelon form, keyed by pivot column: every
    /// pivot column is zero in all other rows.
    fn into_reduced(self) -> BTreeMap<usize, IntRow> {
        let mut pivots = self.pivots;
        let cols: Vec<usize> = pivots.keys().copied().collect();
        for (idx, &c) in cols.iter().enumerate().rev() {
            let prow = pivots[&c].clone();
            for &other in &cols[..idx] {
                let orow = &pivots[&other];
                if coeff_at(orow, c).is_some() {
                    let reduced = eliminate(orow, &prow, c);
                    pivots.insert(other, reduced);
                }
            }
        }
        pivots
    }
}

fn echelon_of(m: &RationalMatrix) -> Echelon {
    let mut e = Echelon::new();
    for r in &m.rows {
        e.insert(r);
    }
    e
}

pub fn rank(m: &RationalMatrix) -> usize {
    echelon_of(m).rank()
}

/// Basis of `{x : Mx = 0}`, one vector per free column, each scaled to a
/// primitive integer vector. Deterministic for a given matrix.
pub fn kernel_basis(m: &RationalMatrix) -> Vec<Vec<BigRational>> {
    let e = echelon_of(m);
    let r = e.rank();
    let reduced = e.into_reduced();
    let mut basis = Vec::new();
    for f in (0..m.ncols).filter(|c| !reduced.contains_key(c)) {
        let mut x = vec![BigRational::zero(); m.ncols];
        x[f] = BigRational::one();
        for (&p, row) in &reduced {
            if let Some(v) = coeff_at(row, f) {
                let lead = coeff_at(row, p).expect("pivot entry");
                x[p] = -BigRational::new(v.clone(), lead.clone());
            }
        }
        basis.push(scale_to_primitive(x));
    }
    assert_eq!(r + basis.len(), m.ncols, "rank-nullity violated");
    basis
}

/// Sparse form of [`kernel_basis`].
pub fn kernel_basis_sparse(m: &RationalMatrix) -> Vec<SparseVec> {
    kernel_basis(m).into_iter().map(|v| to_sparse(&v)).collect()
}

/// One solution of `Mx = b`, or `None` if the system is inconsistent.
pub fn solve(m: &RationalMatrix, b: &[BigRational]) -> Option<Vec<BigRational>> {
    assert_eq!(b.len(), m.nrows, "right-hand side length does not match row count");
    let aug = m.ncols;
    let mut e = Echelon::new();
    for (i, r) in m.rows.iter().enumerate() {
        let mut row = r.clone();
        if !b[i].is_zero() {
            row.push((aug, b[i].clone()));
        }
        e.insert(&row);
    }
    if e.pivots.contains_key(&aug) {
        return None;
    }
    let reduced = e.into_reduced();
    let mut x = vec![BigRational::zero(); m.ncols];
    for (&p, row) in &reduced {
        if let Some(v) = coeff_at(row, aug) {
            let lead = coeff_at(row, p).expect("pivot entry");
            x[p] = BigRational::new(v.clone(), lead.clone());
        }
    }
    debug_assert_eq!(m.mul_vec(&x), b);
    Some(x)
}

/// `rows - rank`: the codimension of the column space.
pub fn coker_dim(m: &RationalMatrix) -> usize {
    m.nrows - rank(m)
}

pub fn to_sparse(v: &[BigRational]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub fn to_dense(v: &SparseVec, len: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// Scales a rational vector to the primitive integer vector on the same ray.
pub fn scale_to_primitive(v: Vec<BigRational>) -> Vec<BigRational> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v;
    }
    ints.into_iter().map(|x| BigRational::from_integer(x / &g)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn empty_constraints_give_standard_basis() {
        let m = RationalMatrix::zeros(0, 3);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 3);
        assert_eq!(k[1], vec![q(0), q(1), q(0)]);
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(kernel_basis(&RationalMatrix::identity(3)).is_empty());
        let b = vec![q(4), q(-2), BigRational::new(1.into(), 3.into())];
        assert_eq!(solve(&RationalMatrix::identity(3), &b), Some(b));
    }

    #[test]
    fn inconsistent_system_is_reported() {
        let m = RationalMatrix::from_dense(2, &[vec![q(1), q(1)], vec![q(2), q(2)]]);
        assert_eq!(solve(&m, &[q(1), q(3)]), None);
        assert!(solve(&m, &[q(1), q(2)]).is_some());
    }

    #[test]
    fn zero_matrix_rank() {
        assert_eq!(rank(&RationalMatrix::zeros(2, 2)), 0);
        assert_eq!(coker_dim(&RationalMatrix::zeros(2, 2)), 2);
    }

    #[test]
    fn membership_after_insertions() {
        let mut e = Echelon::new();
        assert!(e.insert(&vec![(0, q(2)), (2, q(4))]));
        assert!(e.insert(&vec![(1, q(3))]));
        assert!(!e.insert(&vec![(0, q(1)), (1, q(1)), (2, q(2))]));
        assert!(e.contains(&vec![(0, q(-1)), (2, q(-2))]));
        assert!(!e.contains(&vec![(2, q(1))]));
    }
}
