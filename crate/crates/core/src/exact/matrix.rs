//! Exact matrices, fraction-free elimination and sparse Gauss-Jordan.
//!
//! Both elimination routes end in the reduced row echelon form, which is
//! unique, so the nullspace basis does not depend on the storage that was
//! picked for a matrix. Kernel vectors are normalised to carry a `1` at their
//! own free column and `0` at every other free column.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;
use crate::error::{AlbertError, Result};

pub type VectorQ = Vec<Rational>;

/// Sparse vector, entries sorted by index, no explicit zeros.
pub type SparseVec = Vec<(usize, Rational)>;

/// Fraction of nonzero entries at or below which [`MatrixQ::from_rows`] stores
/// a matrix sparsely.
pub const DEFAULT_SPARSE_THRESHOLD: f64 = 0.25;

#[derive(Clone)]
enum Storage {
    Dense(Vec<Rational>),
    Sparse(Vec<SparseVec>),
}

/// An exact `rows × cols` rational matrix.
#[derive(Clone)]
pub struct MatrixQ {
    rows: usize,
    cols: usize,
    storage: Storage,
}

pub fn zero_vector(n: usize) -> VectorQ {
    vec![Rational::zero(); n]
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Rational::is_zero)
}

pub fn to_sparse(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(k, x)| (k, x.clone()))
        .collect()
}

pub fn to_dense(v: &SparseVec, n: usize) -> VectorQ {
    let mut out = zero_vector(n);
    for (k, x) in v {
        out[*k] = x.clone();
    }
    out
}

/// `a + factor·b` on sparse vectors.
pub fn sparse_axpy(a: &SparseVec, factor: &Rational, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            let v = factor * &b[j].1;
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = &a[i].1 + &(factor * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn vec_add(a: &[Rational], b: &[Rational]) -> VectorQ {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rational], b: &[Rational]) -> VectorQ {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Rational], s: &Rational) -> VectorQ {
    a.iter().map(|x| x * s).collect()
}

/// `acc += s·v`
pub fn vec_axpy(acc: &mut [Rational], s: &Rational, v: &[Rational]) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &(s * x);
        }
    }
}

impl MatrixQ {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, storage: Storage::Sparse(vec![Vec::new(); rows]) }
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n).map(|i| vec![(i, Rational::one())]).collect();
        Self { rows: n, cols: n, storage: Storage::Sparse(rows) }.with_auto_storage()
    }

    pub fn from_dense(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(AlbertError::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self { rows, cols, storage: Storage::Dense(entries) })
    }

    /// Rows given densely; storage picked by [`DEFAULT_SPARSE_THRESHOLD`].
    pub fn from_rows(rows: Vec<VectorQ>) -> Result<Self> {
        let ncols = rows.first().map_or(0, Vec::len);
        Self::from_rows_with_cols(rows, ncols)
    }

    pub fn from_rows_with_cols(rows: Vec<VectorQ>, ncols: usize) -> Result<Self> {
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(AlbertError::Dimension("ragged rows".into()));
        }
        let nrows = rows.len();
        let entries = rows.into_iter().flatten().collect();
        Ok(Self::from_dense(nrows, ncols, entries)?.with_auto_storage())
    }

    pub fn from_sparse_rows(cols: usize, rows: Vec<SparseVec>) -> Result<Self> {
        for r in &rows {
            if r.windows(2).any(|w| w[0].0 >= w[1].0) || r.iter().any(|(c, x)| *c >= cols || x.is_zero()) {
                return Err(AlbertError::Dimension("malformed sparse row".into()));
            }
        }
        Ok(Self { rows: rows.len(), cols, storage: Storage::Sparse(rows) })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Rational) -> Self {
        let entries = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Self { rows, cols, storage: Storage::Dense(entries) }.with_auto_storage()
    }

    pub fn with_auto_storage(self) -> Self {
        self.with_threshold(DEFAULT_SPARSE_THRESHOLD)
    }

    /// Re-store sparsely when the density is at or below `threshold`.
    pub fn with_threshold(self, threshold: f64) -> Self {
        let total = (self.rows * self.cols).max(1);
        let density = self.nnz() as f64 / total as f64;
        if density <= threshold {
            self.into_sparse()
        } else {
            self.into_dense()
        }
    }

    pub fn into_sparse(self) -> Self {
        match self.storage {
            Storage::Sparse(_) => self,
            Storage::Dense(ref e) => {
                let rows = (0..self.rows).map(|r| to_sparse(&e[r * self.cols..(r + 1) * self.cols])).collect();
                Self { rows: self.rows, cols: self.cols, storage: Storage::Sparse(rows) }
            }
        }
    }

    pub fn into_dense(self) -> Self {
        match self.storage {
            Storage::Dense(_) => self,
            Storage::Sparse(ref rows) => {
                let mut e = zero_vector(self.rows * self.cols);
                for (r, row) in rows.iter().enumerate() {
                    for (c, x) in row {
                        e[r * self.cols + c] = x.clone();
                    }
                }
                Self { rows: self.rows, cols: self.cols, storage: Storage::Dense(e) }
            }
        }
    }

    pub fn is_sparse(&self) -> bool {
        matches!(self.storage, Storage::Sparse(_))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn nnz(&self) -> usize {
        match &self.storage {
            Storage::Dense(e) => e.iter().filter(|x| !x.is_zero()).count(),
            Storage::Sparse(rows) => rows.iter().map(Vec::len).sum(),
        }
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        assert!(r < self.rows && c < self.cols, "index out of range");
        match &self.storage {
            Storage::Dense(e) => e[r * self.cols + c].clone(),
            Storage::Sparse(rows) => rows[r]
                .binary_search_by_key(&c, |(k, _)| *k)
                .map(|i| rows[r][i].1.clone())
                .unwrap_or_default(),
        }
    }

    pub fn row_sparse(&self, r: usize) -> SparseVec {
        match &self.storage {
            Storage::Dense(e) => to_sparse(&e[r * self.cols..(r + 1) * self.cols]),
            Storage::Sparse(rows) => rows[r].clone(),
        }
    }

    pub fn row(&self, r: usize) -> VectorQ {
        match &self.storage {
            Storage::Dense(e) => e[r * self.cols..(r + 1) * self.cols].to_vec(),
            Storage::Sparse(rows) => to_dense(&rows[r], self.cols),
        }
    }

    pub fn sparse_rows(&self) -> Vec<SparseVec> {
        (0..self.rows).map(|r| self.row_sparse(r)).collect()
    }

    pub fn to_rows(&self) -> Vec<VectorQ> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn column(&self, c: usize) -> VectorQ {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t: Vec<SparseVec> = vec![Vec::new(); self.cols];
        for r in 0..self.rows {
            for (c, x) in self.row_sparse(r) {
                t[c].push((r, x));
            }
        }
        Self { rows: self.cols, cols: self.rows, storage: Storage::Sparse(t) }.with_auto_storage()
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<VectorQ> {
        if v.len() != self.cols {
            return Err(AlbertError::Dimension(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows)
            .map(|r| match &self.storage {
                Storage::Dense(e) => dot(&e[r * self.cols..(r + 1) * self.cols], v),
                Storage::Sparse(rows) => rows[r].iter().map(|(c, x)| x * &v[*c]).sum(),
            })
            .collect())
    }

    pub fn mul(&self, other: &MatrixQ) -> Result<MatrixQ> {
        if self.cols != other.rows {
            return Err(AlbertError::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let b = other.sparse_rows();
        let rows = (0..self.rows)
            .map(|r| {
                let mut acc: SparseVec = Vec::new();
                for (k, x) in self.row_sparse(r) {
                    acc = sparse_axpy(&acc, &x, &b[k]);
                }
                acc
            })
            .collect();
        Ok(Self { rows: self.rows, cols: other.cols, storage: Storage::Sparse(rows) }.with_auto_storage())
    }

    pub fn add(&self, other: &MatrixQ) -> Result<MatrixQ> {
        self.lin_comb(&Rational::one(), other, &Rational::one())
    }

    pub fn sub(&self, other: &MatrixQ) -> Result<MatrixQ> {
        self.lin_comb(&Rational::one(), other, &-Rational::one())
    }

    /// `a·self + b·other`
    pub fn lin_comb(&self, a: &Rational, other: &MatrixQ, b: &Rational) -> Result<MatrixQ> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(AlbertError::Dimension("shape mismatch".into()));
        }
        let rows = (0..self.rows)
            .map(|r| {
                let left: SparseVec = self.row_sparse(r).into_iter().map(|(c, x)| (c, a * &x)).filter(|(_, x)| !x.is_zero()).collect();
                sparse_axpy(&left, b, &other.row_sparse(r))
            })
            .collect();
        Ok(Self { rows: self.rows, cols: self.cols, storage: Storage::Sparse(rows) }.with_auto_storage())
    }

    pub fn scale(&self, s: &Rational) -> MatrixQ {
        let rows = (0..self.rows)
            .map(|r| self.row_sparse(r).into_iter().map(|(c, x)| (c, &x * s)).filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        Self { rows: self.rows, cols: self.cols, storage: Storage::Sparse(rows) }.with_auto_storage()
    }

    /// `self·other − other·self`
    pub fn commutator(&self, other: &MatrixQ) -> Result<MatrixQ> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn is_zero(&self) -> bool {
        self.nnz() == 0
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    /// Reduced row echelon form. Dense storage goes through fraction-free
    /// elimination, sparse storage through sparse Gauss-Jordan; both return
    /// the same (unique) result.
    pub fn rref(&self) -> Rref {
        match &self.storage {
            Storage::Dense(_) => bareiss_rref(self),
            Storage::Sparse(rows) => sparse_rref(self.cols, rows.clone()),
        }
    }

    /// A basis of `{v : self·v = 0}`, one vector per free column in
    /// increasing column order.
    pub fn nullspace(&self) -> Vec<VectorQ> {
        self.rref().nullspace_basis()
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Determinant by Bareiss elimination. Errors on non-square input.
    pub fn determinant(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(AlbertError::Dimension("determinant of a non-square matrix".into()));
        }
        Ok(bareiss_determinant(self))
    }

    /// Leading principal minors `det(A[..k,..k])` for `k = 1..=n`, computed
    /// together by one fraction-free elimination without pivoting.
    ///
    /// When a leading minor vanishes the remaining ones are recomputed
    /// directly.
    pub fn leading_minors(&self) -> Result<Vec<Rational>> {
        if !self.is_square() {
            return Err(AlbertError::Dimension("minors of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone().into_dense().to_rows();
        let mut minors = Vec::with_capacity(n);
        let mut prev = Rational::one();
        for k in 0..n {
            let pivot = a[k][k].clone();
            minors.push(pivot.clone());
            if pivot.is_zero() {
                for j in k + 1..n {
                    let sub = MatrixQ::from_fn(j + 1, j + 1, |r, c| self.get(r, c));
                    minors.push(bareiss_determinant(&sub));
                }
                break;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&pivot * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
                a[i][k] = Rational::zero();
            }
            prev = pivot;
        }
        Ok(minors)
    }

    /// Sylvester's criterion on a symmetric matrix.
    pub fn is_positive_definite(&self) -> Result<bool> {
        if !self.is_symmetric() {
            return Err(AlbertError::Dimension("positive definiteness of a non-symmetric matrix".into()));
        }
        Ok(self.leading_minors()?.iter().all(Rational::is_positive))
    }

    pub fn is_negative_definite(&self) -> Result<bool> {
        self.scale(&-Rational::one()).is_positive_definite()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|r| self.row_sparse(r).iter().all(|(c, x)| self.get(*c, r) == *x))
    }

    /// Exact inverse by Gauss-Jordan, or `None` when singular.
    pub fn inverse(&self) -> Option<MatrixQ> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug: Vec<SparseVec> = (0..n)
            .map(|r| {
                let mut row = self.row_sparse(r);
                row.push((n + r, Rational::one()));
                row
            })
            .collect();
        let rref = sparse_rref(2 * n, aug);
        if rref.pivots.len() < n || rref.pivots[n - 1] >= n {
            return None;
        }
        let rows = rref
            .rows
            .into_iter()
            .map(|row| row.into_iter().filter(|(c, _)| *c >= n).map(|(c, x)| (c - n, x)).collect())
            .collect();
        Some(Self { rows: n, cols: n, storage: Storage::Sparse(rows) }.with_auto_storage())
    }

    /// One solution of `self·x = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Option<VectorQ> {
        if b.len() != self.rows {
            return None;
        }
        let n = self.cols;
        let aug: Vec<SparseVec> = (0..self.rows)
            .map(|r| {
                let mut row = self.row_sparse(r);
                if !b[r].is_zero() {
                    row.push((n, b[r].clone()));
                }
                row
            })
            .collect();
        let rref = sparse_rref(n + 1, aug);
        if rref.pivots.last() == Some(&n) {
            return None;
        }
        let mut x = zero_vector(n);
        for (row, p) in rref.rows.iter().zip(&rref.pivots) {
            if let Some((_, v)) = row.iter().find(|(c, _)| *c == n) {
                x[*p] = v.clone();
            }
        }
        Some(x)
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        self.to_rows().iter().map(|r| r.iter().map(Rational::to_f64).collect()).collect()
    }
}

impl PartialEq for MatrixQ {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && (0..self.rows).all(|r| self.row_sparse(r) == other.row_sparse(r))
    }
}

impl Eq for MatrixQ {}

impl fmt::Debug for MatrixQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixQ {}x{} [", self.rows, self.cols)?;
        for r in self.to_rows() {
            let s: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", s.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for MatrixQ {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for MatrixQ {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<VectorQ>::deserialize(d)?;
        MatrixQ::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

/// Reduced row echelon form: each row starts with `1` at its pivot column and
/// is zero at every other pivot column.
#[derive(Clone, Debug)]
pub struct Rref {
    pub cols: usize,
    pub pivots: Vec<usize>,
    pub rows: Vec<SparseVec>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.cols];
        for p in &self.pivots {
            is_pivot[*p] = true;
        }
        (0..self.cols).filter(|c| !is_pivot[*c]).collect()
    }

    pub fn nullspace_basis(&self) -> Vec<VectorQ> {
        let free = self.free_columns();
        let mut basis: Vec<VectorQ> = free
            .iter()
            .map(|f| {
                let mut v = zero_vector(self.cols);
                v[*f] = Rational::one();
                v
            })
            .collect();
        let slot: std::collections::HashMap<usize, usize> = free.iter().enumerate().map(|(k, f)| (*f, k)).collect();
        for (row, p) in self.rows.iter().zip(&self.pivots) {
            for (c, x) in row {
                if let Some(k) = slot.get(c) {
                    basis[*k][*p] = -x;
                }
            }
        }
        basis
    }
}

/// Sparse Gauss-Jordan. Rows are inserted shortest first and reduced against
/// the pivots found so far; a final back-substitution yields the RREF.
pub fn sparse_rref(cols: usize, rows: Vec<SparseVec>) -> Rref {
    let mut order: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i].is_empty()).collect();
    order.sort_by_key(|&i| (rows[i].len(), i));
    let mut pivot_row: Vec<Option<usize>> = vec![None; cols];
    let mut stored: Vec<SparseVec> = Vec::new();
    for i in order {
        if let Some(row) = reduce_against(rows[i].clone(), &pivot_row, &stored) {
            let lead = row[0].0;
            let inv = row[0].1.recip();
            let row: SparseVec = row.into_iter().map(|(c, x)| (c, &x * &inv)).collect();
            pivot_row[lead] = Some(stored.len());
            stored.push(row);
        }
    }
    back_substitute(cols, pivot_row, stored)
}

fn reduce_against(mut row: SparseVec, pivot_row: &[Option<usize>], stored: &[SparseVec]) -> Option<SparseVec> {
    let mut start = 0;
    // entries before `start` sit at columns without a pivot and stay untouched
    while let Some(pos) = row[start..].iter().position(|(c, _)| pivot_row[*c].is_some()) {
        let k = start + pos;
        let (c, x) = row[k].clone();
        let p = &stored[pivot_row[c].expect("checked")];
        row = sparse_axpy(&row, &-x, p);
        start = k;
    }
    (!row.is_empty()).then_some(row)
}

fn back_substitute(cols: usize, pivot_row: Vec<Option<usize>>, mut stored: Vec<SparseVec>) -> Rref {
    // rows were reduced only at pivot columns known at insertion time; clear
    // every later pivot column, highest pivot first
    let pivots: Vec<usize> = (0..cols).filter(|c| pivot_row[*c].is_some()).collect();
    for &p in pivots.iter().rev() {
        let pr = pivot_row[p].expect("pivot");
        let prow = stored[pr].clone();
        for (idx, row) in stored.iter_mut().enumerate() {
            if idx == pr {
                continue;
            }
            if let Ok(k) = row.binary_search_by_key(&p, |(c, _)| *c) {
                let x = row[k].1.clone();
                *row = sparse_axpy(row, &-x, &prow);
            }
        }
    }
    let rows = pivots.iter().map(|p| stored[pivot_row[*p].expect("pivot")].clone()).collect();
    Rref { cols, pivots, rows }
}

/// Fraction-free forward elimination followed by normalisation.
fn bareiss_rref(m: &MatrixQ) -> Rref {
    let (nr, nc) = (m.rows, m.cols);
    // clear denominators row by row so the elimination stays integral
    let mut a: Vec<VectorQ> = m
        .to_rows()
        .into_iter()
        .map(|row| {
            let l = row.iter().fold(num_bigint::BigInt::from(1), |acc, x| num_integer::lcm(acc, x.denom()));
            let l = Rational::from_bigint(l);
            row.iter().map(|x| x * &l).collect()
        })
        .collect();
    let mut prev = Rational::one();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..nc {
        if r == nr {
            break;
        }
        let Some(p) = (r..nr).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in r + 1..nr {
            for j in c + 1..nc {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = Rational::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    let stored: Vec<SparseVec> = a
        .iter()
        .take(r)
        .zip(&pivots)
        .map(|(row, &c)| {
            let inv = row[c].recip();
            to_sparse(row).into_iter().map(|(k, x)| (k, &x * &inv)).collect()
        })
        .collect();
    let mut pivot_row = vec![None; nc];
    for (k, c) in pivots.iter().enumerate() {
        pivot_row[*c] = Some(k);
    }
    back_substitute(nc, pivot_row, stored)
}

fn bareiss_determinant(m: &MatrixQ) -> Rational {
    let n = m.rows;
    let mut a = m.to_rows();
    let mut prev = Rational::one();
    let mut sign = Rational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else { return Rational::zero() };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = Rational::zero();
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        Rational::one()
    } else {
        sign * &a[n - 1][n - 1]
    }
}

/// Coordinates with respect to a fixed list of linearly independent vectors.
#[derive(Clone, Debug)]
pub struct Coordinatizer {
    basis: Vec<VectorQ>,
    pivots: Vec<usize>,
    /// inverse of the basis restricted to the pivot columns
    inv: Vec<VectorQ>,
}

impl Coordinatizer {
    pub fn new(basis: Vec<VectorQ>) -> Result<Self> {
        let n = basis.first().map_or(0, Vec::len);
        let m = MatrixQ::from_rows_with_cols(basis.clone(), n)?;
        let rref = m.clone().into_sparse().rref();
        if rref.rank() != basis.len() {
            return Err(AlbertError::Dimension("basis vectors are linearly dependent".into()));
        }
        let pivots = rref.pivots.clone();
        let sub = MatrixQ::from_fn(basis.len(), basis.len(), |i, j| basis[i][pivots[j]].clone());
        let inv = sub.inverse().expect("pivot minor is invertible").to_rows();
        Ok(Self { basis, pivots, inv })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[VectorQ] {
        &self.basis
    }

    /// Coefficients `c` with `v = Σ c_k basis_k`, or `None` when `v` is not in
    /// the span.
    pub fn coordinates(&self, v: &[Rational]) -> Option<VectorQ> {
        let k = self.basis.len();
        // c^T · B_P = v_P^T  ⇒  c^T = v_P^T · B_P^{-1}
        let mut c = zero_vector(k);
        for (j, p) in self.pivots.iter().enumerate() {
            vec_axpy(&mut c, &v[*p], &self.inv[j]);
        }
        let mut recon = zero_vector(v.len());
        for (ci, b) in c.iter().zip(&self.basis) {
            vec_axpy(&mut recon, ci, b);
        }
        (recon.as_slice() == v).then_some(c)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn m(rows: &[&[i64]]) -> MatrixQ {
        MatrixQ::from_rows(rows.iter().map(|r| r.iter().map(|x| q(*x)).collect()).collect()).unwrap()
    }

    #[test]
    fn nullspace_examples() {
        assert!(m(&[&[1, 0], &[0, 1]]).nullspace().is_empty());
        assert_eq!(m(&[&[0, 0], &[0, 0]]).nullspace().len(), 2);
        let ns = m(&[&[1, 1], &[2, 2]]).nullspace();
        assert_eq!(ns, vec![vec![q(-1), q(1)]]);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(MatrixQ::identity(4).rank(), 4);
        assert_eq!(MatrixQ::zeros(3, 5).rank(), 0);
        assert_eq!(m(&[&[1, 1], &[2, 2]]).rank(), 1);
    }

    #[test]
    fn dense_and_sparse_rref_agree() {
        let a = m(&[&[2, 4, -2, 1], &[1, 2, 0, 3], &[3, 6, -2, 4]]);
        let dense = a.clone().into_dense().rref();
        let sparse = a.clone().into_sparse().rref();
        assert_eq!(dense.pivots, sparse.pivots);
        assert_eq!(dense.rows, sparse.rows);
        assert_eq!(a.clone().into_dense(), a.into_sparse());
    }

    #[test]
    fn determinant_and_minors() {
        let a = m(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        assert_eq!(a.determinant().unwrap(), q(4));
        assert_eq!(a.leading_minors().unwrap(), vec![q(2), q(3), q(4)]);
        assert!(a.is_positive_definite().unwrap());
        assert!(!m(&[&[1, 2], &[2, 1]]).is_positive_definite().unwrap());
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant().unwrap(), q(-1));
    }

    #[test]
    fn minors_with_vanishing_leading_entry() {
        let a = m(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(a.leading_minors().unwrap(), vec![q(0), q(-1), q(-1)]);
    }

    #[test]
    fn inverse_and_solve() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), MatrixQ::identity(2));
        assert_eq!(a.solve(&[q(3), q(2)]).unwrap(), vec![q(1), q(1)]);
        assert!(m(&[&[1, 1], &[2, 2]]).solve(&[q(1), q(1)]).is_none());
        assert!(m(&[&[1, 1], &[2, 2]]).inverse().is_none());
    }

    #[test]
    fn coordinatizer_round_trip() {
        let basis = vec![vec![q(1), q(1), q(0)], vec![q(0), q(1), q(1)]];
        let c = Coordinatizer::new(basis).unwrap();
        assert_eq!(c.coordinates(&[q(2), q(5), q(3)]).unwrap(), vec![q(2), q(3)]);
        assert!(c.coordinates(&[q(1), q(0), q(0)]).is_none());
    }

    #[test]
    fn json_uses_exact_strings() {
        let a = m(&[&[1, -2]]);
        assert_eq!(serde_json::to_string(&a).unwrap(), r#"[["1/1","-2/1"]]"#);
        let b: MatrixQ = serde_json::from_str(r#"[["1/2","0/1"],["3/1","-1/3"]]"#).unwrap();
        assert_eq!(b.get(1, 1), Rational::new(-1, 3));
    }
}
