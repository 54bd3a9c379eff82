use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{AlbertError, Result};
use crate::exact::matrix::{sparse_axpy, to_dense, to_sparse, zero_vector};
use crate::exact::{Coordinatizer, MatrixQ, Rational, SparseVec, VectorQ};

/// A finite-dimensional real algebra given by structure constants
/// `eᵢ·eⱼ = Σₖ c_{ij}^k e_k`, stored as one sparse vector per basis pair.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraSC {
    name: String,
    dim: usize,
    table: Vec<SparseVec>,
    unit: Option<VectorQ>,
    commutative: bool,
}

impl AlgebraSC {
    /// Build from a product rule on basis indices. The unit and the
    /// commutativity flag are computed, not trusted.
    pub fn from_basis_products(name: impl Into<String>, dim: usize, f: impl Fn(usize, usize) -> VectorQ) -> Result<Self> {
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let p = f(i, j);
                if p.len() != dim {
                    return Err(AlbertError::Dimension(format!("product e{i}·e{j} has length {} in dimension {dim}", p.len())));
                }
                table.push(to_sparse(&p));
            }
        }
        Ok(Self::from_table(name.into(), dim, table))
    }

    /// Build from dense constants `sc[i][j][k] = c_{ij}^k`.
    pub fn from_sc(name: impl Into<String>, sc: &[Vec<VectorQ>]) -> Result<Self> {
        let dim = sc.len();
        if sc.iter().any(|row| row.len() != dim) {
            return Err(AlbertError::Dimension("structure constants must be dim × dim × dim".into()));
        }
        Self::from_basis_products(name, dim, |i, j| sc[i][j].clone())
    }

    fn from_table(name: String, dim: usize, table: Vec<SparseVec>) -> Self {
        let commutative = (0..dim).all(|i| (i + 1..dim).all(|j| table[i * dim + j] == table[j * dim + i]));
        let mut a = Self { name, dim, table, unit: None, commutative };
        a.unit = a.find_unit();
        a
    }

    /// Solve `u·eⱼ = eⱼ = eⱼ·u` for all `j`.
    fn find_unit(&self) -> Option<VectorQ> {
        let n = self.dim;
        if n == 0 {
            return None;
        }
        let mut rows: Vec<SparseVec> = Vec::new();
        let mut rhs = Vec::new();
        for j in 0..n {
            for k in 0..n {
                let mut left = SparseVec::new();
                let mut right = SparseVec::new();
                for i in 0..n {
                    if let Some(x) = coeff(&self.table[i * n + j], k) {
                        left.push((i, x.clone()));
                    }
                    if let Some(x) = coeff(&self.table[j * n + i], k) {
                        right.push((i, x.clone()));
                    }
                }
                let target = if j == k { Rational::one() } else { Rational::zero() };
                rows.push(left);
                rhs.push(target.clone());
                rows.push(right);
                rhs.push(target);
            }
        }
        let m = MatrixQ::from_sparse_rows(n, rows).ok()?;
        m.solve(&rhs)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> Option<&VectorQ> {
        self.unit.as_ref()
    }

    pub fn require_unit(&self) -> Result<&VectorQ> {
        self.unit.as_ref().ok_or_else(|| AlbertError::InvalidInput(format!("algebra {} has no unit", self.name)))
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn basis(&self, i: usize) -> VectorQ {
        let mut v = zero_vector(self.dim);
        v[i] = Rational::one();
        v
    }

    pub fn zero(&self) -> VectorQ {
        zero_vector(self.dim)
    }

    /// `eᵢ·eⱼ` as a sparse vector.
    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim + j]
    }

    /// Dense constants `sc[i][j][k]`.
    pub fn sc(&self) -> Vec<Vec<VectorQ>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| to_dense(self.basis_product(i, j), self.dim)).collect())
            .collect()
    }

    pub fn check_elem(&self, x: &[Rational]) -> Result<()> {
        if x.len() != self.dim {
            return Err(AlbertError::Dimension(format!("element of length {} in {} (dim {})", x.len(), self.name, self.dim)));
        }
        Ok(())
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> VectorQ {
        debug_assert_eq!(x.len(), self.dim);
        debug_assert_eq!(y.len(), self.dim);
        let mut acc = zero_vector(self.dim);
        let ys: Vec<(usize, &Rational)> = y.iter().enumerate().filter(|(_, v)| !v.is_zero()).collect();
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for &(j, yj) in &ys {
                let t = &self.table[i * self.dim + j];
                if !t.is_empty() {
                    let s = xi * yj;
                    for (k, c) in t {
                        acc[*k] += &(&s * c);
                    }
                }
            }
        }
        acc
    }

    /// Floating product, for sampling at scale.
    pub fn mul_f64(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.dim];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| **v != 0.0) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| **v != 0.0) {
                for (k, c) in &self.table[i * self.dim + j] {
                    out[*k] += xi * yj * c.to_f64();
                }
            }
        }
        out
    }

    /// `x^k` with `x⁰ = 𝟙` and `x^k = x·x^{k−1}`.
    pub fn pow(&self, x: &[Rational], k: usize) -> Result<VectorQ> {
        let mut p = self.require_unit()?.clone();
        for _ in 0..k {
            p = self.mul(x, &p);
        }
        Ok(p)
    }

    /// Left multiplication operator `L_x`: column `j` holds `x·eⱼ`.
    pub fn left_mult(&self, x: &[Rational]) -> MatrixQ {
        let n = self.dim;
        let mut rows: Vec<SparseVec> = vec![Vec::new(); n];
        for j in 0..n {
            let mut col: SparseVec = Vec::new();
            for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                col = sparse_axpy(&col, xi, &self.table[i * n + j]);
            }
            for (k, v) in col {
                rows[k].push((j, v));
            }
        }
        MatrixQ::from_sparse_rows(n, rows).expect("consistent shape")
    }

    /// `L_{eᵢ}` for every basis element.
    pub fn basis_left_mults(&self) -> Vec<MatrixQ> {
        (0..self.dim).map(|i| self.left_mult(&self.basis(i))).collect()
    }

    /// Right multiplication operator `R_x`: column `j` holds `eⱼ·x`.
    pub fn right_mult(&self, x: &[Rational]) -> MatrixQ {
        let n = self.dim;
        let mut rows: Vec<SparseVec> = vec![Vec::new(); n];
        for j in 0..n {
            let mut col: SparseVec = Vec::new();
            for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                col = sparse_axpy(&col, xi, &self.table[j * n + i]);
            }
            for (k, v) in col {
                rows[k].push((j, v));
            }
        }
        MatrixQ::from_sparse_rows(n, rows).expect("consistent shape")
    }

    /// Restriction to a subspace closed under the product. The new basis is
    /// `basis` in the given order.
    pub fn subalgebra(&self, name: impl Into<String>, basis: Vec<VectorQ>) -> Result<Self> {
        let coord = Coordinatizer::new(basis.clone())?;
        let k = basis.len();
        let mut table = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                let p = self.mul(&basis[i], &basis[j]);
                let c = coord.coordinates(&p).ok_or_else(|| {
                    AlbertError::InvalidInput(format!("subspace not closed: product of basis vectors {i},{j} leaves it"))
                })?;
                table.push(to_sparse(&c));
            }
        }
        Ok(Self::from_table(name.into(), k, table))
    }

    /// Same vector space with the symmetrized product `½(xy + yx)`.
    pub fn jordanize(&self) -> Result<Self> {
        self.require_unit()?;
        let n = self.dim;
        let half = Rational::half();
        let table = (0..n * n)
            .map(|idx| {
                let (i, j) = (idx / n, idx % n);
                let s = sparse_axpy(&self.table[i * n + j], &Rational::one(), &self.table[j * n + i]);
                s.into_iter().map(|(k, v)| (k, &v * &half)).collect()
            })
            .collect();
        Ok(Self::from_table(format!("{}^Jord", self.name), n, table))
    }
}

fn coeff(v: &SparseVec, k: usize) -> Option<&Rational> {
    v.binary_search_by_key(&k, |(c, _)| *c).ok().map(|idx| &v[idx].1)
}

impl fmt::Debug for AlgebraSC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AlgebraSC")
            .field("name", &self.name)
            .field("dim", &self.dim)
            .field("commutative", &self.commutative)
            .field("unital", &self.unit.is_some())
            .finish()
    }
}

/// Serialized form: dense constants as exact strings.
#[derive(Serialize, Deserialize)]
struct AlgebraRepr {
    name: String,
    sc: Vec<Vec<VectorQ>>,
}

impl Serialize for AlgebraSC {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        AlgebraRepr { name: self.name.clone(), sc: self.sc() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgebraSC {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = AlgebraRepr::deserialize(d)?;
        AlgebraSC::from_sc(r.name, &r.sc).map_err(serde::de::Error::custom)
    }
}

/// Checks that `p` (columns = images of basis vectors of `a`) intertwines
/// the products of `a` and `b` on all basis pairs; returns the first failing
/// pair.
pub fn isomorphism_witness(a: &AlgebraSC, b: &AlgebraSC, p: &MatrixQ) -> Option<(usize, usize)> {
    if p.rows() != b.dim() || p.cols() != a.dim() {
        return Some((usize::MAX, usize::MAX));
    }
    let images: Vec<VectorQ> = (0..a.dim()).map(|i| p.column(i)).collect();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = p.mul_vec(&to_dense(a.basis_product(i, j), a.dim())).expect("shape");
            if lhs != b.mul(&images[i], &images[j]) {
                return Some((i, j));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn unit_is_found_for_diagonal_algebra() {
        // ℝ ⊕ ℝ with idempotent basis
        let a = AlgebraSC::from_basis_products("RxR", 2, |i, j| {
            let mut v = vec![q(0), q(0)];
            if i == j {
                v[i] = q(1);
            }
            v
        })
        .unwrap();
        assert_eq!(a.unit(), Some(&vec![q(1), q(1)]));
        assert!(a.is_commutative());
        assert_eq!(a.pow(&[q(2), q(3)], 0).unwrap(), vec![q(1), q(1)]);
        assert_eq!(a.pow(&[q(2), q(3)], 3).unwrap(), vec![q(8), q(27)]);
    }

    #[test]
    fn left_mult_matches_product() {
        let a = AlgebraSC::from_basis_products("RxR", 2, |i, j| if i == j { a_basis(i) } else { vec![q(0), q(0)] }).unwrap();
        let x = vec![q(2), q(-1)];
        let y = vec![q(5), q(7)];
        assert_eq!(a.left_mult(&x).mul_vec(&y).unwrap(), a.mul(&x, &y));
    }

    fn a_basis(i: usize) -> VectorQ {
        let mut v = vec![q(0), q(0)];
        v[i] = q(1);
        v
    }
}
