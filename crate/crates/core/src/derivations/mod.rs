//! Derivation algebras as exact nullspaces, their brackets, inner
//! derivations, stabilizers and Killing-form diagnostics.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{AlbertError, Result};
use crate::exact::matrix::{sparse_rref, to_dense, to_sparse, vec_axpy, zero_vector};
use crate::exact::{Coordinatizer, MatrixQ, Rational, SparseVec, VectorQ};
use crate::jordan::AlgebraSC;
use crate::random::{rational_vector, seeded};
use crate::report::Check;

/// A Lie algebra of derivations: a basis of `n × n` matrices and its
/// structure constants `[D_a, D_b] = Σ_c bracket[a][b][c] D_c`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DerBasis {
    pub algebra: String,
    pub n: usize,
    pub basis: Vec<MatrixQ>,
    pub bracket: Vec<Vec<VectorQ>>,
}

fn flatten(m: &MatrixQ) -> VectorQ {
    m.to_rows().into_iter().flatten().collect()
}

fn unflatten(n: usize, v: &[Rational]) -> MatrixQ {
    MatrixQ::from_fn(n, n, |r, c| v[r * n + c].clone()).with_auto_storage()
}

impl DerBasis {
    /// Computes the bracket constants; fails when the span is not closed.
    pub fn from_matrices(algebra: impl Into<String>, n: usize, basis: Vec<MatrixQ>) -> Result<Self> {
        let p = basis.len();
        let flat: Vec<VectorQ> = basis.iter().map(flatten).collect();
        let coord = if p == 0 { None } else { Some(Coordinatizer::new(flat)?) };
        let pairs: Vec<(usize, usize)> = (0..p).flat_map(|a| (a + 1..p).map(move |b| (a, b))).collect();
        let brackets: Vec<Result<VectorQ>> = pairs
            .par_iter()
            .map(|&(a, b)| {
                let c = basis[a].commutator(&basis[b])?;
                coord
                    .as_ref()
                    .expect("p > 0")
                    .coordinates(&flatten(&c))
                    .ok_or_else(|| AlbertError::InvalidInput(format!("bracket of basis elements {a},{b} leaves the span")))
            })
            .collect();
        let mut bracket = vec![vec![zero_vector(p); p]; p];
        for (&(a, b), r) in pairs.iter().zip(brackets) {
            let v = r?;
            bracket[b][a] = v.iter().map(|x| -x).collect();
            bracket[a][b] = v;
        }
        Ok(Self { algebra: algebra.into(), n, basis, bracket })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `Σ c_k D_k`
    pub fn combine(&self, coeffs: &[Rational]) -> MatrixQ {
        let mut flat = zero_vector(self.n * self.n);
        for (c, d) in coeffs.iter().zip(&self.basis) {
            vec_axpy(&mut flat, c, &flatten(d));
        }
        unflatten(self.n, &flat)
    }

    /// Coordinates of a matrix in this basis, if it lies in the span.
    pub fn coordinates(&self, m: &MatrixQ) -> Option<VectorQ> {
        if self.basis.is_empty() {
            return m.is_zero().then(Vec::new);
        }
        let coord = Coordinatizer::new(self.basis.iter().map(flatten).collect()).ok()?;
        coord.coordinates(&flatten(m))
    }

    /// Exact closure check: `[D_a, D_b]` equals the combination given by the
    /// structure constants.
    pub fn verify_closure(&self) -> Check {
        let p = self.dim();
        let witness = (0..p)
            .flat_map(|a| (a + 1..p).map(move |b| (a, b)))
            .collect::<Vec<_>>()
            .par_iter()
            .find_first(|&&(a, b)| self.basis[a].commutator(&self.basis[b]).expect("square") != self.combine(&self.bracket[a][b]))
            .map(|(a, b)| format!("[D{a}, D{b}] not reproduced by the structure constants"));
        Check::from_witness("bracket-closure", p * p.saturating_sub(1) / 2, witness)
    }

    /// `ad(D_a)` in this basis: column `b` holds the coordinates of `[D_a, D_b]`.
    pub fn ad(&self, a: usize) -> MatrixQ {
        let p = self.dim();
        MatrixQ::from_fn(p, p, |c, b| self.bracket[a][b][c].clone())
    }
}

/// `D(eᵢeⱼ) − D(eᵢ)eⱼ − eᵢD(eⱼ) = 0` over basis pairs as sparse rows in the
/// `n²` entries of `D` (row-major).
pub fn leibniz_system(a: &AlgebraSC) -> Vec<SparseVec> {
    let n = a.dim();
    let pairs: Vec<(usize, usize)> = if a.is_commutative() {
        (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
    } else {
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
    };
    pairs
        .par_iter()
        .flat_map_iter(|&(i, j)| {
            let mut rows: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); n];
            let mut add = |m: usize, u: usize, c: Rational| {
                let e = rows[m].entry(u).or_insert_with(Rational::zero);
                *e += &c;
            };
            for (l, c) in a.basis_product(i, j) {
                for m in 0..n {
                    add(m, m * n + l, c.clone());
                }
            }
            for k in 0..n {
                for (m, c) in a.basis_product(k, j) {
                    add(*m, k * n + i, -c);
                }
                for (m, c) in a.basis_product(i, k) {
                    add(*m, k * n + j, -c);
                }
            }
            rows.into_iter()
                .map(|r| r.into_iter().filter(|(_, c)| !c.is_zero()).collect::<SparseVec>())
                .filter(|r| !r.is_empty())
                .collect::<Vec<_>>()
        })
        .collect()
}

/// `Der(A)` as the exact nullspace of the Leibniz system.
pub fn derivation_algebra(a: &AlgebraSC) -> Result<DerBasis> {
    let n = a.dim();
    let rref = sparse_rref(n * n, leibniz_system(a));
    let null = rref.nullspace_basis();
    let basis: Vec<MatrixQ> = null.iter().map(|v| unflatten(n, v)).collect();
    DerBasis::from_matrices(a.name(), n, basis)
}

/// First basis pair on which `d` violates the Leibniz rule.
pub fn derivation_witness(a: &AlgebraSC, d: &MatrixQ) -> Option<(usize, usize)> {
    let n = a.dim();
    let images: Vec<VectorQ> = (0..n).map(|i| d.column(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = d.mul_vec(&to_dense(a.basis_product(i, j), n)).expect("square");
            let mut rhs = a.mul(&images[i], &a.basis(j));
            vec_axpy(&mut rhs, &Rational::one(), &a.mul(&a.basis(i), &images[j]));
            if lhs != rhs {
                return Some((i, j));
            }
        }
    }
    None
}

pub fn verify_derivations(a: &AlgebraSC, d: &DerBasis) -> Check {
    let witness = d
        .basis
        .par_iter()
        .enumerate()
        .find_first(|(_, m)| derivation_witness(a, m).is_some())
        .map(|(k, m)| {
            let (i, j) = derivation_witness(a, m).expect("found");
            format!("basis derivation {k} fails Leibniz on (e{i}, e{j})")
        });
    Check::from_witness("leibniz", d.dim(), witness)
}

/// Row space of a list of vectors as RREF rows (a canonical basis).
fn span_basis(n: usize, vectors: Vec<VectorQ>) -> Vec<VectorQ> {
    let rows: Vec<SparseVec> = vectors.iter().map(|v| to_sparse(v)).collect();
    sparse_rref(n, rows).rows.iter().map(|r| to_dense(r, n)).collect()
}

/// Span of `[L_x, L_y]` over basis pairs.
pub fn inner_derivations(a: &AlgebraSC) -> Result<DerBasis> {
    let n = a.dim();
    let ls = a.basis_left_mults();
    let comms: Vec<VectorQ> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&(i, j)| flatten(&ls[i].commutator(&ls[j]).expect("square")))
        .collect();
    let basis = span_basis(n * n, comms).iter().map(|v| unflatten(n, v)).collect();
    DerBasis::from_matrices(format!("Inn({})", a.name()), n, basis)
}

/// Rows spanning the annihilator of the subspace spanned by `w`.
fn annihilator(n: usize, w: &[VectorQ]) -> Result<Vec<VectorQ>> {
    if w.is_empty() {
        return Ok((0..n).map(|i| {
            let mut v = zero_vector(n);
            v[i] = Rational::one();
            v
        }).collect());
    }
    Ok(MatrixQ::from_rows_with_cols(w.to_vec(), n)?.nullspace())
}

/// Sub-basis of derivations killing every `fixed` element and mapping each
/// listed subspace into itself.
pub fn stabilizer(d: &DerBasis, fixed: &[VectorQ], preserved: &[Vec<VectorQ>]) -> Result<DerBasis> {
    let n = d.n;
    let p = d.dim();
    let mut rows: Vec<VectorQ> = Vec::new();
    for f in fixed {
        let images: Vec<VectorQ> = d.basis.iter().map(|m| m.mul_vec(f)).collect::<Result<_>>()?;
        for r in 0..n {
            rows.push((0..p).map(|k| images[k][r].clone()).collect());
        }
    }
    for w in preserved {
        let q = annihilator(n, w)?;
        for ws in w {
            let images: Vec<VectorQ> = d.basis.iter().map(|m| m.mul_vec(ws)).collect::<Result<_>>()?;
            for phi in &q {
                rows.push(images.iter().map(|img| crate::exact::matrix::dot(phi, img)).collect());
            }
        }
    }
    let coeffs = if rows.is_empty() {
        (0..p).map(|k| {
            let mut v = zero_vector(p);
            v[k] = Rational::one();
            v
        }).collect()
    } else {
        MatrixQ::from_rows_with_cols(rows, p)?.nullspace()
    };
    let basis = coeffs.iter().map(|c| d.combine(c)).collect();
    DerBasis::from_matrices(format!("Stab({})", d.algebra), n, basis)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LieDiagnostics {
    pub dim: usize,
    pub killing: MatrixQ,
    pub semisimple: bool,
    pub compact: bool,
    pub center_dim: usize,
    pub derived_dim: usize,
}

pub fn lie_diagnostics(d: &DerBasis) -> Result<LieDiagnostics> {
    let p = d.dim();
    let ads: Vec<MatrixQ> = (0..p).map(|a| d.ad(a)).collect();
    let killing = MatrixQ::from_fn(p, p, |a, b| ads[a].mul(&ads[b]).expect("square").trace());
    let semisimple = p > 0 && !killing.determinant()?.is_zero();
    let compact = p > 0 && semisimple && killing.is_negative_definite()?;
    Ok(LieDiagnostics {
        dim: p,
        semisimple,
        compact,
        center_dim: center_dim(d),
        derived_dim: derived_dim(d),
        killing,
    })
}

/// `dim {c : [c, D_b] = 0 ∀b}`
pub fn center_dim(d: &DerBasis) -> usize {
    let p = d.dim();
    if p == 0 {
        return 0;
    }
    // rows indexed by (b, output coordinate), columns by c
    let rows: Vec<VectorQ> = (0..p)
        .flat_map(|b| (0..p).map(move |k| (b, k)))
        .map(|(b, k)| (0..p).map(|a| d.bracket[a][b][k].clone()).collect())
        .collect();
    MatrixQ::from_rows_with_cols(rows, p).expect("shape").nullspace().len()
}

/// `dim [g, g]`
pub fn derived_dim(d: &DerBasis) -> usize {
    let p = d.dim();
    let vecs: Vec<VectorQ> = (0..p).flat_map(|a| (a + 1..p).map(move |b| (a, b))).map(|(a, b)| d.bracket[a][b].clone()).collect();
    if vecs.is_empty() {
        return 0;
    }
    MatrixQ::from_rows_with_cols(vecs, p).expect("shape").rank()
}

/// `exp(M)` in floating point by scaling and squaring.
pub fn expm_f64(m: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = m.len();
    let norm = m.iter().map(|r| r.iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max);
    let s = if norm > 0.5 { (norm / 0.5).log2().ceil() as i32 } else { 0 };
    let scale = 2f64.powi(-s);
    let a: Vec<Vec<f64>> = m.iter().map(|r| r.iter().map(|x| x * scale).collect()).collect();
    let mut result = identity_f64(n);
    let mut term = identity_f64(n);
    for k in 1..=20 {
        term = matmul_f64(&term, &a).into_iter().map(|r| r.into_iter().map(|x| x / k as f64).collect()).collect();
        for i in 0..n {
            for j in 0..n {
                result[i][j] += term[i][j];
            }
        }
    }
    for _ in 0..s {
        result = matmul_f64(&result, &result);
    }
    result
}

fn identity_f64(n: usize) -> Vec<Vec<f64>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect()).collect()
}

pub fn matmul_f64(a: &[Vec<f64>], b: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let (n, m, k) = (a.len(), b[0].len(), b.len());
    (0..n).map(|i| (0..m).map(|j| (0..k).map(|l| a[i][l] * b[l][j]).sum()).collect()).collect()
}

pub fn matvec_f64(a: &[Vec<f64>], x: &[f64]) -> Vec<f64> {
    a.iter().map(|r| r.iter().zip(x).map(|(p, q)| p * q).sum()).collect()
}

/// Group-level spot check: `g = exp(Σ tₖ Dₖ)` with random small `tₖ` should
/// satisfy `g(xy) = g(x)g(y)`; returns the largest deviation.
pub fn exp_automorphism_residual(a: &AlgebraSC, d: &DerBasis, samples: usize, seed: u64) -> f64 {
    use rand::Rng;
    let mut rng = seeded(seed);
    let mut worst: f64 = 0.0;
    let mats: Vec<Vec<Vec<f64>>> = d.basis.iter().map(MatrixQ::to_f64_rows).collect();
    for _ in 0..samples {
        let n = a.dim();
        let mut gen = vec![vec![0.0; n]; n];
        for m in &mats {
            let t: f64 = rng.gen_range(-1.0..1.0);
            for i in 0..n {
                for j in 0..n {
                    gen[i][j] += t * m[i][j];
                }
            }
        }
        let g = expm_f64(&gen);
        let x: Vec<f64> = rational_vector(&mut rng, n).iter().map(Rational::to_f64).collect();
        let y: Vec<f64> = rational_vector(&mut rng, n).iter().map(Rational::to_f64).collect();
        let lhs = matvec_f64(&g, &a.mul_f64(&x, &y));
        let rhs = a.mul_f64(&matvec_f64(&g, &x), &matvec_f64(&g, &y));
        worst = worst.max(lhs.iter().zip(&rhs).map(|(p, q)| (p - q).abs()).fold(0.0, f64::max));
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::Field;
    use crate::jordan::{division_algebra, make_hermitian, make_jspin};

    #[test]
    fn small_dimensions() {
        assert_eq!(derivation_algebra(&make_hermitian(Field::Real, 1).unwrap()).unwrap().dim(), 0);
        assert_eq!(derivation_algebra(&make_hermitian(Field::Real, 2).unwrap()).unwrap().dim(), 1);
        assert_eq!(derivation_algebra(&make_jspin(3).unwrap()).unwrap().dim(), 3);
        assert_eq!(inner_derivations(&make_jspin(3).unwrap()).unwrap().dim(), 3);
        assert_eq!(derivation_algebra(&make_hermitian(Field::Real, 3).unwrap()).unwrap().dim(), 3);
    }

    #[test]
    fn g2_and_su3() {
        let o = division_algebra(Field::Octonion);
        let g2 = derivation_algebra(&o).unwrap();
        assert_eq!(g2.dim(), 14);
        assert!(verify_derivations(&o, &g2).passed);
        assert!(g2.verify_closure().passed);
        let diag = lie_diagnostics(&g2).unwrap();
        assert!(diag.semisimple && diag.compact);
        let su3 = stabilizer(&g2, &[o.basis(1)], &[]).unwrap();
        assert_eq!(su3.dim(), 8);
        let d = lie_diagnostics(&su3).unwrap();
        assert!(d.semisimple && d.compact);
        assert!(exp_automorphism_residual(&o, &g2, 5, 3) < 1e-8);
    }

    #[test]
    fn abelian_so2_is_not_semisimple() {
        let d = derivation_algebra(&make_hermitian(Field::Real, 2).unwrap()).unwrap();
        let diag = lie_diagnostics(&d).unwrap();
        assert!(diag.killing.is_zero());
        assert!(!diag.semisimple);
    }
}
