//! SU(3) elements in exact (Gaussian-rational) and floating form, and their
//! action on the quark slot of `ℂ ⊕ ℂ³`.

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::octonion::Octonion;
use super::quaternion::circle_point;
use crate::error::{AlbertError, Result};
use crate::exact::GaussianRational;

/// Exact 3×3 complex matrix.
pub type CMat3 = [[GaussianRational; 3]; 3];

/// Floating 3×3 complex matrix.
pub type FMat3 = [[Complex64; 3]; 3];

pub const DEFAULT_SU3_TOLERANCE: f64 = 1e-12;

pub fn cmat_zero() -> CMat3 {
    std::array::from_fn(|_| std::array::from_fn(|_| GaussianRational::zero()))
}

pub fn cmat_identity() -> CMat3 {
    std::array::from_fn(|r| std::array::from_fn(|c| if r == c { GaussianRational::one() } else { GaussianRational::zero() }))
}

pub fn cmat_mul(a: &CMat3, b: &CMat3) -> CMat3 {
    std::array::from_fn(|r| {
        std::array::from_fn(|c| {
            let mut acc = GaussianRational::zero();
            for k in 0..3 {
                acc += &(&a[r][k] * &b[k][c]);
            }
            acc
        })
    })
}

/// Conjugate transpose.
pub fn cmat_adjoint(a: &CMat3) -> CMat3 {
    std::array::from_fn(|r| std::array::from_fn(|c| a[c][r].conj()))
}

pub fn cmat_add(a: &CMat3, b: &CMat3) -> CMat3 {
    std::array::from_fn(|r| std::array::from_fn(|c| &a[r][c] + &b[r][c]))
}

pub fn cmat_sub(a: &CMat3, b: &CMat3) -> CMat3 {
    std::array::from_fn(|r| std::array::from_fn(|c| &a[r][c] - &b[r][c]))
}

pub fn cmat_det(a: &CMat3) -> GaussianRational {
    let m = |r: usize, c: usize| &a[r][c];
    let t1 = m(0, 0) * &(&(m(1, 1) * m(2, 2)) - &(m(1, 2) * m(2, 1)));
    let t2 = m(0, 1) * &(&(m(1, 0) * m(2, 2)) - &(m(1, 2) * m(2, 0)));
    let t3 = m(0, 2) * &(&(m(1, 0) * m(2, 1)) - &(m(1, 1) * m(2, 0)));
    &(&t1 - &t2) + &t3
}

pub fn cmat_to_f64(a: &CMat3) -> FMat3 {
    std::array::from_fn(|r| {
        std::array::from_fn(|c| {
            let (re, im) = a[r][c].to_f64();
            Complex64::new(re, im)
        })
    })
}

pub fn fmat_mul(a: &FMat3, b: &FMat3) -> FMat3 {
    std::array::from_fn(|r| std::array::from_fn(|c| (0..3).map(|k| a[r][k] * b[k][c]).sum()))
}

pub fn fmat_adjoint(a: &FMat3) -> FMat3 {
    std::array::from_fn(|r| std::array::from_fn(|c| a[c][r].conj()))
}

pub fn fmat_det(a: &FMat3) -> Complex64 {
    a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
}

/// An SU(3) element, tagged exact or floating.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum SU3Matrix {
    Exact(CMat3),
    Float(#[serde(with = "fmat_serde")] FMat3),
}

mod fmat_serde {
    use super::FMat3;
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(m: &FMat3, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<Vec<[f64; 2]>> = m.iter().map(|r| r.iter().map(|c| [c.re, c.im]).collect()).collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<FMat3, D::Error> {
        let v = Vec::<Vec<[f64; 2]>>::deserialize(d)?;
        if v.len() != 3 || v.iter().any(|r| r.len() != 3) {
            return Err(serde::de::Error::custom("expected a 3x3 matrix"));
        }
        Ok(std::array::from_fn(|r| std::array::from_fn(|c| Complex64::new(v[r][c][0], v[r][c][1]))))
    }
}

impl SU3Matrix {
    pub fn identity() -> Self {
        SU3Matrix::Exact(cmat_identity())
    }

    /// Exact check for the exact tag, `tol` for the floating tag.
    pub fn validate(&self, tol: f64) -> Result<()> {
        match self {
            SU3Matrix::Exact(g) => {
                if cmat_mul(&cmat_adjoint(g), g) != cmat_identity() {
                    return Err(AlbertError::InvalidInput("matrix is not unitary".into()));
                }
                if cmat_det(g) != GaussianRational::one() {
                    return Err(AlbertError::InvalidInput("matrix does not have determinant 1".into()));
                }
                Ok(())
            }
            SU3Matrix::Float(g) => {
                let p = fmat_mul(&fmat_adjoint(g), g);
                let dev = (0..9)
                    .map(|k| {
                        let (r, c) = (k / 3, k % 3);
                        let id = if r == c { 1.0 } else { 0.0 };
                        (p[r][c] - Complex64::new(id, 0.0)).norm()
                    })
                    .fold(0.0, f64::max);
                if dev > tol {
                    return Err(AlbertError::InvalidInput(format!("matrix is not unitary (deviation {dev:e})")));
                }
                let dd = (fmat_det(g) - Complex64::new(1.0, 0.0)).norm();
                if dd > tol {
                    return Err(AlbertError::InvalidInput(format!("determinant deviates from 1 by {dd:e}")));
                }
                Ok(())
            }
        }
    }

    pub fn as_f64(&self) -> FMat3 {
        match self {
            SU3Matrix::Exact(g) => cmat_to_f64(g),
            SU3Matrix::Float(g) => *g,
        }
    }

    /// `ℂ`-linear matrix acting on the quark slot, fixing the lepton slot.
    pub fn apply(&self, a: &Octonion) -> Result<Octonion> {
        match self {
            SU3Matrix::Exact(g) => {
                self.validate(0.0)?;
                let v = std::array::from_fn(|r| {
                    let mut acc = GaussianRational::zero();
                    for k in 0..3 {
                        acc += &(&g[r][k] * &a.v[k]);
                    }
                    acc
                });
                Ok(Octonion::new(a.z.clone(), v))
            }
            SU3Matrix::Float(_) => Err(AlbertError::InvalidInput(
                "floating SU(3) elements act on floating coordinates, use apply_f64".into(),
            )),
        }
    }

    /// Action on real octonion coordinates.
    pub fn apply_f64(&self, x: &[f64; 8]) -> Result<[f64; 8]> {
        self.validate(DEFAULT_SU3_TOLERANCE)?;
        let g = self.as_f64();
        let v: [Complex64; 3] = std::array::from_fn(|k| Complex64::new(x[2 + 2 * k], x[3 + 2 * k]));
        let mut out = *x;
        for r in 0..3 {
            let w: Complex64 = (0..3).map(|k| g[r][k] * v[k]).sum();
            out[2 + 2 * r] = w.re;
            out[3 + 2 * r] = w.im;
        }
        Ok(out)
    }
}

/// The six signed permutation matrices in SU(3) for a permutation, with a
/// sign choice making the determinant 1 (even permutations keep all signs,
/// odd ones flip the first row).
pub fn signed_permutation(perm: [usize; 3], signs: [i64; 3]) -> Result<SU3Matrix> {
    let mut g = cmat_zero();
    for (col, row) in perm.iter().enumerate() {
        g[*row][col] = GaussianRational::from_ints(signs[col], 0);
    }
    let m = SU3Matrix::Exact(g);
    m.validate(0.0)?;
    Ok(m)
}

/// Every signed permutation matrix with determinant 1 (24 of them).
pub fn all_signed_permutations() -> Vec<SU3Matrix> {
    let perms = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [0, 2, 1], [2, 1, 0], [1, 0, 2]];
    let mut out = Vec::new();
    for p in perms {
        for s in 0..8 {
            let signs = [1 - 2 * (s & 1) as i64, 1 - 2 * ((s >> 1) & 1) as i64, 1 - 2 * ((s >> 2) & 1) as i64];
            if let Ok(m) = signed_permutation(p, signs) {
                out.push(m);
            }
        }
    }
    out
}

/// `diag(u, v, conj(uv))` with exact unit complex `u`, `v` given as rational
/// points on the circle.
pub fn diagonal_unitary(u: (i64, i64), v: (i64, i64)) -> SU3Matrix {
    let (u, v) = (circle_point(u.0, u.1), circle_point(v.0, v.1));
    let w = (&u * &v).conj();
    let mut g = cmat_zero();
    g[0][0] = u;
    g[1][1] = v;
    g[2][2] = w;
    SU3Matrix::Exact(g)
}

/// A random exact element: product of a signed permutation and a diagonal
/// unitary.
pub fn random_exact_su3<R: Rng>(rng: &mut R) -> SU3Matrix {
    let perms = all_signed_permutations();
    let p = &perms[rng.gen_range(0..perms.len())];
    let mut pick = || (rng.gen_range(1..6i64), rng.gen_range(-5..6i64));
    let d = diagonal_unitary(pick(), pick());
    match (p, d) {
        (SU3Matrix::Exact(a), SU3Matrix::Exact(b)) => SU3Matrix::Exact(cmat_mul(a, &b)),
        _ => unreachable!("both factors are exact"),
    }
}

/// A dense floating element: Gram-Schmidt on a random complex matrix, then
/// the determinant phase is divided out of the last column.
pub fn random_float_su3<R: Rng>(rng: &mut R) -> SU3Matrix {
    loop {
        let mut cols: Vec<[Complex64; 3]> = (0..3)
            .map(|_| std::array::from_fn(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))))
            .collect();
        let mut ok = true;
        for j in 0..3 {
            for k in 0..j {
                let proj: Complex64 = (0..3).map(|r| cols[k][r].conj() * cols[j][r]).sum();
                for r in 0..3 {
                    let t = cols[k][r];
                    cols[j][r] -= proj * t;
                }
            }
            let n = cols[j].iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
            if n < 1e-6 {
                ok = false;
                break;
            }
            for c in cols[j].iter_mut() {
                *c /= n;
            }
        }
        if !ok {
            continue;
        }
        let mut g: FMat3 = std::array::from_fn(|r| std::array::from_fn(|c| cols[c][r]));
        let det = fmat_det(&g);
        for row in g.iter_mut() {
            row[2] /= det;
        }
        return SU3Matrix::Float(g);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_acts_trivially() {
        let x = Octonion::basis(5);
        assert_eq!(SU3Matrix::identity().apply(&x).unwrap(), x);
    }

    #[test]
    fn cyclic_permutation_preserves_products() {
        // e1 -> e2, e2 -> e3, e3 -> e1
        let g = signed_permutation([1, 2, 0], [1, 1, 1]).unwrap();
        for i in 0..8 {
            for j in 0..8 {
                let (a, b) = (Octonion::basis(i), Octonion::basis(j));
                let lhs = g.apply(&a.mul(&b)).unwrap();
                let rhs = g.apply(&a).unwrap().mul(&g.apply(&b).unwrap());
                assert_eq!(lhs, rhs, "basis pair ({i},{j})");
            }
        }
    }

    #[test]
    fn rejects_non_unimodular() {
        let mut g = cmat_identity();
        g[0][0] = GaussianRational::from_ints(0, 1);
        assert!(SU3Matrix::Exact(g).validate(0.0).is_err());
        assert!(signed_permutation([1, 0, 2], [1, 1, 1]).is_err());
        assert_eq!(all_signed_permutations().len(), 24);
    }

    #[test]
    fn random_elements_validate() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            random_exact_su3(&mut rng).validate(0.0).unwrap();
            random_float_su3(&mut rng).validate(DEFAULT_SU3_TOLERANCE).unwrap();
        }
    }
}
