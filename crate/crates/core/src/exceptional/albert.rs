//! Octonionic hermitian 3×3 matrices and their `ℂ`-representation.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::composition::su3::{cmat_zero, CMat3, FMat3};
use crate::composition::vector3::C3;
use crate::composition::Octonion;
use crate::exact::{GaussianRational, Rational, VectorQ};

/// `[[ζ₁, x₃, x̄₂], [x̄₃, ζ₂, x₁], [x₂, x̄₁, ζ₃]]`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlbertElem {
    pub zeta: [Rational; 3],
    pub x: [Octonion; 3],
}

/// Where the quark vectors `Z₁, Z₂, Z₃` sit inside `M ∈ M₃(ℂ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuarkLayout {
    /// `Zᵢ` is the `i`-th column of `M`.
    Columns,
    /// `Zᵢ` is the `i`-th row of `M`.
    Rows,
}

impl QuarkLayout {
    pub const ALL: [QuarkLayout; 2] = [QuarkLayout::Columns, QuarkLayout::Rows];
}

/// `(H, M) ∈ H₃(ℂ) ⊕ M₃(ℂ)`. The complex part `zᵢ` of `xᵢ` sits in `H`
/// at the transpose of its octonionic slot, so `H` is the conjugate of the
/// complex shadow of the octonionic matrix; with this choice `(VHV*, UMV*)`
/// acts by automorphisms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairHM {
    pub h: CMat3,
    pub m: CMat3,
}

/// Positions of `x₁, x₂, x₃` in the 27-coordinate basis of `H₃(𝕆)`: the
/// off-diagonal slot `(i, j)` and whether the slot holds `x` or `x̄`.
const SLOTS: [((usize, usize), bool); 3] = [((1, 2), false), ((0, 2), true), ((0, 1), false)];

/// Offset of the 8 coordinates of the `(i, j)` slot in the hermitian basis.
fn slot_offset(i: usize, j: usize) -> usize {
    match (i, j) {
        (0, 1) => 3,
        (0, 2) => 11,
        (1, 2) => 19,
        _ => unreachable!("upper off-diagonal slot"),
    }
}

impl AlbertElem {
    pub fn zero() -> Self {
        Self { zeta: [Rational::zero(), Rational::zero(), Rational::zero()], x: [Octonion::zero(), Octonion::zero(), Octonion::zero()] }
    }

    pub fn diagonal(zeta: [Rational; 3]) -> Self {
        Self { zeta, ..Self::zero() }
    }

    /// `E_ii`
    pub fn e(i: usize) -> Self {
        let mut a = Self::zero();
        a.zeta[i] = Rational::one();
        a
    }

    pub fn one() -> Self {
        Self::diagonal([Rational::one(), Rational::one(), Rational::one()])
    }

    /// Coordinates in the basis of `make_hermitian(𝕆, 3)`.
    pub fn to_coords(&self) -> VectorQ {
        let mut v = vec![Rational::zero(); 27];
        for i in 0..3 {
            v[i] = self.zeta[i].clone();
        }
        for (k, ((i, j), conj)) in SLOTS.iter().enumerate() {
            let entry = if *conj { self.x[k].conj() } else { self.x[k].clone() };
            for (u, c) in entry.to_coords().into_iter().enumerate() {
                v[slot_offset(*i, *j) + u] = c;
            }
        }
        v
    }

    pub fn from_coords(v: &[Rational]) -> Self {
        assert_eq!(v.len(), 27, "H3(O) has 27 coordinates");
        let zeta = [v[0].clone(), v[1].clone(), v[2].clone()];
        let x = std::array::from_fn(|k| {
            let ((i, j), conj) = SLOTS[k];
            let o = slot_offset(i, j);
            let entry = Octonion::from_coords(&v[o..o + 8]);
            if conj {
                entry.conj()
            } else {
                entry
            }
        });
        Self { zeta, x }
    }

    /// The full octonionic matrix.
    pub fn matrix(&self) -> [[Octonion; 3]; 3] {
        let [x1, x2, x3] = &self.x;
        let d = |i: usize| Octonion::scalar(GaussianRational::real(self.zeta[i].clone()));
        [[d(0), x3.clone(), x2.conj()], [x3.conj(), d(1), x1.clone()], [x2.clone(), x1.conj(), d(2)]]
    }

    fn from_matrix(m: &[[Octonion; 3]; 3]) -> Self {
        Self {
            zeta: std::array::from_fn(|i| m[i][i].z.re.clone()),
            x: [m[1][2].clone(), m[2][0].clone(), m[0][1].clone()],
        }
    }

    /// `A∘B = ½(AB + BA)` with octonionic entries.
    pub fn product(&self, other: &Self) -> Self {
        let (a, b) = (self.matrix(), other.matrix());
        let mut s: [[Octonion; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| Octonion::zero()));
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = Octonion::zero();
                for k in 0..3 {
                    acc = &acc + &a[i][k].mul(&b[k][j]);
                    acc = &acc + &b[i][k].mul(&a[k][j]);
                }
                s[i][j] = acc.scale(&Rational::half());
            }
        }
        Self::from_matrix(&s)
    }

    pub fn to_pair(&self, layout: QuarkLayout) -> PairHM {
        let mut h = cmat_zero();
        for i in 0..3 {
            h[i][i] = GaussianRational::real(self.zeta[i].clone());
        }
        let z: Vec<&GaussianRational> = self.x.iter().map(|o| &o.z).collect();
        h[2][1] = z[0].clone();
        h[1][2] = z[0].conj();
        h[0][2] = z[1].clone();
        h[2][0] = z[1].conj();
        h[1][0] = z[2].clone();
        h[0][1] = z[2].conj();
        let mut m = cmat_zero();
        for (i, o) in self.x.iter().enumerate() {
            for r in 0..3 {
                match layout {
                    QuarkLayout::Columns => m[r][i] = o.v[r].clone(),
                    QuarkLayout::Rows => m[i][r] = o.v[r].clone(),
                }
            }
        }
        PairHM { h, m }
    }

    /// Inverse of [`AlbertElem::to_pair`]; the hermitian part is read from
    /// its lower-left entries and real diagonal.
    pub fn from_pair(p: &PairHM, layout: QuarkLayout) -> Self {
        let z = [p.h[2][1].clone(), p.h[0][2].clone(), p.h[1][0].clone()];
        let x = std::array::from_fn(|i| {
            let v: C3 = std::array::from_fn(|r| match layout {
                QuarkLayout::Columns => p.m[r][i].clone(),
                QuarkLayout::Rows => p.m[i][r].clone(),
            });
            Octonion::new(z[i].clone(), v)
        });
        Self { zeta: std::array::from_fn(|i| p.h[i][i].re.clone()), x }
    }
}

/// Coordinate unit vectors spanning the `H₃(ℂ)` part and the `M₃(ℂ)` part
/// of `H₃(𝕆)`.
pub fn hm_split() -> (Vec<VectorQ>, Vec<VectorQ>) {
    let unit = |i: usize| {
        let mut e = vec![Rational::zero(); 27];
        e[i] = Rational::one();
        e
    };
    let complex: Vec<usize> = [3, 11, 19].iter().flat_map(|&o| [o, o + 1]).collect();
    (0..27).map(unit).partition(|e| {
        let i = e.iter().position(Rational::is_one).unwrap();
        i < 3 || complex.contains(&i)
    })
}

/// Floating counterpart of [`AlbertElem::to_pair`] on 27 coordinates.
pub fn coords_to_pair_f64(v: &[f64], layout: QuarkLayout) -> (FMat3, FMat3) {
    let zero = Complex64::new(0.0, 0.0);
    let mut h = [[zero; 3]; 3];
    let mut m = [[zero; 3]; 3];
    for i in 0..3 {
        h[i][i] = Complex64::new(v[i], 0.0);
    }
    for (k, ((i, j), conj)) in SLOTS.iter().enumerate() {
        let o = slot_offset(*i, *j);
        // conjugation negates every imaginary coordinate
        let s = if *conj { -1.0 } else { 1.0 };
        let z = Complex64::new(v[o], s * v[o + 1]);
        let quark: [Complex64; 3] = std::array::from_fn(|r| Complex64::new(s * v[o + 2 + 2 * r], s * v[o + 3 + 2 * r]));
        match k {
            0 => {
                h[2][1] = z;
                h[1][2] = z.conj();
            }
            1 => {
                h[0][2] = z;
                h[2][0] = z.conj();
            }
            _ => {
                h[1][0] = z;
                h[0][1] = z.conj();
            }
        }
        for r in 0..3 {
            match layout {
                QuarkLayout::Columns => m[r][k] = quark[r],
                QuarkLayout::Rows => m[k][r] = quark[r],
            }
        }
    }
    (h, m)
}

pub fn pair_to_coords_f64(h: &FMat3, m: &FMat3, layout: QuarkLayout) -> Vec<f64> {
    let mut v = vec![0.0; 27];
    for i in 0..3 {
        v[i] = h[i][i].re;
    }
    let zs = [h[2][1], h[0][2], h[1][0]];
    for (k, ((i, j), conj)) in SLOTS.iter().enumerate() {
        let o = slot_offset(*i, *j);
        let s = if *conj { -1.0 } else { 1.0 };
        v[o] = zs[k].re;
        v[o + 1] = s * zs[k].im;
        for r in 0..3 {
            let q = match layout {
                QuarkLayout::Columns => m[r][k],
                QuarkLayout::Rows => m[k][r],
            };
            v[o + 2 + 2 * r] = s * q.re;
            v[o + 3 + 2 * r] = s * q.im;
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::vector3::unit3;

    #[test]
    fn coords_round_trip() {
        let mut rng = crate::random::seeded(4);
        for _ in 0..10 {
            let v = crate::random::rational_vector(&mut rng, 27);
            let a = AlbertElem::from_coords(&v);
            assert_eq!(a.to_coords(), v);
            for layout in QuarkLayout::ALL {
                assert_eq!(AlbertElem::from_pair(&a.to_pair(layout), layout), a);
                let f: Vec<f64> = v.iter().map(Rational::to_f64).collect();
                let (h, m) = coords_to_pair_f64(&f, layout);
                let back = pair_to_coords_f64(&h, &m, layout);
                assert!(back.iter().zip(&f).all(|(p, q)| (p - q).abs() < 1e-12));
                let exact = a.to_pair(layout);
                assert!((h[0][2].im - exact.h[0][2].im.to_f64()).abs() < 1e-12);
                assert!((h[1][0].im - exact.h[1][0].im.to_f64()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn quark_in_first_slot() {
        let mut a = AlbertElem::zero();
        a.x[0] = Octonion::vector(unit3(0));
        let p = a.to_pair(QuarkLayout::Columns);
        assert!(p.h.iter().flatten().all(GaussianRational::is_zero));
        assert_eq!(p.m[0][0], GaussianRational::one());
    }
}
