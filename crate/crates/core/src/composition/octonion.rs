use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::vector3::{add3, conj3, cscale3, inner, neg3, norm_sqr3, sub3, unit3, vartimes, zero3, C3};
use crate::exact::{GaussianRational, Rational};

/// An octonion `(z, Z) ∈ ℂ ⊕ ℂ³`.
///
/// Real coordinates are ordered `[Re z, Im z, Re Z¹, Im Z¹, Re Z², Im Z²,
/// Re Z³, Im Z³]`; index 0 is the unit and index 1 the imaginary unit `i` of
/// the lepton slot.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Octonion {
    pub z: GaussianRational,
    #[serde(rename = "Z")]
    pub v: C3,
}

impl Octonion {
    pub const DIM: usize = 8;

    pub fn new(z: GaussianRational, v: C3) -> Self {
        Self { z, v }
    }

    pub fn zero() -> Self {
        Self::new(GaussianRational::zero(), zero3())
    }

    /// The unit `𝟙 = (1, 0)`.
    pub fn one() -> Self {
        Self::new(GaussianRational::one(), zero3())
    }

    pub fn scalar(z: GaussianRational) -> Self {
        Self::new(z, zero3())
    }

    pub fn vector(v: C3) -> Self {
        Self::new(GaussianRational::zero(), v)
    }

    /// Real basis element number `k` (see the type docs for the ordering).
    pub fn basis(k: usize) -> Self {
        assert!(k < 8, "octonion basis index out of range");
        let unit = if k % 2 == 0 { GaussianRational::one() } else { GaussianRational::i() };
        if k < 2 {
            Self::scalar(unit)
        } else {
            Self::vector(cscale3(&unit, &unit3(k / 2 - 1)))
        }
    }

    pub fn to_coords(&self) -> Vec<Rational> {
        let mut out = vec![self.z.re.clone(), self.z.im.clone()];
        for c in &self.v {
            out.push(c.re.clone());
            out.push(c.im.clone());
        }
        out
    }

    pub fn from_coords(c: &[Rational]) -> Self {
        assert_eq!(c.len(), 8, "octonion needs 8 coordinates");
        let g = |k: usize| GaussianRational::new(c[k].clone(), c[k + 1].clone());
        Self::new(g(0), [g(2), g(4), g(6)])
    }

    /// `(z,Z)(z′,Z′) = (zz′ − ⟨Z,Z′⟩, z̄Z′ + z′Z + i Z⨯Z′)`
    pub fn mul(&self, other: &Self) -> Self {
        let z = &(&self.z * &other.z) - &inner(&self.v, &other.v);
        let cross = cscale3(&GaussianRational::i(), &vartimes(&self.v, &other.v));
        let v = add3(&add3(&cscale3(&self.z.conj(), &other.v), &cscale3(&other.z, &self.v)), &cross);
        Self::new(z, v)
    }

    /// `conj(z,Z) = (z̄, −Z)`
    pub fn conj(&self) -> Self {
        Self::new(self.z.conj(), neg3(&self.v))
    }

    /// `‖x‖² = |z|² + ‖Z‖²`
    pub fn norm_sqr(&self) -> Rational {
        &self.z.norm_sqr() + &norm_sqr3(&self.v)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(self.z.scale(r), cscale3(&GaussianRational::real(r.clone()), &self.v))
    }

    /// Componentwise complex conjugation `(z̄, Z̄)`.
    pub fn complex_conj(&self) -> Self {
        Self::new(self.z.conj(), conj3(&self.v))
    }

    pub fn is_zero(&self) -> bool {
        self.z.is_zero() && self.v.iter().all(GaussianRational::is_zero)
    }

    /// `x⁻¹ = x̄ / ‖x‖²`, `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm_sqr();
        (!n.is_zero()).then(|| self.conj().scale(&n.recip()))
    }

    pub fn associator(a: &Self, b: &Self, c: &Self) -> Self {
        &a.mul(b).mul(c) - &a.mul(&b.mul(c))
    }
}

impl<'a> Add<&'a Octonion> for &'a Octonion {
    type Output = Octonion;
    fn add(self, rhs: &Octonion) -> Octonion {
        Octonion::new(&self.z + &rhs.z, add3(&self.v, &rhs.v))
    }
}

impl<'a> Sub<&'a Octonion> for &'a Octonion {
    type Output = Octonion;
    fn sub(self, rhs: &Octonion) -> Octonion {
        Octonion::new(&self.z - &rhs.z, sub3(&self.v, &rhs.v))
    }
}

impl Neg for &Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion::new(-&self.z, neg3(&self.v))
    }
}

impl<'a> Mul<&'a Octonion> for &'a Octonion {
    type Output = Octonion;
    fn mul(self, rhs: &Octonion) -> Octonion {
        Octonion::mul(self, rhs)
    }
}

/// Structure constants of `𝕆` in the real basis: `table[i][j][k]` is the
/// `k`-th coordinate of `basis(i)·basis(j)`.
pub fn octonion_structure_constants() -> Vec<Vec<Vec<Rational>>> {
    (0..8)
        .map(|i| (0..8).map(|j| Octonion::basis(i).mul(&Octonion::basis(j)).to_coords()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_and_vector_products() {
        let x = Octonion::new(GaussianRational::from_ints(2, -1), [
            GaussianRational::from_ints(1, 3),
            GaussianRational::from_ints(0, -2),
            GaussianRational::from_ints(5, 1),
        ]);
        assert_eq!(Octonion::one().mul(&x), x);
        assert_eq!(x.mul(&Octonion::one()), x);
        let e1e2 = Octonion::vector(unit3(0)).mul(&Octonion::vector(unit3(1)));
        assert_eq!(e1e2, Octonion::vector(cscale3(&GaussianRational::i(), &unit3(2))));
        assert_eq!(x.conj().mul(&x), Octonion::one().scale(&x.norm_sqr()));
        assert_eq!(x.mul(&x.conj()), Octonion::one().scale(&x.norm_sqr()));
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(Octonion::one().conj(), Octonion::one());
        let v = Octonion::vector(unit3(1));
        assert_eq!(v.conj(), -&v);
    }

    #[test]
    fn basis_coordinates() {
        for k in 0..8 {
            let c = Octonion::basis(k).to_coords();
            assert_eq!(c.iter().filter(|x| !x.is_zero()).count(), 1);
            assert!(c[k].is_one());
            assert_eq!(Octonion::from_coords(&c), Octonion::basis(k));
        }
    }

    #[test]
    fn basis_products_are_signed_basis_elements() {
        for row in octonion_structure_constants() {
            for prod in row {
                let nz: Vec<&Rational> = prod.iter().filter(|x| !x.is_zero()).collect();
                assert_eq!(nz.len(), 1);
                assert!(nz[0].abs().is_one());
            }
        }
    }
}
