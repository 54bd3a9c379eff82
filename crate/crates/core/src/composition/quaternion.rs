use serde::{Deserialize, Serialize};

use crate::error::{AlbertError, Result};
use crate::exact::{GaussianRational, Rational};

/// A quaternion `q = z₁ + z₂ j` stored as the pair `(z₁, z₂) ∈ ℂ ⊕ ℂ`.
///
/// Real coordinates: `[Re z₁, Im z₁, Re z₂, Im z₂]`, i.e. the basis
/// `1, i, j, ij`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Quaternion {
    pub z1: GaussianRational,
    pub z2: GaussianRational,
}

impl Quaternion {
    pub const DIM: usize = 4;

    pub fn new(z1: GaussianRational, z2: GaussianRational) -> Self {
        Self { z1, z2 }
    }

    pub fn one() -> Self {
        Self::new(GaussianRational::one(), GaussianRational::zero())
    }

    pub fn j() -> Self {
        Self::new(GaussianRational::zero(), GaussianRational::one())
    }

    pub fn zero() -> Self {
        Self::new(GaussianRational::zero(), GaussianRational::zero())
    }

    pub fn basis(k: usize) -> Self {
        assert!(k < 4, "quaternion basis index out of range");
        let unit = if k % 2 == 0 { GaussianRational::one() } else { GaussianRational::i() };
        if k < 2 {
            Self::new(unit, GaussianRational::zero())
        } else {
            Self::new(GaussianRational::zero(), unit)
        }
    }

    pub fn to_coords(&self) -> Vec<Rational> {
        vec![self.z1.re.clone(), self.z1.im.clone(), self.z2.re.clone(), self.z2.im.clone()]
    }

    pub fn from_coords(c: &[Rational]) -> Self {
        assert_eq!(c.len(), 4, "quaternion needs 4 coordinates");
        Self::new(
            GaussianRational::new(c[0].clone(), c[1].clone()),
            GaussianRational::new(c[2].clone(), c[3].clone()),
        )
    }

    /// `(z₁ + z₂j)(w₁ + w₂j) = (z₁w₁ − z₂w̄₂) + (z₁w₂ + z₂w̄₁)j`, using
    /// `jw = w̄j` and `j² = −1`.
    pub fn mul(&self, other: &Self) -> Self {
        Self::new(
            &(&self.z1 * &other.z1) - &(&self.z2 * &other.z2.conj()),
            &(&self.z1 * &other.z2) + &(&self.z2 * &other.z1.conj()),
        )
    }

    pub fn conj(&self) -> Self {
        Self::new(self.z1.conj(), -&self.z2)
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.z1.norm_sqr() + &self.z2.norm_sqr()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.z1 + &other.z1, &self.z2 + &other.z2)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(&self.z1 - &other.z1, &self.z2 - &other.z2)
    }

    /// `z₁ + z₂j ↦ z₁ + e^{iθ}z₂j` for an exact unit `e^{iθ}`.
    pub fn u1_action(phase: &GaussianRational, q: &Self) -> Result<Self> {
        if !phase.norm_sqr().is_one() {
            return Err(AlbertError::InvalidInput(format!("phase {phase:?} is not a unit complex number")));
        }
        Ok(Self::new(q.z1.clone(), phase * &q.z2))
    }
}

/// Exact unit complex number from a rational point on the circle,
/// `((a²−b²) + 2ab·i)/(a²+b²)`.
pub fn circle_point(a: i64, b: i64) -> GaussianRational {
    let n = Rational::from_int(a * a + b * b);
    GaussianRational::new(Rational::from_int(a * a - b * b) / &n, Rational::from_int(2 * a * b) / &n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, c: i64, d: i64) -> Quaternion {
        Quaternion::new(GaussianRational::from_ints(a, b), GaussianRational::from_ints(c, d))
    }

    #[test]
    fn j_rules() {
        let z = GaussianRational::from_ints(3, -2);
        let jz = Quaternion::j().mul(&Quaternion::new(z.clone(), GaussianRational::zero()));
        assert_eq!(jz, Quaternion::new(GaussianRational::zero(), z.conj()));
        assert_eq!(Quaternion::j().mul(&Quaternion::j()), q(-1, 0, 0, 0));
    }

    #[test]
    fn associative_and_normed() {
        let (a, b, c) = (q(1, 2, -1, 3), q(0, -1, 2, 2), q(4, 1, 0, -3));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        assert_eq!(a.mul(&b).norm_sqr(), &a.norm_sqr() * &b.norm_sqr());
    }

    #[test]
    fn u1_is_automorphism_fixing_c() {
        let u = circle_point(2, 1);
        let (a, b) = (q(1, 2, -1, 3), q(0, -1, 2, 2));
        let lhs = Quaternion::u1_action(&u, &a.mul(&b)).unwrap();
        let rhs = Quaternion::u1_action(&u, &a).unwrap().mul(&Quaternion::u1_action(&u, &b).unwrap());
        assert_eq!(lhs, rhs);
        assert_eq!(Quaternion::u1_action(&GaussianRational::one(), &a).unwrap(), a);
        assert!(Quaternion::u1_action(&GaussianRational::from_ints(1, 1), &a).is_err());
    }
}
