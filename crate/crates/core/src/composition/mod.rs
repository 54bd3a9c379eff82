//! The normed division algebras `ℝ`, `ℂ`, `ℍ = ℂ ⊕ ℂ` and `𝕆 = ℂ ⊕ ℂ³`.

pub mod charge;
pub mod octonion;
pub mod quaternion;
pub mod su3;
pub mod vector3;

pub use charge::{automorphism_table, canonical_charge_conj, canonical_variant, charge_conj, ChargeVariant};
pub use octonion::Octonion;
pub use quaternion::{circle_point, Quaternion};
pub use su3::SU3Matrix;

use serde::{Deserialize, Serialize};

use crate::exact::{GaussianRational, Rational};

/// One of the four division algebras, used as the entry type of hermitian
/// matrices. Elements are handled as real coordinate slices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    #[serde(alias = "R")]
    Real,
    #[serde(alias = "C")]
    Complex,
    #[serde(alias = "H")]
    Quaternion,
    #[serde(alias = "O")]
    Octonion,
}

impl Field {
    pub fn dim(self) -> usize {
        match self {
            Field::Real => 1,
            Field::Complex => 2,
            Field::Quaternion => 4,
            Field::Octonion => 8,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Field::Real => "R",
            Field::Complex => "C",
            Field::Quaternion => "H",
            Field::Octonion => "O",
        }
    }

    /// Product of two elements given by real coordinates.
    pub fn mul(self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        match self {
            Field::Real => vec![&a[0] * &b[0]],
            Field::Complex => {
                let p = &GaussianRational::new(a[0].clone(), a[1].clone())
                    * &GaussianRational::new(b[0].clone(), b[1].clone());
                vec![p.re, p.im]
            }
            Field::Quaternion => Quaternion::from_coords(a).mul(&Quaternion::from_coords(b)).to_coords(),
            Field::Octonion => Octonion::from_coords(a).mul(&Octonion::from_coords(b)).to_coords(),
        }
    }

    /// Conjugation: identity on the real unit, negation on the imaginary units.
    pub fn conj(self, a: &[Rational]) -> Vec<Rational> {
        a.iter().enumerate().map(|(k, x)| if k == 0 { x.clone() } else { -x }).collect()
    }

    /// Real coordinates of the `k`-th unit.
    pub fn unit(self, k: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[k] = Rational::one();
        v
    }
}

impl std::str::FromStr for Field {
    type Err = crate::AlbertError;
    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "R" | "r" | "real" => Ok(Field::Real),
            "C" | "c" | "complex" => Ok(Field::Complex),
            "H" | "h" | "quaternion" => Ok(Field::Quaternion),
            "O" | "o" | "octonion" => Ok(Field::Octonion),
            _ => Err(crate::AlbertError::Parse(format!("unknown division algebra {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conj_matches_typed_conjugation() {
        let x = Octonion::new(GaussianRational::from_ints(1, 2), [
            GaussianRational::from_ints(3, -1),
            GaussianRational::from_ints(0, 4),
            GaussianRational::from_ints(-2, 5),
        ]);
        assert_eq!(Field::Octonion.conj(&x.to_coords()), x.conj().to_coords());
        let q = Quaternion::new(GaussianRational::from_ints(1, 2), GaussianRational::from_ints(-3, 7));
        assert_eq!(Field::Quaternion.conj(&q.to_coords()), q.conj().to_coords());
    }
}
