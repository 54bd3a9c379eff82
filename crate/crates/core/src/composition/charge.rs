//! Charge conjugation on `ℂ ⊕ ℂ³` and the automorphism test that picks the
//! sign convention.

use serde::{Deserialize, Serialize};

use super::octonion::Octonion;
use super::vector3::{conj3, neg3};

/// The two candidate conjugations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChargeVariant {
    /// Componentwise `(z, Z) ↦ (z̄, Z̄)`.
    Componentwise,
    /// `(z, Z) ↦ (z̄, −Z̄)`.
    SignFlipped,
}

impl ChargeVariant {
    pub const ALL: [ChargeVariant; 2] = [ChargeVariant::Componentwise, ChargeVariant::SignFlipped];

    pub fn name(self) -> &'static str {
        match self {
            ChargeVariant::Componentwise => "componentwise",
            ChargeVariant::SignFlipped => "sign-flipped",
        }
    }
}

pub fn charge_conj(variant: ChargeVariant, a: &Octonion) -> Octonion {
    match variant {
        ChargeVariant::Componentwise => Octonion::new(a.z.conj(), conj3(&a.v)),
        ChargeVariant::SignFlipped => Octonion::new(a.z.conj(), neg3(&conj3(&a.v))),
    }
}

/// Outcome of testing `𝒞(xy) = 𝒞(x)𝒞(y)` on all 64 basis pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomorphismRow {
    pub variant: ChargeVariant,
    pub passes: bool,
    /// Basis pairs `(i, j)` where the identity fails.
    pub failures: Vec<(usize, usize)>,
}

pub fn automorphism_table() -> Vec<AutomorphismRow> {
    ChargeVariant::ALL
        .iter()
        .map(|&variant| {
            let mut failures = Vec::new();
            for i in 0..8 {
                for j in 0..8 {
                    let (a, b) = (Octonion::basis(i), Octonion::basis(j));
                    let lhs = charge_conj(variant, &a.mul(&b));
                    let rhs = charge_conj(variant, &a).mul(&charge_conj(variant, &b));
                    if lhs != rhs {
                        failures.push((i, j));
                    }
                }
            }
            AutomorphismRow { variant, passes: failures.is_empty(), failures }
        })
        .collect()
}

/// The variant validated by [`automorphism_table`]; `None` if zero or both
/// variants pass.
pub fn canonical_variant() -> Option<ChargeVariant> {
    let passing: Vec<ChargeVariant> = automorphism_table().into_iter().filter(|r| r.passes).map(|r| r.variant).collect();
    (passing.len() == 1).then(|| passing[0])
}

/// Canonical charge conjugation (the variant that is an automorphism).
pub fn canonical_charge_conj(a: &Octonion) -> Octonion {
    charge_conj(ChargeVariant::SignFlipped, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::vector3::{cscale3, unit3};
    use crate::exact::GaussianRational;

    #[test]
    fn fixes_unit_and_is_involutive() {
        for v in ChargeVariant::ALL {
            assert_eq!(charge_conj(v, &Octonion::one()), Octonion::one());
            for k in 0..8 {
                let b = Octonion::basis(k);
                assert_eq!(charge_conj(v, &charge_conj(v, &b)), b);
            }
        }
    }

    #[test]
    fn componentwise_variant_on_imaginary_quark() {
        let x = Octonion::vector(cscale3(&GaussianRational::i(), &unit3(0)));
        let y = Octonion::vector(cscale3(&GaussianRational::from_ints(0, -1), &unit3(0)));
        assert_eq!(charge_conj(ChargeVariant::Componentwise, &x), y);
    }

    #[test]
    fn exactly_one_variant_is_an_automorphism() {
        let table = automorphism_table();
        assert_eq!(table.iter().filter(|r| r.passes).count(), 1);
        assert_eq!(canonical_variant(), Some(ChargeVariant::SignFlipped));
        let componentwise = table.iter().find(|r| r.variant == ChargeVariant::Componentwise).unwrap();
        // e1·e2 = i e3 is a failing pair for componentwise conjugation
        assert!(componentwise.failures.contains(&(2, 4)));
    }
}
