//! Structures specific to the exceptional algebra `J⁸₃` and its companions.

pub mod action;
pub mod albert;
pub mod charge;
pub mod fermions;
pub mod j42;

pub use albert::{AlbertElem, PairHM, QuarkLayout};
pub use charge::charge_conj_albert;
pub use fermions::{fermion_assign, Family, FermionSlot, SlotKind};

use crate::error::Result;
use crate::jordan::{albert_algebra, direct_sum, make_hermitian, AlgebraSC};

/// `ℝ ⊕ J⁴₂ ⊕ J⁸₃`, of dimension `1 + 6 + 27 = 34` and capacity 6.
pub fn jtent_direct_sum() -> Result<AlgebraSC> {
    let r = make_hermitian(crate::composition::Field::Real, 1)?;
    let j42 = make_hermitian(crate::composition::Field::Quaternion, 2)?;
    Ok(direct_sum(&[r, j42, albert_algebra()])?.renamed("J_tent"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jordan::{capacity_estimate, euclidean_check};

    #[test]
    fn jtent_shape() {
        let j = jtent_direct_sum().unwrap();
        assert_eq!(j.dim(), 34);
        assert!(euclidean_check(&j).unwrap());
        assert_eq!(capacity_estimate(&j, 4, 7).unwrap(), 6);
        let unit = j.unit().unwrap();
        assert!(unit[..1].iter().all(|c| c.is_one()));
        assert!(unit[1..3].iter().all(|c| c.is_one()) && unit[3..7].iter().all(|c| c.is_zero()));
        assert!(unit[7..10].iter().all(|c| c.is_one()) && unit[10..].iter().all(|c| c.is_zero()));
    }
}
