//! Internal spaces of the fundamental fermions inside two copies of `J⁸₃`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::AlbertError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `J^u`: up-type quarks, neutrinos and `α₁..₃`.
    Up,
    /// `J^d`: down-type quarks, charged leptons and `β₁..₃`.
    Down,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::Up, Family::Down];

    /// Offset of this copy inside the rank-2 free module `J⁸₃ ⊕ J⁸₃`.
    pub fn offset(self) -> usize {
        match self {
            Family::Up => 0,
            Family::Down => 27,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Up => "up",
            Family::Down => "down",
        })
    }
}

impl FromStr for Family {
    type Err = AlbertError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "up" | "u" => Ok(Family::Up),
            "down" | "d" => Ok(Family::Down),
            _ => Err(AlbertError::Parse(format!("unknown family {s:?}; expected up or down"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SlotKind {
    /// A `ℂ³` block of `M`.
    Quark,
    /// A `ℂ` entry of `H`.
    Lepton,
    /// A real diagonal entry.
    Diagonal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FermionSlot {
    pub label: String,
    pub family: Family,
    pub kind: SlotKind,
    /// Generation index `0..3`.
    pub generation: usize,
    /// Where the slot lives in `(H, M)`.
    pub location: String,
    /// Real coordinates in the 54-dimensional module `J⁸₃ ⊕ J⁸₃`.
    pub coordinates: Vec<usize>,
}

const UP_QUARKS: [&str; 3] = ["u", "c", "t"];
const DOWN_QUARKS: [&str; 3] = ["d", "s", "b"];
const NEUTRINOS: [&str; 3] = ["νe", "νμ", "ντ"];
const CHARGED: [&str; 3] = ["e", "μ", "τ"];

/// `xᵢ` lives in slot `(1,2)`, `(0,2)`, `(0,1)` for `i = 1, 2, 3`; offsets of
/// those 8-blocks in the 27 coordinates.
const X_OFFSETS: [usize; 3] = [19, 11, 3];
const H_LOCATIONS: [&str; 3] = ["H[2][1]", "H[0][2]", "H[1][0]"];

/// The 15 slots of one family: three quark blocks, three lepton entries and
/// three diagonal reals, covering all 27 coordinates.
pub fn fermion_assign(family: Family) -> Vec<FermionSlot> {
    let (quarks, leptons, diag) = match family {
        Family::Up => (UP_QUARKS, NEUTRINOS, "α"),
        Family::Down => (DOWN_QUARKS, CHARGED, "β"),
    };
    let base = family.offset();
    let mut out = Vec::with_capacity(9);
    for g in 0..3 {
        let o = base + X_OFFSETS[g];
        out.push(FermionSlot {
            label: leptons[g].to_string(),
            family,
            kind: SlotKind::Lepton,
            generation: g,
            location: H_LOCATIONS[g].to_string(),
            coordinates: vec![o, o + 1],
        });
        out.push(FermionSlot {
            label: quarks[g].to_string(),
            family,
            kind: SlotKind::Quark,
            generation: g,
            location: format!("M[:][{g}]"),
            coordinates: (o + 2..o + 8).collect(),
        });
    }
    for k in 0..3 {
        out.push(FermionSlot {
            label: format!("{diag}{}", k + 1),
            family,
            kind: SlotKind::Diagonal,
            generation: k,
            location: format!("H[{k}][{k}]"),
            coordinates: vec![base + k],
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exceptional::{AlbertElem, QuarkLayout};
    use crate::exact::Rational;

    #[test]
    fn families_tile_the_free_module() {
        let mut seen = vec![false; 54];
        for f in Family::ALL {
            let slots = fermion_assign(f);
            assert_eq!(slots.iter().map(|s| s.coordinates.len()).sum::<usize>(), 27);
            for s in &slots {
                let want = match s.kind {
                    SlotKind::Quark => 6,
                    SlotKind::Lepton => 2,
                    SlotKind::Diagonal => 1,
                };
                assert_eq!(s.coordinates.len(), want, "{}", s.label);
                for &c in &s.coordinates {
                    assert!(!seen[c]);
                    seen[c] = true;
                }
            }
        }
        assert!(seen.iter().all(|&b| b));
    }

    #[test]
    fn quark_blocks_are_columns_of_m() {
        for s in fermion_assign(Family::Up).iter().filter(|s| s.kind == SlotKind::Quark) {
            let mut v = vec![Rational::zero(); 27];
            for &c in &s.coordinates {
                v[c] = Rational::one();
            }
            let p = AlbertElem::from_coords(&v).to_pair(QuarkLayout::Columns);
            assert!(p.h.iter().flatten().all(|z| z.is_zero()), "{} touches H", s.label);
            for r in 0..3 {
                for c in 0..3 {
                    assert_eq!(p.m[r][c].is_zero(), c != s.generation, "{} at M[{r}][{c}]", s.label);
                }
            }
        }
    }

    #[test]
    fn leptons_are_off_diagonal_entries_of_h() {
        let slots = fermion_assign(Family::Down);
        let tau = slots.iter().find(|s| s.label == "τ").unwrap();
        let mut v = vec![Rational::zero(); 27];
        v[tau.coordinates[0] - Family::Down.offset()] = Rational::one();
        let p = AlbertElem::from_coords(&v).to_pair(QuarkLayout::Columns);
        assert!(!p.h[0][1].is_zero() && !p.h[1][0].is_zero());
        assert!(p.m.iter().flatten().all(|z| z.is_zero()));
        assert_eq!(slots.iter().filter(|s| s.label.starts_with('β')).count(), 3);
    }
}
