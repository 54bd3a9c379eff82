//! Charge conjugation on `J⁸₃`, induced entrywise from the octonion
//! automorphism.

use super::albert::AlbertElem;
use crate::composition::canonical_charge_conj;
use crate::exact::MatrixQ;
use crate::jordan::{isomorphism_witness, AlgebraSC};
use crate::report::Check;

pub fn charge_conj_albert(a: &AlbertElem) -> AlbertElem {
    AlbertElem { zeta: a.zeta.clone(), x: std::array::from_fn(|i| canonical_charge_conj(&a.x[i])) }
}

/// `𝒞` as a `27 × 27` matrix on coordinates.
pub fn charge_matrix() -> MatrixQ {
    let cols: Vec<_> = (0..27)
        .map(|i| {
            let mut e = vec![crate::exact::Rational::zero(); 27];
            e[i] = crate::exact::Rational::one();
            charge_conj_albert(&AlbertElem::from_coords(&e)).to_coords()
        })
        .collect();
    MatrixQ::from_fn(27, 27, |r, c| cols[c][r].clone())
}

/// Involutive Jordan automorphism, checked on every basis pair.
pub fn charge_checks(albert: &AlgebraSC) -> Vec<Check> {
    let c = charge_matrix();
    let square = c.mul(&c).expect("square matrices");
    let involution = if square == MatrixQ::identity(27) {
        Check::pass("charge-involution", 27)
    } else {
        Check::fail("charge-involution", 27, "C² ≠ 1".to_string())
    };
    let auto = match isomorphism_witness(albert, albert, &c) {
        None => Check::pass("charge-automorphism", 27 * 27),
        Some((i, j)) => Check::fail("charge-automorphism", 27 * 27, format!("basis pair ({i}, {j})")),
    };
    vec![involution, auto]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exceptional::QuarkLayout;
    use crate::jordan::albert_algebra;
    use crate::random::{rational_vector, seeded};

    #[test]
    fn involutive_automorphism() {
        assert!(charge_checks(&albert_algebra()).iter().all(|c| c.passed));
    }

    #[test]
    fn conjugates_leptons_and_quarks() {
        let mut rng = seeded(5);
        let a = AlbertElem::from_coords(&rational_vector(&mut rng, 27));
        let c = charge_conj_albert(&a);
        assert_eq!(charge_conj_albert(&c), a);
        assert_eq!(c.zeta, a.zeta);
        let (p, q) = (a.to_pair(QuarkLayout::Columns), c.to_pair(QuarkLayout::Columns));
        for r in 0..3 {
            for k in 0..3 {
                assert_eq!(q.h[r][k], p.h[r][k].conj());
                // quark vectors pick up the sign of octonionic conjugation
                assert_eq!(q.m[r][k], -&p.m[r][k].conj());
            }
        }
    }
}
