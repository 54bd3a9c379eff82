//! The quaternionic factor `J⁴₂ = H₂(ℍ)` and its `U(1) × SU(2)` symmetry.
//!
//! Coordinates follow `make_hermitian(ℍ, 2)`: `ξ₁, ξ₂`, then the four real
//! coordinates of `q = z₁ + z₂j` in the `(0, 1)` slot.

use crate::composition::{Field, Quaternion};
use crate::derivations::{derivation_algebra, lie_diagnostics, stabilizer, DerBasis};
use crate::error::{AlbertError, Result};
use crate::exact::{GaussianRational, MatrixQ, Rational, VectorQ};
use crate::jordan::{isomorphism_witness, jspin_recognize, make_hermitian, AlgebraSC};
use crate::report::Check;

/// Exact 2×2 complex matrix.
pub type CMat2 = [[GaussianRational; 2]; 2];

pub fn j42_algebra() -> AlgebraSC {
    make_hermitian(Field::Quaternion, 2).expect("H2(H) exists").renamed("J4_2")
}

/// Unit vectors spanning the `H₂(ℂ)` part (`ξ₁, ξ₂, z₁`) and the `z₂` part.
pub fn j42_split() -> (Vec<VectorQ>, Vec<VectorQ>) {
    let unit = |i: usize| {
        let mut e = vec![Rational::zero(); 6];
        e[i] = Rational::one();
        e
    };
    ((0..4).map(unit).collect(), (4..6).map(unit).collect())
}

/// `[[a, −b̄], [b, ā]]`, in `SU(2)` when `|a|² + |b|² = 1`.
pub fn su2_from_pair(a: GaussianRational, b: GaussianRational) -> CMat2 {
    [[a.clone(), -&b.conj()], [b, a.conj()]]
}

/// Exact elements of `SU(2)` with entries in `{0, ±1, ±i}`.
pub fn su2_signed_permutations() -> Vec<CMat2> {
    let units = [(1, 0), (-1, 0), (0, 1), (0, -1)].map(|(r, i)| GaussianRational::from_ints(r, i));
    let z = GaussianRational::zero;
    units.iter().flat_map(|u| [su2_from_pair(u.clone(), z()), su2_from_pair(z(), u.clone())]).collect()
}

fn mul2(a: &CMat2, b: &CMat2) -> CMat2 {
    std::array::from_fn(|r| std::array::from_fn(|c| &(&a[r][0] * &b[0][c]) + &(&a[r][1] * &b[1][c])))
}

fn adjoint2(a: &CMat2) -> CMat2 {
    std::array::from_fn(|r| std::array::from_fn(|c| a[c][r].conj()))
}

fn is_special_unitary(u: &CMat2) -> bool {
    let id = [[GaussianRational::one(), GaussianRational::zero()], [GaussianRational::zero(), GaussianRational::one()]];
    let det = &(&u[0][0] * &u[1][1]) - &(&u[0][1] * &u[1][0]);
    mul2(u, &adjoint2(u)) == id && det == GaussianRational::one()
}

/// `(e^{iθ}, U)·(A + z₂J) = UAU* + e^{iθ}z₂J` with `A ∈ H₂(ℂ)` and
/// `J = [[0, j], [−j, 0]]`.
pub fn u1su2_act(phase: &GaussianRational, u: &CMat2, x: &[Rational]) -> Result<VectorQ> {
    if x.len() != 6 {
        return Err(AlbertError::Dimension(format!("J4_2 elements have 6 coordinates, got {}", x.len())));
    }
    if !phase.norm_sqr().is_one() {
        return Err(AlbertError::InvalidInput(format!("phase {phase} is not a unit complex number")));
    }
    if !is_special_unitary(u) {
        return Err(AlbertError::InvalidInput("U is not in SU(2)".into()));
    }
    let z1 = GaussianRational::new(x[2].clone(), x[3].clone());
    let z2 = GaussianRational::new(x[4].clone(), x[5].clone());
    let a = [[GaussianRational::real(x[0].clone()), z1.clone()], [z1.conj(), GaussianRational::real(x[1].clone())]];
    let b = mul2(&mul2(u, &a), &adjoint2(u));
    let w = phase * &z2;
    Ok(vec![b[0][0].re.clone(), b[1][1].re.clone(), b[0][1].re.clone(), b[0][1].im.clone(), w.re, w.im])
}

pub fn u1su2_matrix(phase: &GaussianRational, u: &CMat2) -> Result<MatrixQ> {
    let cols = (0..6)
        .map(|i| {
            let mut e = vec![Rational::zero(); 6];
            e[i] = Rational::one();
            u1su2_act(phase, u, &e)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MatrixQ::from_fn(6, 6, |r, c| cols[c][r].clone()))
}

/// `U·[[0, j], [−j, 0]]·U* = [[0, j], [−j, 0]]`, computed with quaternion
/// entries.
pub fn jinv_check(u: &CMat2) -> bool {
    let q = |z: &GaussianRational| Quaternion::new(z.clone(), GaussianRational::zero());
    let j = Quaternion::j();
    let jm = [[Quaternion::zero(), j.clone()], [Quaternion::zero().sub(&j), Quaternion::zero()]];
    let prod = |a: &[[Quaternion; 2]; 2], b: &[[Quaternion; 2]; 2]| -> [[Quaternion; 2]; 2] {
        std::array::from_fn(|r| std::array::from_fn(|c| a[r][0].mul(&b[0][c]).add(&a[r][1].mul(&b[1][c]))))
    };
    let uq: [[Quaternion; 2]; 2] = std::array::from_fn(|r| std::array::from_fn(|c| q(&u[r][c])));
    let us: [[Quaternion; 2]; 2] = std::array::from_fn(|r| std::array::from_fn(|c| q(&u[c][r]).conj()));
    prod(&prod(&uq, &jm), &us) == jm
}

/// Derivations of `J⁴₂` preserving both `H₂(ℂ)` and the `z₂` line.
pub fn j42_stabilizer(j42: &AlgebraSC) -> Result<DerBasis> {
    let (h, z) = j42_split();
    stabilizer(&derivation_algebra(j42)?, &[], &[h, z])
}

/// Sample exact group elements: signed permutations combined with rational
/// phases, plus a few dense rational points of `SU(2)`.
fn sample_group() -> Vec<(GaussianRational, CMat2)> {
    let r = |n: i64, d: i64| Rational::from_int(n) / &Rational::from_int(d);
    let g = |a: i64, b: i64, d: i64| GaussianRational::new(r(a, d), r(b, d));
    let phases = [GaussianRational::one(), GaussianRational::i(), crate::composition::circle_point(2, 1)];
    let mut us = su2_signed_permutations();
    us.push(su2_from_pair(g(1, 2, 5), g(2, 4, 5)));
    us.push(su2_from_pair(g(2, 3, 7), g(6, 0, 7)));
    phases.iter().flat_map(|p| us.iter().map(move |u| (p.clone(), u.clone()))).collect()
}

/// Automorphism, split preservation, `(jinv)`, spin-factor recognition and the
/// `u(1) ⊕ su(2)` stabilizer.
pub fn j42_checks() -> Result<Vec<Check>> {
    let a = j42_algebra();
    let samples = sample_group();
    let (h, z) = j42_split();
    let mut auto = None;
    let mut split = None;
    for (k, (p, u)) in samples.iter().enumerate() {
        let m = u1su2_matrix(p, u)?;
        if auto.is_none() && isomorphism_witness(&a, &a, &m).is_some() {
            auto = Some(k);
        }
        let keeps = |vs: &[VectorQ], range: std::ops::Range<usize>| {
            vs.iter().all(|v| m.mul_vec(v).map(|w| w.iter().enumerate().all(|(i, c)| c.is_zero() || range.contains(&i))).unwrap_or(false))
        };
        if split.is_none() && !(keeps(&h, 0..4) && keeps(&z, 4..6)) {
            split = Some(k);
        }
    }
    let n = samples.len();
    let mut out = vec![
        Check::from_witness("j42-u1su2-automorphism", n, auto.map(|k| format!("sample {k}"))),
        Check::from_witness("j42-split-preserved", n, split.map(|k| format!("sample {k}"))),
    ];
    let su2 = su2_signed_permutations();
    let bad = su2.iter().position(|u| !jinv_check(u));
    out.push(Check::from_witness("j42-jinv", su2.len(), bad.map(|k| format!("signed permutation {k}"))));
    let spin = jspin_recognize(&a).map(|s| s.n);
    out.push(if spin == Some(5) {
        Check::pass("j42-is-jspin5", 1)
    } else {
        Check::fail("j42-is-jspin5", 1, format!("recognized {spin:?}"))
    });
    let diag = lie_diagnostics(&j42_stabilizer(&a)?)?;
    let shape = (diag.dim, diag.center_dim, diag.derived_dim);
    out.push(if shape == (4, 1, 3) {
        Check::pass("j42-stabilizer-u1+su2", 1)
    } else {
        Check::fail("j42-stabilizer-u1+su2", 1, format!("(dim, center, derived) = {shape:?}"))
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_pass() {
        for c in j42_checks().unwrap() {
            assert!(c.passed, "{c:?}");
        }
    }

    #[test]
    fn identity_action() {
        let x: Vec<Rational> = (1..=6).map(Rational::from_int).collect();
        let id = su2_from_pair(GaussianRational::one(), GaussianRational::zero());
        assert_eq!(u1su2_act(&GaussianRational::one(), &id, &x).unwrap(), x);
    }

    #[test]
    fn rejects_non_unitary() {
        let bad = su2_from_pair(GaussianRational::from_ints(2, 0), GaussianRational::zero());
        assert!(u1su2_act(&GaussianRational::one(), &bad, &vec![Rational::zero(); 6]).is_err());
        assert!(u1su2_act(&GaussianRational::from_ints(0, 2), &su2_signed_permutations()[0], &vec![Rational::zero(); 6]).is_err());
    }

    #[test]
    fn jinv_fails_off_su2() {
        // determinant −1
        let u = [[GaussianRational::one(), GaussianRational::zero()], [GaussianRational::zero(), GaussianRational::from_ints(-1, 0)]];
        assert!(!jinv_check(&u));
    }
}
