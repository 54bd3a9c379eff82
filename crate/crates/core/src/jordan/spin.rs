//! Recognition of spin factors.

use serde::{Deserialize, Serialize};

use super::algebra::{isomorphism_witness, AlgebraSC};
use super::construct::make_spin_factor;
use super::trace::trace_form;
use crate::exact::matrix::{vec_axpy, vec_scale};
use crate::exact::{MatrixQ, Rational, VectorQ};

/// `a ≅ JSpin_n`, with an orthogonal basis `v₁, …, vₙ` of the trace-form
/// complement of `𝟙` satisfying `vᵢvⱼ = δᵢⱼ qᵢ 𝟙`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpinRecognition {
    pub n: usize,
    pub vectors: Vec<VectorQ>,
    /// `qᵢ = vᵢ²` as a multiple of `𝟙`; all positive.
    pub squares: Vec<Rational>,
    /// Change of basis from `a` to `JSpin(q₁,…,qₙ)` (columns are images of
    /// the basis of `a`).
    pub isomorphism: MatrixQ,
}

impl SpinRecognition {
    /// True when every `qᵢ` equals 1, i.e. the isomorphism lands in the
    /// standard `JSpin_n` with no square roots needed.
    pub fn is_standard(&self) -> bool {
        self.squares.iter().all(Rational::is_one)
    }
}

/// Returns the spin-factor structure when `a` is isomorphic to `JSpin_n`.
pub fn jspin_recognize(a: &AlgebraSC) -> Option<SpinRecognition> {
    let unit = a.unit()?.clone();
    let n = a.dim();
    if n < 2 {
        return None;
    }
    let b = trace_form(a);
    // V = {v : B(𝟙, v) = 0}
    let functional = b.mul_vec(&unit).ok()?;
    let complement = MatrixQ::from_rows(vec![functional]).ok()?.nullspace();
    // rational Gram-Schmidt with respect to v·v′ = ⟨v,v′⟩𝟙
    let scalar_part = |x: &VectorQ| -> Option<Rational> {
        let k = unit.iter().position(|c| !c.is_zero())?;
        let s = &x[k] / &unit[k];
        (vec_scale(&unit, &s) == *x).then_some(s)
    };
    let pairing = |x: &VectorQ, y: &VectorQ| scalar_part(&a.mul(x, y));
    let mut vectors: Vec<VectorQ> = Vec::new();
    let mut squares: Vec<Rational> = Vec::new();
    for v in complement {
        let mut w = v.clone();
        for (u, qu) in vectors.iter().zip(&squares) {
            let c = pairing(&v, u)?;
            vec_axpy(&mut w, &-(&c / qu), u);
        }
        let q = pairing(&w, &w)?;
        if !q.is_positive() {
            return None;
        }
        vectors.push(w);
        squares.push(q);
    }
    for i in 0..vectors.len() {
        for j in i + 1..vectors.len() {
            if !pairing(&vectors[i], &vectors[j])?.is_zero() {
                return None;
            }
        }
    }
    // basis of a: coordinates in (𝟙, v₁, …) by solving
    let mut cols = vec![unit.clone()];
    cols.extend(vectors.iter().cloned());
    let p_inv = MatrixQ::from_fn(n, n, |r, c| cols[c][r].clone());
    let iso = p_inv.inverse()?;
    let target = make_spin_factor(&squares).ok()?;
    if isomorphism_witness(a, &target, &iso).is_some() {
        return None;
    }
    Some(SpinRecognition { n: vectors.len(), vectors, squares, isomorphism: iso })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::Field;
    use crate::jordan::construct::{make_hermitian, make_jspin};

    #[test]
    fn coincidences() {
        for (field, n) in [(Field::Real, 2), (Field::Complex, 3), (Field::Quaternion, 5), (Field::Octonion, 9)] {
            let r = jspin_recognize(&make_hermitian(field, 2).unwrap()).expect("spin factor");
            assert_eq!(r.n, n);
        }
        assert!(jspin_recognize(&make_hermitian(Field::Real, 3).unwrap()).is_none());
        assert_eq!(jspin_recognize(&make_jspin(4).unwrap()).unwrap().n, 4);
    }
}
