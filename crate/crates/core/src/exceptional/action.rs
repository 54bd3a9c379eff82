//! The `SU(3) × SU(3)` action `H ↦ VHV*`, `M ↦ UMV*` on `H₃(ℂ) ⊕ M₃(ℂ)`
//! and its infinitesimal form on `H₃(𝕆)`.

use serde::{Deserialize, Serialize};

use super::albert::{coords_to_pair_f64, hm_split, pair_to_coords_f64, AlbertElem, PairHM, QuarkLayout};
use crate::composition::su3::{
    cmat_adjoint, cmat_mul, cmat_sub, cmat_zero, fmat_adjoint, fmat_mul, random_float_su3, CMat3, SU3Matrix,
    DEFAULT_SU3_TOLERANCE,
};
use crate::derivations::{derivation_algebra, derivation_witness, stabilizer, DerBasis};
use crate::error::Result;
use crate::exact::{GaussianRational, MatrixQ, Rational};
use crate::jordan::AlgebraSC;
use crate::random::{rational_vector, seeded};
use crate::report::Check;

/// `(U, V)·(H, M) = (VHV*, UMV*)`
pub fn su3xsu3_act(u: &SU3Matrix, v: &SU3Matrix, p: &PairHM) -> Result<PairHM> {
    u.validate(DEFAULT_SU3_TOLERANCE)?;
    v.validate(DEFAULT_SU3_TOLERANCE)?;
    match (u, v) {
        (SU3Matrix::Exact(u), SU3Matrix::Exact(v)) => Ok(PairHM {
            h: cmat_mul(&cmat_mul(v, &p.h), &cmat_adjoint(v)),
            m: cmat_mul(&cmat_mul(u, &p.m), &cmat_adjoint(v)),
        }),
        _ => Err(crate::AlbertError::InvalidInput(
            "exact pairs need exact group elements; use act_matrix_f64 for floating ones".into(),
        )),
    }
}

/// A rational basis of `su(3)`: `i(E₁₁−E₂₂)`, `i(E₂₂−E₃₃)`, and for `k < l`
/// the pair `E_kl − E_lk`, `i(E_kl + E_lk)`.
pub fn su3_basis() -> Vec<CMat3> {
    let g = GaussianRational::from_ints;
    let mut out = Vec::new();
    for k in 0..2 {
        let mut m = cmat_zero();
        m[k][k] = g(0, 1);
        m[k + 1][k + 1] = g(0, -1);
        out.push(m);
    }
    for k in 0..3 {
        for l in k + 1..3 {
            let mut a = cmat_zero();
            a[k][l] = g(1, 0);
            a[l][k] = g(-1, 0);
            out.push(a);
            let mut s = cmat_zero();
            s[k][l] = g(0, 1);
            s[l][k] = g(0, 1);
            out.push(s);
        }
    }
    out
}

/// `δ(H, M) = (vH − Hv, uM − Mv)`
pub fn infinitesimal_act(u: &CMat3, v: &CMat3, p: &PairHM) -> PairHM {
    PairHM {
        h: cmat_sub(&cmat_mul(v, &p.h), &cmat_mul(&p.h, v)),
        m: cmat_sub(&cmat_mul(u, &p.m), &cmat_mul(&p.m, v)),
    }
}

/// The infinitesimal action as a `27 × 27` matrix on the coordinates of
/// `H₃(𝕆)`.
pub fn infinitesimal_matrix(u: &CMat3, v: &CMat3, layout: QuarkLayout) -> MatrixQ {
    let cols: Vec<Vec<Rational>> = (0..27)
        .map(|i| {
            let mut e = vec![Rational::zero(); 27];
            e[i] = Rational::one();
            let p = AlbertElem::from_coords(&e).to_pair(layout);
            AlbertElem::from_pair(&infinitesimal_act(u, v, &p), layout).to_coords()
        })
        .collect();
    MatrixQ::from_fn(27, 27, |r, c| cols[c][r].clone()).with_auto_storage()
}

/// Images of `(u, 0)` and `(0, v)` for `u, v` in [`su3_basis`]: 16 matrices,
/// colour factor first.
pub fn acg_generators(layout: QuarkLayout) -> Vec<MatrixQ> {
    let z = cmat_zero();
    let basis = su3_basis();
    let mut out: Vec<MatrixQ> = basis.iter().map(|u| infinitesimal_matrix(u, &z, layout)).collect();
    out.extend(basis.iter().map(|v| infinitesimal_matrix(&z, v, layout)));
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayoutVerdict {
    pub layout: QuarkLayout,
    /// Every infinitesimal generator is a derivation of `H₃(𝕆)`.
    pub derivation: bool,
    /// Index of the first generator that fails, if any.
    pub failing_generator: Option<usize>,
}

/// Tests each quark layout by requiring the infinitesimal action to consist
/// of derivations.
pub fn layout_table(albert: &AlgebraSC) -> Vec<LayoutVerdict> {
    QuarkLayout::ALL
        .iter()
        .map(|&layout| {
            let failing = acg_generators(layout).iter().position(|g| derivation_witness(albert, g).is_some());
            LayoutVerdict { layout, derivation: failing.is_none(), failing_generator: failing }
        })
        .collect()
}

/// The layout that passes [`layout_table`], if exactly one does.
pub fn resolve_layout(albert: &AlgebraSC) -> Option<QuarkLayout> {
    let ok: Vec<QuarkLayout> = layout_table(albert).into_iter().filter(|v| v.derivation).map(|v| v.layout).collect();
    (ok.len() == 1).then(|| ok[0])
}

/// The group action as a real `27 × 27` matrix in floating point.
pub fn act_matrix_f64(u: &SU3Matrix, v: &SU3Matrix, layout: QuarkLayout) -> Result<Vec<Vec<f64>>> {
    u.validate(DEFAULT_SU3_TOLERANCE)?;
    v.validate(DEFAULT_SU3_TOLERANCE)?;
    let (u, v) = (u.as_f64(), v.as_f64());
    let vs = fmat_adjoint(&v);
    let mut cols = Vec::with_capacity(27);
    for i in 0..27 {
        let mut e = vec![0.0; 27];
        e[i] = 1.0;
        let (h, m) = coords_to_pair_f64(&e, layout);
        let h2 = fmat_mul(&fmat_mul(&v, &h), &vs);
        let m2 = fmat_mul(&fmat_mul(&u, &m), &vs);
        cols.push(pair_to_coords_f64(&h2, &m2, layout));
    }
    Ok((0..27).map(|r| (0..27).map(|c| cols[c][r]).collect()).collect())
}

/// For `samples` random floating `(U, V)`, the action preserves the Jordan
/// product up to `tol`.
pub fn group_automorphism_check(albert: &AlgebraSC, layout: QuarkLayout, samples: usize, seed: u64, tol: f64) -> Check {
    let mut rng = seeded(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let (u, v) = (random_float_su3(&mut rng), random_float_su3(&mut rng));
        let g = act_matrix_f64(&u, &v, layout).expect("sampled elements are special unitary");
        let x: Vec<f64> = rational_vector(&mut rng, 27).iter().map(Rational::to_f64).collect();
        let y: Vec<f64> = rational_vector(&mut rng, 27).iter().map(Rational::to_f64).collect();
        let apply = |z: &[f64]| -> Vec<f64> { g.iter().map(|row| row.iter().zip(z).map(|(a, b)| a * b).sum()).collect() };
        let lhs = apply(&albert.mul_f64(&x, &y));
        let rhs = albert.mul_f64(&apply(&x), &apply(&y));
        let scale = lhs.iter().map(|t| t.abs()).fold(1.0, f64::max);
        worst = worst.max(lhs.iter().zip(&rhs).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max) / scale);
    }
    Check::residual("su3xsu3-group-automorphism", samples, worst, tol)
}

/// Derivations of `H₃(𝕆)` preserving both `H₃(ℂ)` and `M₃(ℂ)`.
pub fn hm_stabilizer(albert: &AlgebraSC) -> Result<DerBasis> {
    let (h, m) = hm_split();
    stabilizer(&derivation_algebra(albert)?, &[], &[h, m])
}

/// Rank of the span of the generators.
pub fn generator_rank(gens: &[MatrixQ]) -> usize {
    let rows: Vec<Vec<Rational>> = gens.iter().map(|g| g.to_rows().into_iter().flatten().collect()).collect();
    MatrixQ::from_rows(rows).map(|m| m.rank()).unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jordan::albert_algebra;

    #[test]
    fn columns_is_the_only_layout() {
        let a = albert_algebra();
        assert_eq!(resolve_layout(&a), Some(QuarkLayout::Columns));
    }

    #[test]
    fn generators_span_the_stabilizer() {
        let a = albert_algebra();
        let stab = hm_stabilizer(&a).unwrap();
        assert_eq!(stab.dim(), 16);
        let gens = acg_generators(QuarkLayout::Columns);
        assert_eq!(generator_rank(&gens), 16);
        assert!(gens.iter().all(|g| stab.coordinates(g).is_some()));
    }

    #[test]
    fn product_matches_structure_constants() {
        let a = albert_algebra();
        let mut rng = seeded(9);
        for _ in 0..20 {
            let (x, y) = (rational_vector(&mut rng, 27), rational_vector(&mut rng, 27));
            let p = AlbertElem::from_coords(&x).product(&AlbertElem::from_coords(&y));
            assert_eq!(p.to_coords(), a.mul(&x, &y));
        }
    }

    #[test]
    fn group_action_is_automorphism() {
        let a = albert_algebra();
        assert!(group_automorphism_check(&a, QuarkLayout::Columns, 100, 3, 1e-8).passed);
        assert!(!group_automorphism_check(&a, QuarkLayout::Rows, 20, 3, 1e-8).passed);
    }

    #[test]
    fn exact_action_agrees_with_float() {
        let mut rng = seeded(2);
        let u = crate::composition::su3::random_exact_su3(&mut rng);
        let v = crate::composition::su3::random_exact_su3(&mut rng);
        let x = rational_vector(&mut rng, 27);
        let p = AlbertElem::from_coords(&x).to_pair(QuarkLayout::Columns);
        let exact = AlbertElem::from_pair(&su3xsu3_act(&u, &v, &p).unwrap(), QuarkLayout::Columns).to_coords();
        let g = act_matrix_f64(&u, &v, QuarkLayout::Columns).unwrap();
        for (r, row) in g.iter().enumerate() {
            let f: f64 = row.iter().zip(&x).map(|(a, b)| a * b.to_f64()).sum();
            assert!((f - exact[r].to_f64()).abs() < 1e-9);
        }
    }
}
