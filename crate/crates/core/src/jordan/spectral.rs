//! Minimal polynomials, spectral resolutions and the polynomial calculus.

use serde::{Deserialize, Serialize};

use super::algebra::AlgebraSC;
use super::trace::euclidean_check;
use crate::error::{AlbertError, Result};
use crate::exact::matrix::{vec_axpy, vec_sub, zero_vector};
use crate::exact::poly::DEFAULT_REFINE_BITS;
use crate::exact::{Coordinatizer, Interval, PolyQ, Rational, VectorQ};
use crate::random::{rational_vector, seeded};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralTerm {
    /// Isolating interval of the eigenvalue.
    pub interval: Interval,
    /// Floating midpoint of the interval.
    pub eigenvalue: f64,
    /// Rational interpolation node (the interval midpoint).
    pub node: Rational,
    /// `P_r(x)` computed exactly from the rational nodes.
    pub idempotent_exact: VectorQ,
    pub idempotent: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralResiduals {
    /// `‖Σ λ_r e_r − x‖`
    pub reconstruction: f64,
    /// `max_r ‖e_r² − e_r‖`
    pub idempotency: f64,
    /// `max_{r≠s} ‖e_r e_s‖`
    pub orthogonality: f64,
    /// `Σ e_r = 𝟙` holds in exact arithmetic.
    pub unit_sum_exact: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralResolution {
    pub minimal_polynomial: PolyQ,
    pub terms: Vec<SpectralTerm>,
    pub residuals: SpectralResiduals,
}

impl SpectralResolution {
    /// `card(I_x)`, the number of distinct eigenvalues.
    pub fn card(&self) -> usize {
        self.terms.len()
    }

    pub fn max_residual(&self) -> f64 {
        let r = &self.residuals;
        r.reconstruction.max(r.idempotency).max(r.orthogonality)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SpectralOptions {
    /// Eigenvalue intervals are refined to width `2^-bits`.
    pub bits: u32,
    /// Decide formal reality of the algebra first.
    pub verify_euclidean: bool,
}

impl Default for SpectralOptions {
    fn default() -> Self {
        Self { bits: DEFAULT_REFINE_BITS, verify_euclidean: true }
    }
}

/// Monic minimal polynomial of `x` in the subalgebra `ℝ[x]`, together with
/// the powers `𝟙, x, …, x^{d−1}`.
pub fn minimal_polynomial(a: &AlgebraSC, x: &[Rational]) -> Result<(PolyQ, Vec<VectorQ>)> {
    a.check_elem(x)?;
    let mut powers = vec![a.require_unit()?.clone()];
    loop {
        let next = a.mul(x, powers.last().expect("nonempty"));
        let coord = Coordinatizer::new(powers.clone())?;
        if let Some(c) = coord.coordinates(&next) {
            let mut coeffs: Vec<Rational> = c.iter().map(|v| -v).collect();
            coeffs.push(Rational::one());
            return Ok((PolyQ::new(coeffs), powers));
        }
        if powers.len() >= a.dim() {
            return Err(AlbertError::Internal("powers exceed the dimension without a linear relation".into()));
        }
        powers.push(next);
    }
}

/// Evaluate `p` at `x` from precomputed powers (`p` of degree below the
/// number of powers, reduced modulo the minimal polynomial otherwise).
fn eval_on_powers(p: &PolyQ, m: &PolyQ, powers: &[VectorQ]) -> Result<VectorQ> {
    let r = if p.degree().is_some_and(|d| d >= powers.len()) { p.div_rem(m)?.1 } else { p.clone() };
    let mut out = zero_vector(powers[0].len());
    for (c, pw) in r.coeffs().iter().zip(powers) {
        vec_axpy(&mut out, c, pw);
    }
    Ok(out)
}

pub fn spectral_resolution(a: &AlgebraSC, x: &[Rational]) -> Result<SpectralResolution> {
    spectral_resolution_with(a, x, SpectralOptions::default())
}

pub fn spectral_resolution_with(a: &AlgebraSC, x: &[Rational], opts: SpectralOptions) -> Result<SpectralResolution> {
    if opts.verify_euclidean && !euclidean_check(a)? {
        return Err(AlbertError::NotEuclidean(format!("trace form of {} is not positive definite", a.name())));
    }
    let (m, powers) = minimal_polynomial(a, x)?;
    let deg = m.degree().expect("monic");
    if m.squarefree().degree() != Some(deg) {
        return Err(AlbertError::NotEuclidean(format!("minimal polynomial {m:?} has a repeated root")));
    }
    let intervals = m.sturm_isolate(opts.bits)?;
    if intervals.len() != deg {
        return Err(AlbertError::NotEuclidean(format!(
            "minimal polynomial {m:?} has {} real roots out of {deg}",
            intervals.len()
        )));
    }
    let nodes: Vec<Rational> = intervals.iter().map(Interval::midpoint).collect();
    let mut terms = Vec::with_capacity(deg);
    for (r, iv) in intervals.into_iter().enumerate() {
        let p = lagrange_basis(&nodes, r);
        let e = eval_on_powers(&p, &m, &powers)?;
        terms.push(SpectralTerm {
            eigenvalue: nodes[r].to_f64(),
            node: nodes[r].clone(),
            interval: iv,
            idempotent: e.iter().map(Rational::to_f64).collect(),
            idempotent_exact: e,
        });
    }
    let residuals = residuals(a, x, &terms)?;
    Ok(SpectralResolution { minimal_polynomial: m, terms, residuals })
}

/// `P_r(X) = Π_{s≠r} (X − μ_s)/(μ_r − μ_s)`.
pub fn lagrange_basis(nodes: &[Rational], r: usize) -> PolyQ {
    let mut p = PolyQ::constant(Rational::one());
    for (s, mu) in nodes.iter().enumerate() {
        if s != r {
            p = p.mul(&PolyQ::linear_root(mu)).scale(&(&nodes[r] - mu).recip());
        }
    }
    p
}

fn residuals(a: &AlgebraSC, x: &[Rational], terms: &[SpectralTerm]) -> Result<SpectralResiduals> {
    let n = a.dim();
    let mut recon = zero_vector(n);
    let mut sum = zero_vector(n);
    for t in terms {
        vec_axpy(&mut recon, &t.node, &t.idempotent_exact);
        vec_axpy(&mut sum, &Rational::one(), &t.idempotent_exact);
    }
    let mut idem: f64 = 0.0;
    let mut orth: f64 = 0.0;
    for (r, t) in terms.iter().enumerate() {
        let e = &t.idempotent_exact;
        idem = idem.max(norm(&vec_sub(&a.mul(e, e), e)));
        for u in &terms[r + 1..] {
            orth = orth.max(norm(&a.mul(e, &u.idempotent_exact)));
        }
    }
    Ok(SpectralResiduals {
        reconstruction: norm(&vec_sub(&recon, x)),
        idempotency: idem,
        orthogonality: orth,
        unit_sum_exact: &sum == a.require_unit()?,
    })
}

/// Euclidean norm of the coordinate vector.
pub fn norm(v: &[Rational]) -> f64 {
    v.iter().map(|c| c.to_f64().powi(2)).sum::<f64>().sqrt()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyCalculus {
    /// `Σ P(μ_r) e_r` in floating form.
    pub value: Vec<f64>,
    /// `P(x)` by Horner's rule with the algebra product.
    pub horner: VectorQ,
    /// `‖Σ P(μ_r) e_r − P(x)‖`
    pub residual: f64,
}

/// `P(x) = Σ P(λ_r) e_r`, compared against direct evaluation.
pub fn poly_calculus(a: &AlgebraSC, p: &PolyQ, x: &[Rational]) -> Result<PolyCalculus> {
    let s = spectral_resolution(a, x)?;
    let n = a.dim();
    let mut val = zero_vector(n);
    for t in &s.terms {
        vec_axpy(&mut val, &p.eval(&t.node), &t.idempotent_exact);
    }
    let unit = a.require_unit()?;
    let mut horner = zero_vector(n);
    for c in p.coeffs().iter().rev() {
        horner = a.mul(x, &horner);
        vec_axpy(&mut horner, c, unit);
    }
    Ok(PolyCalculus {
        value: val.iter().map(Rational::to_f64).collect(),
        residual: norm(&vec_sub(&val, &horner)),
        horner,
    })
}

/// Largest `card(I_x)` over `trials` random rational elements.
pub fn capacity_estimate(a: &AlgebraSC, trials: usize, seed: u64) -> Result<usize> {
    if !euclidean_check(a)? {
        return Err(AlbertError::NotEuclidean(a.name().to_string()));
    }
    let mut rng = seeded(seed);
    let mut best = 0;
    for _ in 0..trials {
        let x = rational_vector(&mut rng, a.dim());
        let (m, _) = minimal_polynomial(a, &x)?;
        best = best.max(m.degree().unwrap_or(0));
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::Field;
    use crate::jordan::construct::{make_hermitian, make_jspin};

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn unit_has_single_term() {
        let a = make_hermitian(Field::Complex, 3).unwrap();
        let s = spectral_resolution(&a, a.unit().unwrap()).unwrap();
        assert_eq!(s.card(), 1);
        assert!((s.terms[0].eigenvalue - 1.0).abs() < 1e-12);
        assert_eq!(&s.terms[0].idempotent_exact, a.unit().unwrap());
    }

    #[test]
    fn diagonal_real_symmetric() {
        let a = make_hermitian(Field::Real, 3).unwrap();
        let mut x = a.zero();
        x[0] = q(5);
        x[1] = q(5);
        x[2] = q(2);
        let s = spectral_resolution(&a, &x).unwrap();
        assert_eq!(s.card(), 2);
        let mut e_small = a.zero();
        e_small[2] = q(1);
        let mut e_big = a.zero();
        e_big[0] = q(1);
        e_big[1] = q(1);
        assert!((s.terms[0].eigenvalue - 2.0).abs() < 1e-11);
        assert!((s.terms[1].eigenvalue - 5.0).abs() < 1e-11);
        let close = |u: &[f64], v: &VectorQ| u.iter().zip(v).all(|(p, q)| (p - q.to_f64()).abs() < 1e-9);
        assert!(close(&s.terms[0].idempotent, &e_small));
        assert!(close(&s.terms[1].idempotent, &e_big));
        assert!(s.residuals.unit_sum_exact);

        let sq = poly_calculus(&a, &PolyQ::from_ints(&[0, 0, 1]), &x).unwrap();
        assert!(sq.value.iter().zip([25.0, 25.0, 4.0]).all(|(u, v)| (u - v).abs() < 1e-9));
    }

    #[test]
    fn spin_closed_form() {
        // x = 2𝟙 + 3v₁ + 4v₂, s = 5: eigenvalues −3 and 7
        let a = make_jspin(3).unwrap();
        let x = vec![q(2), q(3), q(4), q(0)];
        let s = spectral_resolution(&a, &x).unwrap();
        assert_eq!(s.card(), 2);
        assert!((s.terms[0].eigenvalue + 3.0).abs() < 1e-11);
        assert!((s.terms[1].eigenvalue - 7.0).abs() < 1e-11);
        let expect_hi = [0.5, 0.3, 0.4, 0.0];
        assert!(s.terms[1].idempotent.iter().zip(expect_hi).all(|(u, v)| (u - v).abs() < 1e-9));
    }

    #[test]
    fn non_real_roots_rejected() {
        // ℂ as a real algebra is not formally real
        let c = crate::jordan::construct::division_algebra(Field::Complex);
        assert!(spectral_resolution(&c, &[q(0), q(1)]).is_err());
    }

    #[test]
    fn constant_polynomial_gives_unit() {
        let a = make_jspin(2).unwrap();
        let x = vec![q(1), q(-2), q(3)];
        let r = poly_calculus(&a, &PolyQ::from_ints(&[1]), &x).unwrap();
        assert_eq!(r.horner, *a.unit().unwrap());
        assert!(r.residual == 0.0);
    }
}
