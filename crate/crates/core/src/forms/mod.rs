//! The derivation-based calculus `Ω = J ⊗ Λ•g*` for a Lie algebra `g` of
//! derivations, with the Chevalley–Eilenberg differential.
//!
//! A form of degree `n` is stored as a map from `n`-element subsets of the
//! `g`-basis (bitmasks) to coefficients in `J`, i.e. `Σ_I x_I ⊗ θ^I` where
//! `θ^I = θ^{i₁} ∧ … ∧ θ^{iₙ}` for `i₁ < … < iₙ` and `θ^k` is dual to `X_k`.

use std::collections::BTreeMap;

use rand::seq::index::sample;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::derivations::DerBasis;
use crate::error::{AlbertError, Result};
use crate::exact::matrix::{sparse_rref, vec_axpy, vec_scale, zero_vector};
use crate::exact::{MatrixQ, Rational, SparseVec, VectorQ};
use crate::jordan::AlgebraSC;
use crate::random::{rational_vector, seeded};
use crate::report::Check;

pub const DEFAULT_DEGREE_CAP: usize = 3;

/// `J`, a Lie algebra `g ⊆ Der(J)` and a degree cap.
#[derive(Clone, Debug)]
pub struct CalcContext {
    pub name: String,
    pub algebra: AlgebraSC,
    pub g: DerBasis,
    pub cap: usize,
    /// `dθ^k = −Σ_{i<j} c^k_{ij} θ^i ∧ θ^j`
    dtheta: Vec<BTreeMap<u64, Rational>>,
}

impl CalcContext {
    /// Checks that `g` acts on `J`, is closed under the bracket, and that
    /// `Z(J) = ℝ𝟙`.
    pub fn new(name: impl Into<String>, algebra: AlgebraSC, g: DerBasis, cap: usize) -> Result<Self> {
        if g.n != algebra.dim() {
            return Err(AlbertError::Dimension(format!("derivations of size {} on a {}-dimensional algebra", g.n, algebra.dim())));
        }
        if g.dim() > 64 {
            return Err(AlbertError::InvalidInput(format!("g has dimension {} > 64", g.dim())));
        }
        let closure = g.verify_closure();
        if !closure.passed {
            return Err(AlbertError::InvalidInput(format!("g is not closed: {}", closure.witness.unwrap_or_default())));
        }
        let z = algebra_center(&algebra).len();
        if z != 1 {
            return Err(AlbertError::InvalidInput(format!("center of {} has dimension {z}; only trivial centers are supported", algebra.name())));
        }
        Ok(Self::with_bracket_unchecked(name, algebra, g, cap))
    }

    /// Skips every check. Used to build deliberately broken contexts.
    pub fn with_bracket_unchecked(name: impl Into<String>, algebra: AlgebraSC, g: DerBasis, cap: usize) -> Self {
        let p = g.dim();
        let dtheta = (0..p)
            .map(|k| {
                let mut m = BTreeMap::new();
                for i in 0..p {
                    for j in i + 1..p {
                        let c = &g.bracket[i][j][k];
                        if !c.is_zero() {
                            m.insert((1u64 << i) | (1u64 << j), -c);
                        }
                    }
                }
                m
            })
            .collect();
        Self { name: name.into(), algebra, g, cap, dtheta }
    }

    pub fn p(&self) -> usize {
        self.g.dim()
    }

    /// `X_k(x)`
    pub fn act(&self, k: usize, x: &[Rational]) -> VectorQ {
        self.g.basis[k].mul_vec(x).expect("algebra element")
    }
}

/// `Z(J) = {z : [x,y,z] = [x,z,y] = 0}` as an exact basis.
pub fn algebra_center(a: &AlgebraSC) -> Vec<VectorQ> {
    let n = a.dim();
    let l = a.basis_left_mults();
    let rows: Vec<SparseVec> = (0..n)
        .into_par_iter()
        .flat_map_iter(|x| {
            let l = &l;
            (0..n).flat_map(move |y| {
                let lxy = a.left_mult(&crate::exact::matrix::to_dense(a.basis_product(x, y), n));
                let lxly = l[x].mul(&l[y]).expect("square");
                // [x,y,z] = (L_{xy} − L_x L_y) z and [x,z,y] = (L_y L_x − L_x L_y) z
                let first = lxy.sub(&lxly).expect("shape");
                let second = l[y].mul(&l[x]).expect("square").sub(&lxly).expect("shape");
                first.sparse_rows().into_iter().chain(second.sparse_rows()).filter(|r| !r.is_empty()).collect::<Vec<_>>()
            })
        })
        .collect();
    sparse_rref(n, rows).nullspace_basis()
}

/// A homogeneous form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "FormJson", try_from = "FormJson")]
pub struct GForm {
    pub degree: usize,
    pub dim: usize,
    pub coeffs: BTreeMap<u64, VectorQ>,
}

#[derive(Serialize, Deserialize)]
struct FormTerm {
    indices: Vec<usize>,
    coeff: VectorQ,
}

#[derive(Serialize, Deserialize)]
struct FormJson {
    degree: usize,
    dim: usize,
    terms: Vec<FormTerm>,
}

impl From<GForm> for FormJson {
    fn from(f: GForm) -> Self {
        let terms = f.coeffs.into_iter().map(|(m, coeff)| FormTerm { indices: mask_indices(m), coeff }).collect();
        FormJson { degree: f.degree, dim: f.dim, terms }
    }
}

impl TryFrom<FormJson> for GForm {
    type Error = AlbertError;

    fn try_from(j: FormJson) -> Result<Self> {
        let mut f = GForm::zero(j.degree, j.dim);
        for t in j.terms {
            f.add_term(&t.indices, &t.coeff)?;
        }
        Ok(f)
    }
}

pub fn mask_indices(mut m: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// Sign of `θ^A ∧ θ^B` relative to `θ^{A∪B}`; zero when the sets meet.
pub fn wedge_sign(a: u64, b: u64) -> i32 {
    if a & b != 0 {
        return 0;
    }
    let inversions: u32 = mask_indices(b).iter().map(|&j| (a >> j >> 1).count_ones()).sum();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sign that sorts `tuple`, with the sorted mask; `None` on repeats.
fn sort_sign(tuple: &[usize]) -> Option<(i32, u64)> {
    let mut mask = 0u64;
    let mut sign = 1;
    for (k, &i) in tuple.iter().enumerate() {
        if mask & (1 << i) != 0 {
            return None;
        }
        mask |= 1 << i;
        if tuple[..k].iter().filter(|&&j| j > i).count() % 2 == 1 {
            sign = -sign;
        }
    }
    Some((sign, mask))
}

pub(crate) fn signed(s: i32) -> Rational {
    Rational::from_int(s as i64)
}

impl GForm {
    pub fn zero(degree: usize, dim: usize) -> Self {
        Self { degree, dim, coeffs: BTreeMap::new() }
    }

    /// A 0-form.
    pub fn function(x: &[Rational]) -> Self {
        let mut f = Self::zero(0, x.len());
        f.insert(0, x.to_vec());
        f
    }

    /// `x ⊗ θ^{i₁} ∧ … ∧ θ^{iₙ}` for indices in any order.
    pub fn monomial(x: &[Rational], indices: &[usize]) -> Result<Self> {
        let mut f = Self::zero(indices.len(), x.len());
        f.add_term(indices, x)?;
        Ok(f)
    }

    fn insert(&mut self, mask: u64, x: VectorQ) {
        if x.iter().all(Rational::is_zero) {
            self.coeffs.remove(&mask);
        } else {
            self.coeffs.insert(mask, x);
        }
    }

    pub(crate) fn accumulate(&mut self, mask: u64, s: &Rational, x: &[Rational]) {
        if s.is_zero() {
            return;
        }
        let mut cur = self.coeffs.remove(&mask).unwrap_or_else(|| zero_vector(self.dim));
        vec_axpy(&mut cur, s, x);
        self.insert(mask, cur);
    }

    pub fn add_term(&mut self, indices: &[usize], x: &[Rational]) -> Result<()> {
        if indices.len() != self.degree || x.len() != self.dim || indices.iter().any(|&i| i >= 64) {
            return Err(AlbertError::Dimension(format!("term {indices:?} does not fit a {}-form", self.degree)));
        }
        if let Some((s, m)) = sort_sign(indices) {
            self.accumulate(m, &signed(s), x);
        }
        Ok(())
    }

    pub fn coeff(&self, indices: &[usize]) -> VectorQ {
        match sort_sign(indices) {
            Some((s, m)) => self.coeffs.get(&m).map_or_else(|| zero_vector(self.dim), |x| vec_scale(x, &signed(s))),
            None => zero_vector(self.dim),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "adding forms of different degrees");
        let mut out = self.clone();
        for (m, x) in &other.coeffs {
            out.accumulate(*m, &Rational::one(), x);
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = Self::zero(self.degree, self.dim);
        for (m, x) in &self.coeffs {
            out.insert(*m, vec_scale(x, s));
        }
        out
    }

    /// `ω(X_{t₀}, …, X_{tₙ₋₁})` on basis derivations.
    pub fn evaluate(&self, tuple: &[usize]) -> VectorQ {
        assert_eq!(tuple.len(), self.degree, "wrong number of arguments");
        self.coeff(tuple)
    }
}

fn overflow(degree: usize, cap: usize) -> AlbertError {
    AlbertError::DegreeOverflow { degree, cap }
}

/// `(x ⊗ α)(y ⊗ β) = (x·y) ⊗ (α ∧ β)`
pub fn gproduct(ctx: &CalcContext, a: &GForm, b: &GForm) -> Result<GForm> {
    let deg = a.degree + b.degree;
    if deg > ctx.cap {
        return Err(overflow(deg, ctx.cap));
    }
    let mut out = GForm::zero(deg, a.dim);
    for (ma, x) in &a.coeffs {
        for (mb, y) in &b.coeffs {
            let s = wedge_sign(*ma, *mb);
            if s != 0 {
                out.accumulate(ma | mb, &signed(s), &ctx.algebra.mul(x, y));
            }
        }
    }
    Ok(out)
}

/// `d(x ⊗ θ^I) = dx ∧ θ^I + x ⊗ dθ^I`, with `dx = Σ_k X_k(x) θ^k` and
/// `dθ^I` from the structure constants by the graded Leibniz rule.
pub fn ce_differential(ctx: &CalcContext, a: &GForm) -> Result<GForm> {
    differential_with(ctx, a, &|k, x| ctx.act(k, x))
}

/// The same Chevalley–Eilenberg operator with `X_k` replaced by an arbitrary
/// action on coefficients, e.g. a covariant derivative.
pub fn differential_with(ctx: &CalcContext, a: &GForm, act: &(dyn Fn(usize, &[Rational]) -> VectorQ + Sync)) -> Result<GForm> {
    if a.degree + 1 > ctx.cap {
        return Err(overflow(a.degree + 1, ctx.cap));
    }
    let mut out = GForm::zero(a.degree + 1, a.dim);
    for (mask, x) in &a.coeffs {
        for k in 0..ctx.p() {
            let s = wedge_sign(1 << k, *mask);
            if s != 0 {
                out.accumulate((1 << k) | mask, &signed(s), &act(k, x));
            }
        }
        let idx = mask_indices(*mask);
        for (pos, &k) in idx.iter().enumerate() {
            let before: u64 = idx[..pos].iter().map(|&i| 1u64 << i).sum();
            let rest = mask & !(1 << k) & !before;
            let sign_pos = if pos % 2 == 0 { 1 } else { -1 };
            for (two, c) in &ctx.dtheta[k] {
                let s1 = wedge_sign(before, *two);
                let s2 = wedge_sign(before | two, rest);
                if s1 != 0 && s2 != 0 {
                    out.accumulate(before | two | rest, &(c * &signed(sign_pos * s1 * s2)), x);
                }
            }
        }
    }
    Ok(out)
}

/// `dω(X_{t₀}, …, X_{tₙ})` by the Chevalley–Eilenberg formula, evaluated
/// directly on basis derivations.
pub fn ce_evaluate(ctx: &CalcContext, omega: &GForm, tuple: &[usize]) -> VectorQ {
    evaluate_with(ctx, omega, tuple, &|k, x| ctx.act(k, x))
}

/// [`ce_evaluate`] with an arbitrary action on coefficients.
pub fn evaluate_with(ctx: &CalcContext, omega: &GForm, tuple: &[usize], act: &(dyn Fn(usize, &[Rational]) -> VectorQ + Sync)) -> VectorQ {
    let n = omega.degree;
    assert_eq!(tuple.len(), n + 1, "wrong number of arguments");
    let mut acc = zero_vector(omega.dim);
    for k in 0..=n {
        let rest: Vec<usize> = tuple.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, t)| *t).collect();
        let s = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
        vec_axpy(&mut acc, &s, &act(tuple[k], &omega.evaluate(&rest)));
    }
    for r in 0..=n {
        for s in r + 1..=n {
            let rest: Vec<usize> = tuple.iter().enumerate().filter(|(i, _)| *i != r && *i != s).map(|(_, t)| *t).collect();
            let sign = if (r + s) % 2 == 0 { Rational::one() } else { -Rational::one() };
            for (c, coef) in ctx.g.bracket[tuple[r]][tuple[s]].iter().enumerate() {
                if coef.is_zero() {
                    continue;
                }
                let mut args = vec![c];
                args.extend(&rest);
                vec_axpy(&mut acc, &(&sign * coef), &omega.evaluate(&args));
            }
        }
    }
    acc
}

/// A random form with at most `terms` nonzero coefficients.
pub fn random_form<R: Rng>(ctx: &CalcContext, degree: usize, terms: usize, rng: &mut R) -> GForm {
    let (p, n) = (ctx.p(), ctx.algebra.dim());
    let mut f = GForm::zero(degree, n);
    if degree > p {
        return f;
    }
    for _ in 0..terms.max(1) {
        let idx: Vec<usize> = sample(rng, p, degree).into_vec();
        f.add_term(&idx, &rational_vector(rng, n)).expect("fits");
    }
    f
}

pub(crate) fn sign_of(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `[L_A, L_B]_gr(w) = A(Bw) − (−1)^{|A||B|} B(Aw)`
fn graded_commutator_on(ctx: &CalcContext, a: &GForm, b: &GForm, w: &GForm) -> Result<GForm> {
    let ab_w = gproduct(ctx, a, &gproduct(ctx, b, w)?)?;
    let ba_w = gproduct(ctx, b, &gproduct(ctx, a, w)?)?;
    Ok(ab_w.add(&ba_w.scale(&-sign_of(a.degree * b.degree))))
}

/// Left-hand side of the graded Jordan identity applied to `w`.
pub fn graded_jordan_residual(ctx: &CalcContext, a: &GForm, b: &GForm, c: &GForm, w: &GForm) -> Result<GForm> {
    let (da, db, dc) = (a.degree, b.degree, c.degree);
    let t1 = graded_commutator_on(ctx, &gproduct(ctx, a, b)?, c, w)?.scale(&sign_of(da * dc));
    let t2 = graded_commutator_on(ctx, &gproduct(ctx, b, c)?, a, w)?.scale(&sign_of(db * da));
    let t3 = graded_commutator_on(ctx, &gproduct(ctx, c, a)?, b, w)?.scale(&sign_of(dc * db));
    Ok(t1.add(&t2).add(&t3))
}

pub(crate) fn first_failure(trials: usize, f: impl Fn(usize) -> Option<String> + Sync + Send) -> Option<String> {
    (0..trials).into_par_iter().find_map_first(f)
}

/// Exact checks of the differential graded Jordan structure on random forms:
/// `d² = 0`, graded Leibniz, graded commutativity, the graded Jordan
/// identity, agreement with the evaluation formula, `d` on functions and
/// `d𝟙 = 0`.
pub fn verify_dga(ctx: &CalcContext, trials: usize, seed: u64) -> Vec<Check> {
    let cap = ctx.cap;
    let rng_for = |tag: u64, t: usize| seeded(seed ^ (tag << 40) ^ t as u64);
    let terms = 3;
    let mut out = Vec::new();

    let d2 = first_failure(trials, |t| {
        let mut rng = rng_for(1, t);
        let deg = t % (cap.saturating_sub(1)).max(1);
        if deg + 2 > cap {
            return None;
        }
        let w = random_form(ctx, deg, terms, &mut rng);
        let dd = ce_differential(ctx, &ce_differential(ctx, &w).ok()?).ok()?;
        (!dd.is_zero()).then(|| format!("trial {t}: d²ω ≠ 0 for a {deg}-form"))
    });
    out.push(Check::from_witness("d-squared", trials, d2));

    let patterns: Vec<(usize, usize)> = [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1)]
        .into_iter()
        .filter(|(a, b)| a + b < cap)
        .collect();
    let leibniz = first_failure(trials, |t| {
        let mut rng = rng_for(2, t);
        let &(da, db) = patterns.get(t % patterns.len().max(1))?;
        let a = random_form(ctx, da, terms, &mut rng);
        let b = random_form(ctx, db, terms, &mut rng);
        let lhs = ce_differential(ctx, &gproduct(ctx, &a, &b).ok()?).ok()?;
        let r1 = gproduct(ctx, &ce_differential(ctx, &a).ok()?, &b).ok()?;
        let r2 = gproduct(ctx, &a, &ce_differential(ctx, &b).ok()?).ok()?.scale(&sign_of(da));
        (lhs != r1.add(&r2)).then(|| format!("trial {t}: degrees ({da}, {db})"))
    });
    out.push(Check::from_witness("graded-leibniz", trials, leibniz));

    let comm = first_failure(trials, |t| {
        let mut rng = rng_for(3, t);
        let da = t % (cap + 1);
        let db = (t / (cap + 1)) % (cap + 1 - da);
        let a = random_form(ctx, da, terms, &mut rng);
        let b = random_form(ctx, db, terms, &mut rng);
        let ab = gproduct(ctx, &a, &b).ok()?;
        let ba = gproduct(ctx, &b, &a).ok()?.scale(&sign_of(da * db));
        (ab != ba).then(|| format!("trial {t}: degrees ({da}, {db})"))
    });
    out.push(Check::from_witness("graded-commutativity", trials, comm));

    let triples: Vec<[usize; 4]> = (0..=cap)
        .flat_map(|a| (0..=cap - a).flat_map(move |b| (0..=cap - a - b).flat_map(move |c| (0..=cap - a - b - c).map(move |w| [a, b, c, w]))))
        .collect();
    let jordan = first_failure(trials, |t| {
        let mut rng = rng_for(4, t);
        let [da, db, dc, dw] = triples[t % triples.len()];
        let forms: Vec<GForm> = [da, db, dc, dw].iter().map(|&d| random_form(ctx, d, 2, &mut rng)).collect();
        let r = graded_jordan_residual(ctx, &forms[0], &forms[1], &forms[2], &forms[3]).ok()?;
        (!r.is_zero()).then(|| format!("trial {t}: degrees ({da}, {db}, {dc}) on a {dw}-form"))
    });
    out.push(Check::from_witness("graded-jordan", trials, jordan));

    let eval = first_failure(trials, |t| {
        let mut rng = rng_for(5, t);
        let deg = t % cap.max(1);
        let p = ctx.p();
        if deg + 1 > p || deg + 1 > cap {
            return None;
        }
        let w = random_form(ctx, deg, terms, &mut rng);
        let dw = ce_differential(ctx, &w).ok()?;
        let tuple: Vec<usize> = sample(&mut rng, p, deg + 1).into_vec();
        (dw.evaluate(&tuple) != ce_evaluate(ctx, &w, &tuple)).then(|| format!("trial {t}: arguments {tuple:?}"))
    });
    out.push(Check::from_witness("ce-evaluation", trials, eval));

    let functions = first_failure(trials, |t| {
        let mut rng = rng_for(6, t);
        let x = rational_vector(&mut rng, ctx.algebra.dim());
        let dx = ce_differential(ctx, &GForm::function(&x)).ok()?;
        (0..ctx.p()).find(|&k| dx.evaluate(&[k]) != ctx.act(k, &x)).map(|k| format!("trial {t}: dx(X_{k}) ≠ X_{k}(x)"))
    });
    out.push(Check::from_witness("d-on-functions", trials, functions));

    let unit_ok = ctx.algebra.unit().filter(|_| cap >= 1).map(|u| ce_differential(ctx, &GForm::function(u)).map(|f| f.is_zero()).unwrap_or(false));
    out.push(Check::from_witness("d-unit", 1, (unit_ok == Some(false)).then(|| "d𝟙 ≠ 0".to_string())));
    out.into_iter().map(|c| c.prefixed(&ctx.name)).collect()
}

/// Determinant of a small square matrix by Laplace expansion.
fn small_det(m: &[Vec<Rational>]) -> Rational {
    match m.len() {
        0 => Rational::one(),
        1 => m[0][0].clone(),
        n => (0..n)
            .map(|c| {
                let minor: Vec<Vec<Rational>> = m[1..].iter().map(|row| row.iter().enumerate().filter(|(k, _)| *k != c).map(|(_, x)| x.clone()).collect()).collect();
                &(&m[0][c] * &small_det(&minor)) * &sign_of(c)
            })
            .sum(),
    }
}

/// Pulls a form on `big` back along `g ⊆ big.g`, where `inclusion[a]` holds
/// the coordinates of the `a`-th basis element of `small.g` in `big.g`.
pub fn restrict(small: &CalcContext, inclusion: &[VectorQ], omega: &GForm) -> GForm {
    let n = omega.degree;
    let p = small.p();
    let mut out = GForm::zero(n, omega.dim);
    let subsets: Vec<u64> = (0..1u64 << p).filter(|m| m.count_ones() as usize == n).collect();
    for s in subsets {
        let idx = mask_indices(s);
        for (k, x) in &omega.coeffs {
            let kidx = mask_indices(*k);
            let minor: Vec<Vec<Rational>> = idx.iter().map(|&a| kidx.iter().map(|&c| inclusion[a][c].clone()).collect()).collect();
            out.accumulate(s, &small_det(&minor), x);
        }
    }
    out
}

/// Restriction commutes with `d` on random 0- and 1-forms of `big`.
pub fn restriction_check(big: &CalcContext, small: &CalcContext, inclusion: &[VectorQ], trials: usize, seed: u64) -> Check {
    let witness = first_failure(trials, |t| {
        let mut rng = seeded(seed ^ t as u64);
        let deg = t % 2;
        let w = random_form(big, deg, 3, &mut rng);
        let lhs = restrict(small, inclusion, &ce_differential(big, &w).ok()?);
        let rhs = ce_differential(small, &restrict(small, inclusion, &w)).ok()?;
        (lhs != rhs).then(|| format!("trial {t}: {deg}-form"))
    });
    Check::from_witness(format!("{}-restriction-commutes-with-d", small.name), trials, witness)
}

/// Coordinates of every basis element of `small` inside `big`.
pub fn inclusion_coordinates(big: &DerBasis, small: &DerBasis) -> Result<Vec<VectorQ>> {
    small
        .basis
        .iter()
        .enumerate()
        .map(|(a, d)| big.coordinates(d).ok_or_else(|| AlbertError::InvalidInput(format!("generator {a} is outside the larger algebra"))))
        .collect()
}

/// A first-order calculus `d(x) = Σ_α X_α(x) ⊗ e^α` factored through the
/// derivation-based one: `C^k_α` are the coordinates of `X_α` in the basis of
/// `Der(J)`, and `i_d(x ⊗ θ^k) = x ⊗ C^k_α e^α`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UniversalFactorization {
    /// `p × |α|`
    pub coefficients: MatrixQ,
    pub check: Check,
}

impl UniversalFactorization {
    /// `i_d(x ⊗ θ^k)` as one copy of `x` per `e^α`.
    pub fn apply(&self, x: &[Rational], k: usize) -> Vec<VectorQ> {
        (0..self.coefficients.cols()).map(|alpha| vec_scale(x, &self.coefficients.get(k, alpha))).collect()
    }
}

pub fn universal_factorization(algebra: &AlgebraSC, der: &DerBasis, targets: &[MatrixQ]) -> Result<UniversalFactorization> {
    let p = der.dim();
    let mut cols = Vec::with_capacity(targets.len());
    for (alpha, x) in targets.iter().enumerate() {
        if let Some((i, j)) = crate::derivations::derivation_witness(algebra, x) {
            return Err(AlbertError::NotDerivation(format!("X_{alpha} fails the Leibniz rule on ({i}, {j})")));
        }
        cols.push(der.coordinates(x).ok_or_else(|| AlbertError::Internal(format!("X_{alpha} is a derivation outside the given basis")))?);
    }
    let coefficients = MatrixQ::from_fn(p, targets.len(), |k, a| cols[a][k].clone());
    let f = UniversalFactorization { coefficients, check: Check::pass("universal-factorization", 0) };
    let n = algebra.dim();
    let witness = (0..n).find_map(|i| {
        let x = algebra.basis(i);
        // i_d(d_Der x) = Σ_k i_d(∂_k(x) ⊗ θ^k)
        let mut via = vec![zero_vector(n); targets.len()];
        for k in 0..p {
            for (slot, v) in via.iter_mut().zip(f.apply(&der.basis[k].mul_vec(&x).expect("square"), k)) {
                vec_axpy(slot, &Rational::one(), &v);
            }
        }
        let direct: Vec<VectorQ> = targets.iter().map(|t| t.mul_vec(&x).expect("square")).collect();
        (via != direct).then(|| format!("basis element {i}"))
    });
    Ok(UniversalFactorization { check: Check::from_witness("universal-factorization", n, witness), ..f })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::Field;
    use crate::derivations::derivation_algebra;
    use crate::jordan::{make_hermitian, make_jspin};

    fn ctx(a: AlgebraSC, cap: usize) -> CalcContext {
        let g = derivation_algebra(&a).unwrap();
        CalcContext::new(a.name().to_string(), a, g, cap).unwrap()
    }

    #[test]
    fn signs() {
        assert_eq!(wedge_sign(0b01, 0b10), 1);
        assert_eq!(wedge_sign(0b10, 0b01), -1);
        assert_eq!(wedge_sign(0b10, 0b10), 0);
        assert_eq!(wedge_sign(0b101, 0b010), -1);
        assert_eq!(sort_sign(&[2, 0, 1]), Some((1, 0b111)));
        assert_eq!(sort_sign(&[1, 0]), Some((-1, 0b11)));
    }

    #[test]
    fn products() {
        let c = ctx(make_hermitian(Field::Real, 3).unwrap(), 3);
        let (x, y) = (c.algebra.basis(0), c.algebra.basis(3));
        let xy = c.algebra.mul(&x, &y);
        let a = GForm::monomial(&x, &[0]).unwrap();
        let b = GForm::monomial(&y, &[1]).unwrap();
        let ab = gproduct(&c, &a, &b).unwrap();
        assert_eq!(ab.coeff(&[0, 1]), xy);
        assert_eq!(gproduct(&c, &b, &a).unwrap(), ab.scale(&-Rational::one()));
        assert!(gproduct(&c, &a, &GForm::monomial(&y, &[0]).unwrap()).unwrap().is_zero());
        let f = gproduct(&c, &GForm::function(&x), &GForm::function(&y)).unwrap();
        assert_eq!(f.coeff(&[]), xy);
        let two = GForm::monomial(&x, &[0, 1]).unwrap();
        assert!(matches!(gproduct(&c, &two, &two), Err(AlbertError::DegreeOverflow { .. })));
    }

    #[test]
    fn abelian_differential() {
        let c = ctx(make_hermitian(Field::Real, 2).unwrap(), 2);
        assert_eq!(c.p(), 1);
        let x = c.algebra.basis(2);
        let d = ce_differential(&c, &GForm::function(&x)).unwrap();
        assert_eq!(d.evaluate(&[0]), c.act(0, &x));
        // a single generator: every 2-form vanishes
        assert!(ce_differential(&c, &GForm::monomial(&x, &[0]).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn dga_laws_small() {
        for a in [make_hermitian(Field::Real, 3).unwrap(), make_jspin(4).unwrap()] {
            let c = ctx(a, 3);
            for check in verify_dga(&c, 40, 3) {
                assert!(check.passed, "{check:?}");
            }
        }
    }

    #[test]
    fn corrupted_bracket_breaks_d_squared() {
        let a = make_jspin(3).unwrap();
        let mut g = derivation_algebra(&a).unwrap();
        g.bracket[0][1][2] = &g.bracket[0][1][2] + &Rational::one();
        let c = CalcContext::with_bracket_unchecked("broken", a, g, 3);
        let d2 = verify_dga(&c, 20, 1).into_iter().find(|k| k.name.ends_with("d-squared")).unwrap();
        assert!(!d2.passed && d2.witness.is_some());
    }

    #[test]
    fn graded_jordan_detects_non_jordan_coefficients() {
        let a = crate::jordan::construct::random_unital_algebra(4, 5);
        let g = DerBasis::from_matrices("zero", 4, vec![]).unwrap();
        let c = CalcContext::with_bracket_unchecked("random", a, g, 0);
        let check = verify_dga(&c, 10, 2).into_iter().find(|k| k.name.ends_with("graded-jordan")).unwrap();
        assert!(!check.passed);
    }

    #[test]
    fn centers() {
        assert_eq!(algebra_center(&make_hermitian(Field::Complex, 3).unwrap()).len(), 1);
        let two = crate::jordan::direct_sum(&[make_jspin(2).unwrap(), make_jspin(3).unwrap()]).unwrap();
        assert_eq!(algebra_center(&two).len(), 2);
        assert!(CalcContext::new("sum", two.clone(), derivation_algebra(&two).unwrap(), 2).is_err());
    }

    #[test]
    fn factorization() {
        let a = make_hermitian(Field::Complex, 3).unwrap();
        let der = derivation_algebra(&a).unwrap();
        let id = universal_factorization(&a, &der, &der.basis).unwrap();
        assert!(id.check.passed);
        assert_eq!(id.coefficients, MatrixQ::identity(der.dim()));
        let single = universal_factorization(&a, &der, &[der.combine(&[Rational::one(), Rational::from_int(2)])]).unwrap();
        assert!(single.check.passed);
        assert_eq!(single.coefficients.get(1, 0), Rational::from_int(2));
        let empty = universal_factorization(&a, &der, &[]).unwrap();
        assert!(empty.check.passed && empty.coefficients.cols() == 0);
        assert!(universal_factorization(&a, &der, &[MatrixQ::identity(9)]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let f = GForm::monomial(&[Rational::one(), Rational::half()], &[3, 1]).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(serde_json::from_str::<GForm>(&s).unwrap(), f);
    }
}
