//! Derivation-based connections on free Jordan modules.
//!
//! A connection is stored affinely over the reference connection: `∇_X =
//! X ⊗ 𝟙 + γ(X)`, where every `γ(X)` must be a module endomorphism.

use serde::{Deserialize, Serialize};

use crate::error::{AlbertError, Result};
use crate::exact::matrix::vec_axpy;
use crate::exact::{MatrixQ, Rational, VectorQ};
use crate::forms::{ce_differential, differential_with, evaluate_with, first_failure, random_form, sign_of, signed, wedge_sign, CalcContext, GForm};
use crate::modules::{free_module, ModuleRep};
use crate::random::{rational_vector, seeded};
use crate::report::Check;

/// Module-valued forms: the same exterior-basis storage as [`GForm`], with
/// coefficients in the carrier of the module.
pub type ModuleForm = GForm;

#[derive(Clone, Debug)]
pub struct Connection {
    pub ctx: CalcContext,
    pub module: ModuleRep,
    pub rank: usize,
    pub gamma: Vec<MatrixQ>,
    /// `∇_{X_a}` for every basis derivation.
    pub nabla: Vec<MatrixQ>,
}

/// JSON view of a connection.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConnectionJson {
    pub context: String,
    pub algebra: String,
    pub rank: usize,
    pub gamma: Vec<MatrixQ>,
}

/// `X ⊗ 𝟙` on `k` stacked copies.
fn block_diag(x: &MatrixQ, k: usize) -> MatrixQ {
    let n = x.rows();
    let rows = (0..k * n)
        .map(|r| x.row_sparse(r % n).into_iter().map(|(c, v)| (c + (r / n) * n, v)).collect())
        .collect();
    MatrixQ::from_sparse_rows(k * n, rows).expect("consistent shape").with_auto_storage()
}

/// First `(a, i)` with `[γ_a, L_i] ≠ 0`.
fn endomorphism_witness(module: &ModuleRep, gamma: &[MatrixQ]) -> Option<(usize, usize)> {
    gamma.iter().enumerate().find_map(|(a, g)| {
        module.l.iter().position(|l| !g.commutator(l).expect("square").is_zero()).map(|i| (a, i))
    })
}

impl Connection {
    /// Skips the endomorphism check. Used for negative controls.
    pub fn new_unchecked(ctx: &CalcContext, rank: usize, gamma: Vec<MatrixQ>) -> Result<Self> {
        let module = free_module(&ctx.algebra, rank);
        let m = module.carrier;
        if gamma.len() != ctx.p() {
            return Err(AlbertError::Dimension(format!("{} connection matrices for {} derivations", gamma.len(), ctx.p())));
        }
        if let Some(bad) = gamma.iter().position(|g| g.rows() != m || g.cols() != m) {
            return Err(AlbertError::Dimension(format!("gamma({bad}) is not {m}x{m}")));
        }
        let nabla = gamma.iter().zip(&ctx.g.basis).map(|(g, x)| block_diag(x, rank).add(g).expect("shape")).collect();
        Ok(Self { ctx: ctx.clone(), module, rank, gamma, nabla })
    }

    pub fn to_json(&self) -> ConnectionJson {
        ConnectionJson { context: self.ctx.name.clone(), algebra: self.ctx.algebra.name().to_string(), rank: self.rank, gamma: self.gamma.clone() }
    }

    pub fn carrier(&self) -> usize {
        self.module.carrier
    }

    /// `∇_X` for `X = Σ x_a X_a`.
    pub fn nabla_of(&self, x: &[Rational]) -> MatrixQ {
        let m = self.carrier();
        x.iter().zip(&self.nabla).fold(MatrixQ::zeros(m, m), |acc, (c, n)| acc.lin_comb(&Rational::one(), n, c).expect("shape"))
    }

    /// `[∇_X, ∇_Y] − ∇_{[X,Y]}` for `X = Σ x_a X_a`, `Y = Σ y_b X_b`.
    pub fn curvature_of(&self, x: &[Rational], y: &[Rational]) -> MatrixQ {
        let p = self.ctx.p();
        let mut br = vec![Rational::zero(); p];
        for a in 0..p {
            for b in 0..p {
                let s = &x[a] * &y[b];
                if !s.is_zero() {
                    vec_axpy(&mut br, &s, &self.ctx.g.bracket[a][b]);
                }
            }
        }
        let (nx, ny) = (self.nabla_of(x), self.nabla_of(y));
        nx.commutator(&ny).expect("square").sub(&self.nabla_of(&br)).expect("shape")
    }
}

/// A connection on the free module `J ⊗ ℝᵏ`, rejected unless every `γ(X)`
/// commutes with the module action. Leibniz `[∇_X, L_x] = L_{X(x)}` is then
/// verified on all basis triples.
pub fn make_connection(ctx: &CalcContext, rank: usize, gamma: Vec<MatrixQ>) -> Result<Connection> {
    let c = Connection::new_unchecked(ctx, rank, gamma)?;
    if let Some((a, i)) = endomorphism_witness(&c.module, &c.gamma) {
        return Err(AlbertError::NotEndomorphism(format!("gamma(X_{a}) does not commute with L of basis element {i}")));
    }
    if let Some(w) = leibniz_witness(&c) {
        return Err(AlbertError::Internal(format!("Leibniz rule fails for a module endomorphism: {w}")));
    }
    Ok(c)
}

/// The flat reference connection `∇_X = X ⊗ 𝟙`.
pub fn reference_connection(ctx: &CalcContext, rank: usize) -> Result<Connection> {
    let m = ctx.algebra.dim() * rank;
    make_connection(ctx, rank, vec![MatrixQ::zeros(m, m); ctx.p()])
}

/// `γ(X_a) = s_a·𝟙`
pub fn scalar_connection(ctx: &CalcContext, rank: usize, scalars: &[Rational]) -> Result<Connection> {
    let m = ctx.algebra.dim() * rank;
    make_connection(ctx, rank, scalars.iter().map(|s| MatrixQ::identity(m).scale(s)).collect())
}

/// `γ(X_a) = 𝟙_J ⊗ E_a` for `k × k` matrices `E_a` acting on the copies.
pub fn copy_connection(ctx: &CalcContext, e: &[MatrixQ]) -> Result<Connection> {
    let n = ctx.algebra.dim();
    let k = e.first().map_or(1, MatrixQ::rows);
    let gamma = e.iter().map(|ea| MatrixQ::from_fn(k * n, k * n, |r, c| if r % n == c % n { ea.get(r / n, c / n) } else { Rational::zero() })).collect();
    make_connection(ctx, k, gamma)
}

fn leibniz_witness(c: &Connection) -> Option<String> {
    let n = c.ctx.algebra.dim();
    (0..c.ctx.p()).find_map(|a| {
        (0..n).find_map(|i| {
            let xe = c.ctx.act(a, &c.ctx.algebra.basis(i));
            let lhs = c.nabla[a].commutator(&c.module.l[i]).expect("square");
            (lhs != c.module.op(&xe)).then(|| format!("X_{a}, basis element {i}"))
        })
    })
}

fn unit(p: usize, k: usize) -> Vec<Rational> {
    (0..p).map(|i| if i == k { Rational::one() } else { Rational::zero() }).collect()
}

pub fn curvature(c: &Connection, a: usize, b: usize) -> MatrixQ {
    let p = c.ctx.p();
    c.curvature_of(&unit(p, a), &unit(p, b))
}

/// `(x ⊗ α)(φ ⊗ β) = (xφ) ⊗ (α ∧ β)`
pub fn module_product(c: &Connection, omega: &GForm, phi: &ModuleForm) -> Result<ModuleForm> {
    let deg = omega.degree + phi.degree;
    if deg > c.ctx.cap {
        return Err(AlbertError::DegreeOverflow { degree: deg, cap: c.ctx.cap });
    }
    let mut out = GForm::zero(deg, c.carrier());
    for (ma, x) in &omega.coeffs {
        let lx = c.module.op(x);
        for (mb, f) in &phi.coeffs {
            let s = wedge_sign(*ma, *mb);
            if s != 0 {
                out.accumulate(ma | mb, &signed(s), &lx.mul_vec(f).expect("carrier"));
            }
        }
    }
    Ok(out)
}

/// The covariant differential, extending `∇_X` by the Chevalley–Eilenberg
/// pattern.
pub fn covariant_differential(c: &Connection, phi: &ModuleForm) -> Result<ModuleForm> {
    differential_with(&c.ctx, phi, &|k, v| c.nabla[k].mul_vec(v).expect("carrier"))
}

/// `∇(Φ)(X_{t₀}, …, X_{tₙ})` by the alternating-sum formula.
pub fn covariant_evaluate(c: &Connection, phi: &ModuleForm, tuple: &[usize]) -> VectorQ {
    evaluate_with(&c.ctx, phi, tuple, &|k, v| c.nabla[k].mul_vec(v).expect("carrier"))
}

/// Exact checks: `(covdiff)`, agreement with `(evcov)`, `R` a module
/// endomorphism, antisymmetric and bilinear, `∇² = R` on sections,
/// `(covcurv)` and Bianchi `∇∇² = ∇²∇`.
pub fn verify_connection_laws(c: &Connection, trials: usize, seed: u64) -> Vec<Check> {
    let ctx = &c.ctx;
    let (p, m, cap) = (ctx.p(), c.carrier(), ctx.cap);
    let rng_for = |tag: u64, t: usize| seeded(seed ^ (tag << 40) ^ t as u64);
    let mform = |deg: usize, rng: &mut rand_chacha::ChaCha8Rng| -> ModuleForm {
        let mut f = GForm::zero(deg, m);
        if deg <= p {
            for _ in 0..2 {
                let idx = rand::seq::index::sample(rng, p, deg).into_vec();
                f.add_term(&idx, &rational_vector(rng, m)).expect("fits");
            }
        }
        f
    };
    let nab = |f: &ModuleForm| covariant_differential(c, f);
    let mut out = Vec::new();

    let pairs: Vec<(usize, usize)> = [(0, 0), (0, 1), (1, 0), (1, 1)].into_iter().filter(|(a, b)| a + b < cap).collect();
    let covdiff = first_failure(trials, |t| {
        let mut rng = rng_for(1, t);
        let &(dw, df) = pairs.get(t % pairs.len().max(1))?;
        let w = random_form(ctx, dw, 2, &mut rng);
        let f = mform(df, &mut rng);
        let lhs = nab(&module_product(c, &w, &f).ok()?).ok()?;
        let r1 = module_product(c, &ce_differential(ctx, &w).ok()?, &f).ok()?;
        let r2 = module_product(c, &w, &nab(&f).ok()?).ok()?.scale(&sign_of(dw));
        (lhs != r1.add(&r2)).then(|| format!("trial {t}: degrees ({dw}, {df})"))
    });
    out.push(Check::from_witness("covdiff-leibniz", trials, covdiff));

    let evcov = first_failure(trials, |t| {
        let mut rng = rng_for(2, t);
        let deg = t % cap.max(1);
        if deg + 1 > cap || deg + 1 > p {
            return None;
        }
        let f = mform(deg, &mut rng);
        let tuple = rand::seq::index::sample(&mut rng, p, deg + 1).into_vec();
        (nab(&f).ok()?.evaluate(&tuple) != covariant_evaluate(c, &f, &tuple)).then(|| format!("trial {t}: arguments {tuple:?}"))
    });
    out.push(Check::from_witness("evcov-agreement", trials, evcov));

    let basis_pairs: Vec<(usize, usize)> = (0..p).flat_map(|a| (a + 1..p).map(move |b| (a, b))).collect();
    let curv: Vec<((usize, usize), MatrixQ)> = basis_pairs.iter().map(|&(a, b)| ((a, b), curvature(c, a, b))).collect();
    let endo = curv.iter().find_map(|((a, b), r)| {
        c.module.l.iter().position(|l| !r.commutator(l).expect("square").is_zero()).map(|i| format!("R(X_{a}, X_{b}) vs basis element {i}"))
    });
    out.push(Check::from_witness("curvature-endomorphism", basis_pairs.len(), endo));
    let anti = basis_pairs.iter().find(|&&(a, b)| curvature(c, b, a) != curvature(c, a, b).scale(&-Rational::one())).map(|(a, b)| format!("pair ({a}, {b})"));
    out.push(Check::from_witness("curvature-antisymmetry", basis_pairs.len(), anti));
    let bilinear = first_failure(trials.min(20), |t| {
        let mut rng = rng_for(3, t);
        let (x, y) = (rational_vector(&mut rng, p), rational_vector(&mut rng, p));
        let mut expected = MatrixQ::zeros(m, m);
        for a in 0..p {
            for b in 0..p {
                if a != b {
                    expected = expected.lin_comb(&Rational::one(), &curvature(c, a, b), &(&x[a] * &y[b])).expect("shape");
                }
            }
        }
        (c.curvature_of(&x, &y) != expected).then(|| format!("trial {t}"))
    });
    out.push(Check::from_witness("curvature-bilinear", trials.min(20), bilinear));

    let square = if cap >= 2 {
        first_failure(trials, |t| {
            let mut rng = rng_for(4, t);
            let phi = rational_vector(&mut rng, m);
            let n2 = nab(&nab(&GForm::function(&phi)).ok()?).ok()?;
            curv.iter()
                .find(|((a, b), r)| n2.evaluate(&[*a, *b]) != r.mul_vec(&phi).expect("carrier"))
                .map(|((a, b), _)| format!("trial {t}: pair ({a}, {b})"))
        })
    } else {
        None
    };
    out.push(Check::from_witness("nabla-squared-is-curvature", trials, square));

    let cc_pairs: Vec<(usize, usize)> = [(0, 0), (0, 1), (1, 0), (1, 1)].into_iter().filter(|(a, b)| a + b + 2 <= cap).collect();
    let covcurv = first_failure(trials, |t| {
        let mut rng = rng_for(5, t);
        let &(dw, df) = cc_pairs.get(t % cc_pairs.len().max(1))?;
        let w = random_form(ctx, dw, 2, &mut rng);
        let f = mform(df, &mut rng);
        let lhs = nab(&nab(&module_product(c, &w, &f).ok()?).ok()?).ok()?;
        let rhs = module_product(c, &w, &nab(&nab(&f).ok()?).ok()?).ok()?;
        (lhs != rhs).then(|| format!("trial {t}: degrees ({dw}, {df})"))
    });
    out.push(Check::from_witness("covcurv", trials, covcurv));

    // Σ_cyc [∇_a, R(b, c)] − R([a, b], c) = 0 on basis triples
    let triples: Vec<(usize, usize, usize)> =
        (0..p).flat_map(|a| (a + 1..p).flat_map(move |b| (b + 1..p).map(move |c| (a, b, c)))).take(trials.max(1)).collect();
    let bianchi = triples.iter().find_map(|&(a, b, e)| {
        let term = |x: usize, y: usize, z: usize| {
            let lie = c.curvature_of(&ctx.g.bracket[x][y], &unit(p, z));
            c.nabla[x].commutator(&curvature(c, y, z)).expect("square").sub(&lie).expect("shape")
        };
        let total = term(a, b, e).add(&term(b, e, a)).expect("shape").add(&term(e, a, b)).expect("shape");
        (!total.is_zero()).then(|| format!("triple ({a}, {b}, {e})"))
    });
    out.push(Check::from_witness("bianchi", triples.len(), bianchi));
    out.into_iter().map(|k| k.prefixed(&ctx.name)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivations::{derivation_algebra, DerBasis};
    use crate::exact::matrix::zero_vector;
    use crate::jordan::{make_hermitian, make_jspin};
    use crate::composition::Field;

    fn ctx(a: crate::jordan::AlgebraSC, cap: usize) -> CalcContext {
        let g = derivation_algebra(&a).unwrap();
        CalcContext::new(a.name().to_string(), a, g, cap).unwrap()
    }

    #[test]
    fn reference_is_flat() {
        let c = ctx(make_jspin(3).unwrap(), 3);
        let r = reference_connection(&c, 2).unwrap();
        for a in 0..c.p() {
            for b in 0..c.p() {
                assert!(curvature(&r, a, b).is_zero());
            }
        }
        let checks = verify_connection_laws(&r, 20, 1);
        assert!(checks.iter().all(|k| k.passed), "{checks:#?}");
    }

    #[test]
    fn non_endomorphism_rejected() {
        let c = ctx(make_hermitian(Field::Real, 3).unwrap(), 3);
        let y = c.algebra.basis(3);
        let ly = c.algebra.left_mult(&y);
        let gamma = vec![ly; c.p()];
        assert!(matches!(make_connection(&c, 1, gamma), Err(AlbertError::NotEndomorphism(_))));
    }

    #[test]
    fn corrupted_gamma_breaks_covcurv() {
        let c = ctx(make_hermitian(Field::Real, 3).unwrap(), 3);
        let mut gamma = vec![MatrixQ::zeros(6, 6); c.p()];
        gamma[0] = c.algebra.left_mult(&c.algebra.basis(3));
        let bad = Connection::new_unchecked(&c, 1, gamma).unwrap();
        let checks = verify_connection_laws(&bad, 10, 2);
        let cc = checks.iter().find(|k| k.name.ends_with("covcurv")).unwrap();
        assert!(!cc.passed && cc.witness.is_some());
    }

    #[test]
    fn constant_pair_on_reals() {
        let r = make_hermitian(Field::Real, 1).unwrap();
        let zero = MatrixQ::zeros(1, 1);
        let g = DerBasis { algebra: "R".into(), n: 1, basis: vec![zero.clone(), zero], bracket: vec![vec![zero_vector(2); 2]; 2] };
        let c = CalcContext::new("R/abelian", r, g, 2).unwrap();
        let a = MatrixQ::from_rows(vec![vec![Rational::zero(), Rational::one()], vec![Rational::zero(), Rational::zero()]]).unwrap();
        let b = MatrixQ::from_rows(vec![vec![Rational::zero(), Rational::zero()], vec![Rational::one(), Rational::zero()]]).unwrap();
        let conn = copy_connection(&c, &[a.clone(), b.clone()]).unwrap();
        assert_eq!(curvature(&conn, 0, 1), a.commutator(&b).unwrap());
        assert!(verify_connection_laws(&conn, 10, 3).iter().all(|k| k.passed));
    }

    #[test]
    fn scalar_connection_curvature() {
        let c = ctx(make_hermitian(Field::Complex, 3).unwrap(), 3);
        let s: Vec<Rational> = (0..c.p()).map(|k| Rational::new(k as i64 + 1, 2)).collect();
        let conn = scalar_connection(&c, 1, &s).unwrap();
        for a in 0..c.p() {
            for b in 0..c.p() {
                let expected: Rational = (0..c.p()).map(|k| &c.g.bracket[a][b][k] * &s[k]).sum();
                assert_eq!(curvature(&conn, a, b), MatrixQ::identity(9).scale(&-expected));
            }
        }
        assert!(verify_connection_laws(&conn, 15, 4).iter().all(|k| k.passed));
    }
}
