//! Exact checks of the Jordan identity and power associativity.

use rayon::prelude::*;

use super::algebra::AlgebraSC;
use crate::exact::matrix::{is_zero_vector, to_dense};
use crate::exact::{Rational, VectorQ};
use crate::random::{rational_vector, seeded};
use crate::report::Check;

/// Default dimension up to which the linearized identity is checked on every
/// basis triple.
pub const DEFAULT_EXHAUSTIVE_DIM: usize = 64;

pub fn verify_commutative(a: &AlgebraSC) -> Check {
    let n = a.dim();
    let witness = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .find(|&(i, j)| a.basis_product(i, j) != a.basis_product(j, i))
        .map(|(i, j)| format!("e{i}·e{j} ≠ e{j}·e{i}"));
    Check::from_witness("commutative", n * n.saturating_sub(1) / 2, witness)
}

/// Jordan identity: commutativity, the fully linearized identity on basis
/// triples (when `dim ≤ DEFAULT_EXHAUSTIVE_DIM`) and `(x²y)x = x²(yx)` on
/// `trials` random rational elements.
pub fn verify_jordan(a: &AlgebraSC, trials: usize, seed: u64) -> Vec<Check> {
    verify_jordan_with(a, trials, seed, DEFAULT_EXHAUSTIVE_DIM)
}

pub fn verify_jordan_with(a: &AlgebraSC, trials: usize, seed: u64, exhaustive_dim: usize) -> Vec<Check> {
    let comm = verify_commutative(a);
    let lin = if !comm.passed {
        Check::fail("jordan-linearized", 0, "linearized form presumes a commutative product")
    } else if a.dim() <= exhaustive_dim {
        linearized_jordan(a)
    } else {
        Check::pass("jordan-linearized", 0).with_note(format!("skipped: dim {} above {exhaustive_dim}", a.dim()))
    };
    vec![comm, lin, random_jordan(a, trials, seed)]
}

/// With a commutative product, `((ab)y)c − (ab)(yc)` is `[L_c, L_{ab}]y`, so
/// the symmetrized identity over `a, b, c` reads
/// `[L_c, L_{ab}] + [L_a, L_{bc}] + [L_b, L_{ca}] = 0`, which is symmetric
/// in `a, b, c`; only `a ≤ b ≤ c` is examined.
pub fn linearized_jordan(a: &AlgebraSC) -> Check {
    let n = a.dim();
    let ls = a.basis_left_mults();
    let lp = |i: usize, j: usize| a.left_mult(&to_dense(a.basis_product(i, j), n));
    let triples: Vec<(usize, usize, usize)> =
        (0..n).flat_map(|i| (i..n).flat_map(move |j| (j..n).map(move |k| (i, j, k)))).collect();
    let cases = triples.len();
    let witness = triples
        .par_iter()
        .find_first(|&&(i, j, k)| {
            let t1 = ls[k].commutator(&lp(i, j)).expect("square");
            let t2 = ls[i].commutator(&lp(j, k)).expect("square");
            let t3 = ls[j].commutator(&lp(k, i)).expect("square");
            !t1.add(&t2).and_then(|s| s.add(&t3)).expect("square").is_zero()
        })
        .map(|&(i, j, k)| {
            let t = ls[k]
                .commutator(&lp(i, j))
                .and_then(|s| s.add(&ls[i].commutator(&lp(j, k))?))
                .and_then(|s| s.add(&ls[j].commutator(&lp(k, i))?))
                .expect("square");
            let y = (0..n).find(|&c| !is_zero_vector(&t.column(c))).unwrap_or(0);
            format!("basis triple (e{i}, e{j}, e{k}) with y = e{y}")
        });
    Check::from_witness("jordan-linearized", cases, witness)
}

/// `(x²y)x = x²(yx)` on random rational `x, y`.
pub fn random_jordan(a: &AlgebraSC, trials: usize, seed: u64) -> Check {
    let mut rng = seeded(seed);
    let n = a.dim();
    for t in 0..trials {
        let x = rational_vector(&mut rng, n);
        let y = rational_vector(&mut rng, n);
        let x2 = a.mul(&x, &x);
        let lhs = a.mul(&a.mul(&x2, &y), &x);
        let rhs = a.mul(&x2, &a.mul(&y, &x));
        if lhs != rhs {
            return Check::fail("jordan-random", t + 1, format!("sample {t} (seed {seed}): x = {}", fmt_vec(&x)));
        }
    }
    Check::pass("jordan-random", trials)
}

/// `x^r·x^s = x^{r+s}` for `r + s ≤ max_pow` on random rational elements.
pub fn verify_power_assoc(a: &AlgebraSC, max_pow: usize, trials: usize, seed: u64) -> Check {
    let Some(_) = a.unit() else {
        return Check::fail("power-associative", 0, "algebra has no unit, x⁰ is undefined");
    };
    let mut rng = seeded(seed);
    let n = a.dim();
    let mut cases = 0;
    for t in 0..trials {
        let x = rational_vector(&mut rng, n);
        if let Some(w) = power_assoc_witness(a, &x, max_pow) {
            return Check::fail("power-associative", cases + 1, format!("sample {t} (seed {seed}): {w}"));
        }
        cases += 1;
    }
    Check::pass("power-associative", cases)
}

/// First `(r, s)` with `x^r·x^s ≠ x^{r+s}`.
pub fn power_assoc_witness(a: &AlgebraSC, x: &[Rational], max_pow: usize) -> Option<String> {
    let powers: Vec<VectorQ> = (0..=max_pow).map(|k| a.pow(x, k).expect("unital")).collect();
    for total in 0..=max_pow {
        for r in 0..=total {
            let s = total - r;
            if a.mul(&powers[r], &powers[s]) != powers[total] {
                return Some(format!("x^{r}·x^{s} ≠ x^{total} for x = {}", fmt_vec(x)));
            }
        }
    }
    None
}

/// `max |(x²y)x − x²(yx)|` over floating samples.
pub fn jordan_residual_f64(a: &AlgebraSC, samples: &[(Vec<f64>, Vec<f64>)]) -> f64 {
    samples
        .iter()
        .map(|(x, y)| {
            let x2 = a.mul_f64(x, x);
            let l = a.mul_f64(&a.mul_f64(&x2, y), x);
            let r = a.mul_f64(&x2, &a.mul_f64(y, x));
            l.iter().zip(&r).map(|(p, q)| (p - q).abs()).fold(0.0, f64::max)
        })
        .fold(0.0, f64::max)
}

pub(crate) fn fmt_vec(v: &[Rational]) -> String {
    format!("[{}]", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
}
