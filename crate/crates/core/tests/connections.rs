use albert::connections::{copy_connection, curvature, make_connection, reference_connection, verify_connection_laws, Connection};
use albert::derivations::{derivation_algebra, stabilizer};
use albert::exact::{MatrixQ, Rational};
use albert::exceptional::albert::hm_split;
use albert::forms::CalcContext;
use albert::jordan::albert_algebra;
use albert::report::all_passed;

fn su3_context(cap: usize) -> CalcContext {
    let a = albert_algebra();
    let f4 = derivation_algebra(&a).unwrap();
    let su3 = stabilizer(&f4, &hm_split().0, &[]).unwrap();
    CalcContext::new("J8_3/su3", a, su3, cap).unwrap()
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

#[test]
fn albert_rank_two_connection() {
    let ctx = su3_context(3);
    // γ(X_a) = 𝟙 ⊗ E_a with non-commuting 2×2 blocks, so R picks up [E_a, E_b]
    let e: Vec<MatrixQ> = (0..ctx.p())
        .map(|a| {
            let k = a as i64;
            MatrixQ::from_rows(vec![vec![q(k, 3), q(1, k + 1)], vec![q(-k, 2), q(2 - k, 5)]]).unwrap()
        })
        .collect();
    let c = copy_connection(&ctx, &e).unwrap();
    let checks = verify_connection_laws(&c, 100, 11);
    assert!(all_passed(&checks), "{checks:#?}");
    assert!(!curvature(&c, 0, 1).is_zero());

    let flat = reference_connection(&ctx, 2).unwrap();
    assert!((0..ctx.p()).all(|a| (0..ctx.p()).all(|b| curvature(&flat, a, b).is_zero())));
}

#[test]
fn difference_of_connections_is_endomorphism() {
    let ctx = su3_context(2);
    let m = 54;
    let s = |t: i64| MatrixQ::identity(m).scale(&q(t, 7));
    let c1 = make_connection(&ctx, 2, (0..ctx.p() as i64).map(s).collect()).unwrap();
    let c2 = reference_connection(&ctx, 2).unwrap();
    let l = &c1.module.l;
    for (n1, n2) in c1.nabla.iter().zip(&c2.nabla) {
        let d = n1.sub(n2).unwrap();
        assert!(l.iter().all(|li| d.commutator(li).unwrap().is_zero()));
    }
}

#[test]
fn corrupted_albert_connection_fails() {
    let ctx = su3_context(3);
    let mut gamma = vec![MatrixQ::zeros(27, 27); ctx.p()];
    gamma[2] = ctx.algebra.left_mult(&ctx.algebra.basis(5));
    let bad = Connection::new_unchecked(&ctx, 1, gamma).unwrap();
    let checks = verify_connection_laws(&bad, 10, 5);
    assert!(checks.iter().any(|k| !k.passed));
}
