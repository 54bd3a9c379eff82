//! A curved connection on `J⁸₃ ⊗ ℝ²`, its curvature, and the connection laws.

use albert::connections::{copy_connection, curvature, verify_connection_laws};
use albert::exact::{MatrixQ, Rational};
use albert::forms::CalcContext;
use albert::jordan::albert_algebra;
use albert::suites::albert_su3;

fn main() -> albert::Result<()> {
    let ctx = CalcContext::new("J8_3/su3", albert_algebra(), albert_su3()?, 3)?;
    let q = |n: i64| Rational::from_int(n);
    // γ(X_a) acts on the two copies only, so it commutes with the module action
    let e: Vec<MatrixQ> = (0..ctx.p() as i64).map(|k| MatrixQ::from_rows(vec![vec![q(k), q(1)], vec![q(-1), q(0)]])).collect::<Result<_, _>>()?;
    let c = copy_connection(&ctx, &e)?;
    let r = curvature(&c, 0, 1);
    println!("R(X0, X1) is zero: {}", r.is_zero());
    for k in verify_connection_laws(&c, 20, 1) {
        println!("{:<40} {}", k.name, if k.passed { "ok" } else { "FAILED" });
    }
    Ok(())
}
