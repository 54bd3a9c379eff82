//! The derivation-based calculus `J ⊗ Λ Der(J)*` with the Chevalley–Eilenberg
//! differential over the `su(3)` inside `Der(J⁸₃)`.

use albert::forms::{ce_differential, gproduct, verify_dga, CalcContext, GForm};
use albert::jordan::albert_algebra;
use albert::suites::albert_su3;

fn main() -> albert::Result<()> {
    let a = albert_algebra();
    let ctx = CalcContext::new("J8_3/su3", a.clone(), albert_su3()?, 3)?;
    println!("{} derivations, degree cap {}", ctx.p(), ctx.cap);

    let x = GForm::function(&a.basis(13));
    let dx = ce_differential(&ctx, &x)?;
    println!("d(e13) has {} terms; d(d(e13)) = 0: {}", dx.coeffs.len(), ce_differential(&ctx, &dx)?.is_zero());
    let theta = GForm::monomial(&a.basis(0), &[2])?;
    println!("e13 · θ² has degree {}", gproduct(&ctx, &x, &theta)?.degree);

    for c in verify_dga(&ctx, 50, 3) {
        println!("{:<40} {}", c.name, if c.passed { "ok" } else { "FAILED" });
    }
    Ok(())
}
