//! Universal calculus over `M₂(ℂ)`: the contracting homotopy, `m₃`, and the
//! homotopy associativity of the graded Jordan product.

use albert::exact::Rational;
use albert::homotopy::{build_k, homotopy_assoc, m3, univ_calculus, StarAlgebra};
use albert::random::seeded;

fn main() -> albert::Result<()> {
    let omega = vec![Rational::one(), Rational::zero(), Rational::zero(), Rational::zero()];
    let ctx = univ_calculus(StarAlgebra::matrices2(), 3, omega)?;
    println!("dimensions by degree: {:?}", (0..=3).map(|n| ctx.dim(n)).collect::<Vec<_>>());
    println!("cohomology: {:?}", ctx.cohomology());
    let k = build_k(&ctx);
    let mut rng = seeded(4);
    let a = ctx.hermitian_part(&ctx.random_form(0, 3, &mut rng));
    let b = ctx.hermitian_part(&ctx.random_form(0, 3, &mut rng));
    let c = ctx.hermitian_part(&ctx.random_form(1, 3, &mut rng));
    let m = m3(&ctx, &k, &a, &b, &c)?;
    let r = homotopy_assoc(&ctx, &k, &a, &b, &c)?;
    println!("associator vanishes: {}; m3 vanishes: {}", r.associator.is_zero(), m.is_zero());
    println!("assoc = d m3 + K(d assoc): {}; associator closed: {}", r.resolved, r.d_assoc_closed);
    Ok(())
}
