//! Derivation algebras from the exact nullspace of the Leibniz system:
//! `g₂` on the octonions, `su(3)` fixing an imaginary unit, and `f₄` on the
//! Albert algebra.

use albert::composition::Field;
use albert::derivations::{derivation_algebra, lie_diagnostics, stabilizer};
use albert::jordan::{albert_algebra, division_algebra, make_hermitian};

fn main() -> albert::Result<()> {
    let o = division_algebra(Field::Octonion);
    let g2 = derivation_algebra(&o)?;
    let su3 = stabilizer(&g2, &[o.basis(1)], &[])?;
    let d = lie_diagnostics(&su3)?;
    println!("Der(O) = {}, stabilizer of e1 = {} (semisimple {}, compact {})", g2.dim(), su3.dim(), d.semisimple, d.compact);
    for field in [Field::Real, Field::Complex, Field::Quaternion] {
        let h = make_hermitian(field, 3)?;
        println!("Der({}) = {}", h.name(), derivation_algebra(&h)?.dim());
    }
    println!("Der(J8_3) = {}", derivation_algebra(&albert_algebra())?.dim());
    Ok(())
}
