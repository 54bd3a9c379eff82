//! Spectral resolution `x = Σ λ_r e_r` of a random element of the Albert
//! algebra, with certified eigenvalue intervals.

use albert::jordan::{albert_algebra, spectral_resolution};
use albert::random::{rational_vector, seeded};

fn main() -> albert::Result<()> {
    let a = albert_algebra();
    let x = rational_vector(&mut seeded(5), a.dim());
    let s = spectral_resolution(&a, &x)?;
    println!("minimal polynomial degree {}", s.card());
    for t in &s.terms {
        println!("λ ∈ [{:.12}, {:.12}]  ≈ {:+.12}", t.interval.lo.to_f64(), t.interval.hi.to_f64(), t.eigenvalue);
    }
    let r = &s.residuals;
    println!("reconstruction {:.2e}  idempotency {:.2e}  orthogonality {:.2e}", r.reconstruction, r.idempotency, r.orthogonality);
    println!("Σ e_r = 1 exactly: {}", r.unit_sum_exact);
    Ok(())
}
