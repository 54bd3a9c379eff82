//! `J⁴₂ = H₂(ℍ)` with its `U(1) × SU(2)` action and the stabilizer check.

use albert::exceptional::j42::{j42_algebra, j42_checks};
use albert::jordan::jspin_recognize;

fn main() -> albert::Result<()> {
    let j = j42_algebra();
    println!("{} has dimension {} and is JSpin_{}", j.name(), j.dim(), jspin_recognize(&j).map_or(0, |r| r.n));
    for c in j42_checks()? {
        println!("{:<28} {}", c.name, if c.passed { "ok" } else { "FAILED" });
    }
    Ok(())
}
