//! Octonions as `ℂ ⊕ ℂ³`: products, norms, a nonassociative triple and the
//! two candidate charge conjugations.

use albert::composition::{automorphism_table, canonical_charge_conj, Octonion};
use albert::random::{octonion, seeded};

fn main() {
    let (e1, e2, e4) = (Octonion::basis(1), Octonion::basis(2), Octonion::basis(4));
    println!("e1 e2 = {:?}", e1.mul(&e2).to_coords());
    let left = e1.mul(&e2).mul(&e4);
    let right = e1.mul(&e2.mul(&e4));
    println!("(e1 e2) e4 = {:?}", left.to_coords());
    println!("e1 (e2 e4) = {:?}", right.to_coords());

    let mut rng = seeded(1);
    let (a, b) = (octonion(&mut rng), octonion(&mut rng));
    println!("N(ab) = {}  N(a)N(b) = {}", a.mul(&b).norm_sqr(), &a.norm_sqr() * &b.norm_sqr());
    println!("alternative: {}", Octonion::associator(&a, &a, &b).is_zero());

    for row in automorphism_table() {
        println!("{:>14}: automorphism = {:<5} failing pairs = {}", row.variant.name(), row.passes, row.failures.len());
    }
    let c = canonical_charge_conj(&a);
    println!("C(C(a)) = a: {}", canonical_charge_conj(&c) == a);
}
