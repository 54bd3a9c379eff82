//! The Albert algebra as pairs `(H, M)`, the `SU(3) × SU(3)` action on them
//! and the fermion slot tables.

use albert::exceptional::action::{group_automorphism_check, hm_stabilizer, resolve_layout};
use albert::exceptional::{fermion_assign, AlbertElem, Family};
use albert::jordan::albert_algebra;
use albert::random::{rational_vector, seeded};

fn main() -> albert::Result<()> {
    let a = albert_algebra();
    let layout = resolve_layout(&a).expect("exactly one layout gives derivations");
    println!("quark layout: {layout:?}");
    let x = AlbertElem::from_coords(&rational_vector(&mut seeded(2), 27));
    let pair = x.to_pair(layout);
    println!("round trip exact: {}", AlbertElem::from_pair(&pair, layout) == x);
    println!("stabilizer of the (H, M) split: dim {}", hm_stabilizer(&a)?.dim());
    let g = group_automorphism_check(&a, layout, 20, 4, 1e-8);
    println!("group action residual {:.1e}", g.residual.unwrap_or(f64::NAN));
    for slot in fermion_assign(Family::Up) {
        println!("{:>3}  {:<10} {:?}", slot.label, slot.location, slot.coordinates);
    }
    Ok(())
}
