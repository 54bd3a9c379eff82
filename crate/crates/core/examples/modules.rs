//! Jordan modules: free modules, their split-null extensions, the Pierce
//! decomposition of `J⁸₃` and commutants.

use albert::exceptional::AlbertElem;
use albert::jordan::{albert_algebra, make_jspin};
use albert::modules::{check_module_axioms, extension_check, free_module, module_commutant, pierce_decompose};
use albert::report::all_passed;

fn main() -> albert::Result<()> {
    let r = free_module(&make_jspin(2)?, 3);
    println!("JSpin2 ⊗ R³: carrier {}, axioms {}, extension {}", r.carrier, all_passed(&check_module_axioms(&r, 10, 1)), all_passed(&extension_check(&r, 10, 1)?));

    let albert = albert_algebra();
    let s = pierce_decompose(&free_module(&albert, 1), &AlbertElem::e(0).to_coords())?;
    println!("Pierce spaces of E11 for eigenvalues (0, 1/2, 1): {:?}", s.dims());
    for k in 1..=3 {
        println!("commutant of J8_3 ⊗ R^{k}: {}", module_commutant(&free_module(&albert, k)));
    }
    Ok(())
}
