use albert::jordan::albert_algebra;
use albert::modules::{check_module_axioms, extension_check, free_module, module_commutant, pierce_decompose, ModuleRep};
use albert::report::all_passed;

#[test]
fn free_albert_modules_have_square_commutants() {
    let a = albert_algebra();
    for k in 1..=3 {
        assert_eq!(module_commutant(&free_module(&a, k)), k * k, "rank {k}");
    }
}

#[test]
fn two_family_module_is_a_jordan_module() {
    let a = albert_algebra();
    let m = free_module(&a, 2);
    assert_eq!(m.carrier, 54);
    let checks = check_module_axioms(&m, 10, 11);
    assert!(all_passed(&checks), "{checks:#?}");
    assert!(all_passed(&extension_check(&m, 10, 11).unwrap()));
}

#[test]
fn albert_pierce_eigenvalues() {
    let a = albert_algebra();
    let r = ModuleRep::regular(&a);
    for i in 0..3 {
        assert_eq!(pierce_decompose(&r, &a.basis(i)).unwrap().dims(), (10, 16, 1));
    }
    let mut p = a.basis(0);
    p[1] = albert::exact::Rational::one();
    assert_eq!(pierce_decompose(&r, &p).unwrap().dims(), (1, 16, 10));
}
