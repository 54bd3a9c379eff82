use albert::derivations::{derivation_algebra, stabilizer};
use albert::exceptional::albert::hm_split;
use albert::forms::{inclusion_coordinates, restriction_check, universal_factorization, verify_dga, CalcContext};
use albert::jordan::albert_algebra;
use albert::report::all_passed;

#[test]
fn albert_colour_calculus() {
    let a = albert_algebra();
    let f4 = derivation_algebra(&a).unwrap();
    let (h, _) = hm_split();
    let su3 = stabilizer(&f4, &h, &[]).unwrap();
    assert_eq!(su3.dim(), 8);
    let ctx = CalcContext::new("J8_3/su3", a.clone(), su3.clone(), 3).unwrap();
    let checks = verify_dga(&ctx, 200, 7);
    assert!(all_passed(&checks), "{checks:#?}");

    let big = CalcContext::new("J8_3/f4", a.clone(), f4.clone(), 2).unwrap();
    let small = CalcContext::new("J8_3/su3", a.clone(), su3.clone(), 2).unwrap();
    let inc = inclusion_coordinates(&f4, &su3).unwrap();
    assert!(restriction_check(&big, &small, &inc, 20, 3).passed);

    let fac = universal_factorization(&a, &f4, &su3.basis).unwrap();
    assert!(fac.check.passed);
}
