use albert::exact::Rational;
use albert::homotopy::{build_k, homotopy_checks, univ_calculus, StarAlgebra};
use albert::report::all_passed;

#[test]
fn universal_calculi_are_homotopy_associative() {
    let cases = [
        (StarAlgebra::complex_pair(), vec![Rational::one(), Rational::one()]),
        (StarAlgebra::matrices2(), vec![Rational::one(), Rational::zero(), Rational::zero(), Rational::zero()]),
    ];
    for (a, omega) in cases {
        let ctx = univ_calculus(a, 3, omega).unwrap();
        let k = build_k(&ctx);
        let checks = homotopy_checks(&ctx, &k, 50, 17);
        assert!(all_passed(&checks), "{checks:#?}");
    }
}
