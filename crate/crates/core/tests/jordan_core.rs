use albert::composition::Field;
use albert::exact::{PolyQ, Rational};
use albert::jordan::construct::{non_power_associative_example, random_unital_algebra};
use albert::jordan::verify::verify_commutative;
use albert::jordan::*;
use albert::report::all_passed;

fn classification_list() -> Vec<AlgebraSC> {
    let mut out = vec![make_hermitian(Field::Real, 1).unwrap()];
    for field in [Field::Real, Field::Complex, Field::Quaternion] {
        for n in 2..=4 {
            out.push(make_hermitian(field, n).unwrap());
        }
    }
    out.push(albert_algebra());
    for n in [2, 3, 5, 9] {
        out.push(make_jspin(n).unwrap());
    }
    out
}

#[test]
fn classification_constructors_are_euclidean_jordan() {
    for a in classification_list() {
        let checks = verify_jordan(&a, 5, 11);
        assert!(all_passed(&checks), "{}: {checks:?}", a.name());
        let pa = verify_power_assoc(&a, 6, 3, 12);
        assert!(pa.passed, "{}: {pa:?}", a.name());
        assert!(euclidean_check(&a).unwrap(), "{}", a.name());
    }
}

#[test]
fn negative_controls() {
    let oct = division_algebra(Field::Octonion);
    assert!(!verify_commutative(&oct).passed);
    assert!(!all_passed(&verify_jordan(&oct, 3, 1)));

    let j = random_unital_algebra(4, 5).jordanize().unwrap();
    let checks = verify_jordan(&j, 5, 2);
    let lin = checks.iter().find(|c| c.name == "jordan-linearized").unwrap();
    assert!(!lin.passed && lin.witness.is_some());

    let npa = non_power_associative_example();
    let a = npa.basis(1);
    assert!(albert::jordan::verify::power_assoc_witness(&npa, &a, 4).is_some());

    let hyperbolic = make_spin_factor(&[Rational::one(), -Rational::one()]).unwrap();
    assert!(!euclidean_check(&hyperbolic).unwrap());
}

#[test]
fn capacities() {
    assert_eq!(capacity_estimate(&make_hermitian(Field::Real, 1).unwrap(), 5, 1).unwrap(), 1);
    assert_eq!(capacity_estimate(&make_jspin(5).unwrap(), 5, 1).unwrap(), 2);
    assert_eq!(capacity_estimate(&albert_algebra(), 5, 1).unwrap(), 3);
    assert_eq!(capacity_estimate(&make_hermitian(Field::Quaternion, 4).unwrap(), 5, 1).unwrap(), 4);
}

#[test]
fn albert_spectral_resolution() {
    let a = albert_algebra();
    let mut rng = albert::random::seeded(99);
    for _ in 0..5 {
        let x = albert::random::rational_vector(&mut rng, 27);
        let s = spectral_resolution(&a, &x).unwrap();
        assert_eq!(s.card(), 3);
        assert!(s.residuals.unit_sum_exact);
        assert!(s.max_residual() <= 1e-9, "{:?}", s.residuals);
    }
    let p = poly_calculus(&a, &PolyQ::from_ints(&[0, 1]), &a.basis(5)).unwrap();
    assert!(p.residual < 1e-9);
}
