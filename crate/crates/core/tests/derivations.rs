use albert::composition::Field;
use albert::derivations::{derivation_algebra, inner_derivations, verify_derivations};
use albert::jordan::{division_algebra, make_hermitian, make_jspin};
use albert::suites::{derivation_dims, f4, stabilizer_checks};

#[test]
fn dimension_table() {
    let out = derivation_dims().unwrap();
    assert!(out.checks.iter().all(|c| c.passed), "{:#?}", out.checks);
    let t = &out.data;
    for (name, d) in [("O", 14), ("J8_3", 52), ("H3(R)", 3), ("H3(C)", 8), ("H3(H)", 21)] {
        assert_eq!(t[name], d, "{name}");
    }
    for n in 2..=9 {
        assert_eq!(t[format!("JSpin{n}")], n * (n - 1) / 2);
    }
}

#[test]
fn every_derivation_is_inner_for_simple_jordan_algebras() {
    let mut algebras = vec![make_hermitian(Field::Real, 3).unwrap(), make_hermitian(Field::Complex, 3).unwrap(), make_hermitian(Field::Quaternion, 3).unwrap()];
    algebras.extend((3..=6).map(|n| make_jspin(n).unwrap()));
    for a in algebras {
        let der = derivation_algebra(&a).unwrap();
        let inner = inner_derivations(&a).unwrap();
        assert_eq!(der.dim(), inner.dim(), "{}", a.name());
        assert!(verify_derivations(&a, &inner).passed);
    }
    assert_eq!(inner_derivations(&albert::jordan::albert_algebra()).unwrap().dim(), f4().dim());
}

#[test]
fn g2_closes_and_stabilizers_match() {
    let o = division_algebra(Field::Octonion);
    let g2 = derivation_algebra(&o).unwrap();
    assert!(g2.verify_closure().passed);
    assert!(stabilizer_checks().unwrap().iter().all(|c| c.passed));
}
