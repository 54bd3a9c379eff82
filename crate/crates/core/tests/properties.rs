use proptest::prelude::*;

use albert::composition::{canonical_charge_conj, Octonion};
use albert::exact::{GaussianRational, MatrixQ, Rational};
use albert::forms::{ce_differential, gproduct, wedge_sign, CalcContext, GForm};
use albert::homotopy::{univ_calculus, StarAlgebra, UnivForm};
use albert::jordan::{make_jspin, spectral_resolution};

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..12).prop_map(|(n, d)| Rational::new(n, d))
}

fn vector(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rational(), n)
}

fn octonion() -> impl Strategy<Value = Octonion> {
    vector(8).prop_map(|c| Octonion::from_coords(&c))
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (rational(), rational()).prop_map(|(a, b)| GaussianRational::new(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
        }
    }

    #[test]
    fn gaussian_norm_is_multiplicative(a in gaussian(), b in gaussian()) {
        prop_assert_eq!((&a * &b).norm_sqr(), &a.norm_sqr() * &b.norm_sqr());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn octonion_composition_and_moufang(a in octonion(), b in octonion(), c in octonion()) {
        prop_assert_eq!(a.mul(&b).norm_sqr(), &a.norm_sqr() * &b.norm_sqr());
        prop_assert!(Octonion::associator(&a, &b, &b).is_zero());
        // (ab)(ca) = a(bc)a
        let lhs = a.mul(&b).mul(&c.mul(&a));
        let rhs = a.mul(&b.mul(&c)).mul(&a);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn charge_conjugation_is_an_involutive_automorphism(a in octonion(), b in octonion()) {
        let c = canonical_charge_conj;
        prop_assert_eq!(c(&a.mul(&b)), c(&a).mul(&c(&b)));
        prop_assert_eq!(c(&c(&a)), a);
    }

    #[test]
    fn rank_is_transpose_invariant(rows in prop::collection::vec(vector(5), 1..6)) {
        let m = MatrixQ::from_rows(rows).unwrap();
        prop_assert_eq!(m.rank(), m.transpose().rank());
        for v in m.nullspace() {
            prop_assert!(m.mul_vec(&v).unwrap().iter().all(Rational::is_zero));
        }
        prop_assert_eq!(m.rank() + m.nullspace().len(), m.cols());
    }

    #[test]
    fn wedge_sign_is_graded_antisymmetric(a in 0u64..256, b in 0u64..256) {
        let s = wedge_sign(a, b);
        if a & b != 0 {
            prop_assert_eq!(s, 0);
        } else {
            let flip = if (a.count_ones() * b.count_ones()) % 2 == 0 { 1 } else { -1 };
            prop_assert_eq!(wedge_sign(b, a), s * flip);
        }
    }

    #[test]
    fn spin_factor_eigenvalues(r in -5i64..5, v in prop::collection::vec(-4i64..4, 3)) {
        // x = r𝟙 ⊕ v has eigenvalues r ± |v|, so (x − r)² = |v|² 𝟙
        let a = make_jspin(3).unwrap();
        let mut x = vec![Rational::from_int(r)];
        x.extend(v.iter().map(|&c| Rational::from_int(c)));
        let s = spectral_resolution(&a, &x).unwrap();
        let norm2: i64 = v.iter().map(|c| c * c).sum();
        prop_assert_eq!(s.card(), if norm2 == 0 { 1 } else { 2 });
        for t in &s.terms {
            prop_assert!(((t.eigenvalue - r as f64).powi(2) - norm2 as f64).abs() < 1e-8);
        }
    }
}

fn h3r_context() -> CalcContext {
    let a = albert::jordan::make_hermitian(albert::composition::Field::Real, 3).unwrap();
    let g = albert::derivations::derivation_algebra(&a).unwrap();
    CalcContext::new("H3(R)/so3", a, g, 3).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn exterior_differential_squares_to_zero(x in vector(6), y in vector(6), k in 0usize..3) {
        let ctx = h3r_context();
        let w = GForm::monomial(&x, &[k]).unwrap().add(&GForm::monomial(&y, &[(k + 1) % 3]).unwrap());
        let dd = ce_differential(&ctx, &ce_differential(&ctx, &w).unwrap()).unwrap();
        prop_assert!(dd.is_zero());
        let f = GForm::function(&y);
        let lhs = ce_differential(&ctx, &gproduct(&ctx, &f, &w).unwrap()).unwrap();
        let rhs = gproduct(&ctx, &ce_differential(&ctx, &f).unwrap(), &w).unwrap().add(&gproduct(&ctx, &f, &ce_differential(&ctx, &w).unwrap()).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn universal_star_is_an_antilinear_involution(cs in prop::collection::vec(gaussian(), 12), z in gaussian()) {
        let ctx = univ_calculus(StarAlgebra::matrices2(), 3, vec![Rational::one(), Rational::zero(), Rational::zero(), Rational::zero()]).unwrap();
        let w = UnivForm { degree: 1, coeffs: cs };
        prop_assert_eq!(ctx.star(&ctx.star(&w)), w.clone());
        prop_assert_eq!(ctx.star(&w.scale(&z)), ctx.star(&w).scale(&z.conj()));
        prop_assert_eq!(ctx.star(&ctx.differential(&w)), ctx.differential(&ctx.star(&w)));
    }
}
