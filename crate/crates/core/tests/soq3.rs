mod common;

use proptest::prelude::*;
use qorth_core::freealg::{NcMatrix, NcPoly, Word};
use qorth_core::ideal::ideal_member;
use qorth_core::rewrite::RewriteSystem;
use qorth_core::scalar::{Regime, Scalar};
use qorth_core::systems::{sl, so2};
use qorth_core::{slq2, soq3};

fn u(src: &str) -> NcPoly {
    soq3::poly(src)
}

fn same(lhs: &str, rhs: &str) -> bool {
    soq3::verify_identity(&u(lhs), &u(rhs))
}

#[test]
fn quadratic_relations_are_in_the_ideal() {
    let rels = soq3::presentation(3, false).unwrap();
    for src in ["u31*u11 - q^-2*u11*u31", "u21*u21 + s^-3*(1 + q)*u11*u31"] {
        let t = u(src);
        let m = ideal_member(&rels, &t, Some(2));
        assert!(m.member, "{src}");
        assert!(m.certificate.unwrap().verify(&rels, &t));
        // the covering decides the same identity independently
        assert!(soq3::verify_identity(&t, &NcPoly::zero(soq3::alphabet())), "{src}");
    }
    assert!(!ideal_member(&rels, &u("u31*u11 - u11*u31"), Some(2)).member);
    assert!(!same("u31*u11", "u11*u31"));
}

#[test]
fn determinant() {
    let d = soq3::quantum_determinant();
    assert_eq!(d.len(), 7);
    let top = Word::from_slice(&[soq3::letter(1, 1), soq3::letter(2, 2), soq3::letter(3, 3)]);
    assert!(d.coeff(&top).is_one());
    let mid = Word::from_slice(&[soq3::letter(1, 2), soq3::letter(2, 2), soq3::letter(3, 2)]);
    assert_eq!(d.coeff(&mid), -(&Scalar::q() * &(&Scalar::s_pow(1) - &Scalar::s_pow(-1))));
    assert_eq!(soq3::cover(&d), NcPoly::one(slq2::alphabet()));
    for g in [Regime::QReal, Regime::Unimodular] {
        assert!(soq3::verify_identity(&soq3::star(&d, g), &d));
    }
}

#[test]
fn covering() {
    for r in soq3::presentation(3, false).unwrap() {
        assert!(soq3::cover(&r).is_zero(), "{r}");
    }
    let metric = soq3::metric_relations(3).unwrap();
    assert!(metric.iter().all(|r| soq3::cover(r).is_zero()));
    let u22 = soq3::u(2, 2);
    let lhs = slq2::coproduct(&soq3::cover(&u22));
    let rhs = RewriteSystem::tensor_normal_form(sl(), sl(), &soq3::cover_tensor(&soq3::coproduct(&u22)));
    assert_eq!(lhs, rhs);
    assert!(slq2::counit(&soq3::cover(&soq3::u(1, 1))).is_one());
}

#[test]
fn antipode_inverts_u() {
    let a = soq3::alphabet();
    let m = NcMatrix::from_fn(3, 3, |i, j| soq3::u(i + 1, j + 1));
    let s = soq3::antipode_matrix();
    for prod in [s.mul(&m), m.mul(&s)] {
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { NcPoly::one(a) } else { NcPoly::zero(a) };
                assert!(soq3::verify_identity(prod.get(i, j), &want), "({i},{j})");
            }
        }
    }
}

#[test]
fn listed_identities() {
    assert!(same("s^-1*u12", "-u11*u23 + u13*u21 - (s - s^-1)*u12*u22"));
    // first cofactor row two ways, and the middle cofactor
    for m in 1..=3 {
        let a = soq3::cofactor_expr(m, 1, 2, 3).unwrap();
        let b = soq3::cofactor_expr(m, 1, 3, 2).unwrap();
        assert!(soq3::verify_identity(&a, &b), "m = {m}");
        let mut direct = NcPoly::zero(soq3::alphabet());
        for n in 1..=3 {
            for p in 1..=3 {
                direct.add_scaled(&soq3::u(2, n).mul(&soq3::u(3, p)), &soq3::epsilon().get(m, n, p));
            }
        }
        assert_eq!(a, direct);
    }
    assert!(soq3::verify_identity(&soq3::cofactor_expr(2, 2, 1, 3).unwrap(), &soq3::u(2, 2)));
    // the cofactor matrix is the antipode
    for m in 1..=3 {
        for a in 1..=3 {
            assert!(soq3::verify_identity(&soq3::cofactor_for_row(m, a, a), &soq3::antipode_gen(m, a)), "({m},{a})");
        }
    }
}

#[test]
fn cofactor_products_reach_the_determinant() {
    let rels = soq3::presentation(3, false).unwrap();
    for (d, a) in [(1, 2), (2, 2), (3, 1)] {
        let t = soq3::cofactor_target(d, a);
        let m = ideal_member(&rels, &t, Some(3));
        assert!(m.member, "({d},{a})");
        assert!(m.certificate.unwrap().verify(&rels, &t));
    }
}

#[test]
fn so2_quotient() {
    let z = qorth_core::systems::z_alphabet();
    assert!(soq3::so2_quotient(&soq3::u(1, 2)).is_zero());
    assert_eq!(soq3::so2_quotient(&u("u11*u33")), NcPoly::one(z));
    assert_eq!(soq3::so2_quotient(&soq3::quantum_determinant()), NcPoly::one(z));
    assert_eq!(so2().normal_form(&soq3::so2_quotient(&u("u11*u11*u22"))), NcPoly::named(z, "z").mul(&NcPoly::named(z, "z")));
}

#[test]
fn star() {
    let s12 = soq3::star(&soq3::u(1, 2), Regime::QReal);
    assert_eq!(s12, soq3::u(3, 2).scale(&Scalar::r_pow(2)));
    assert_eq!(soq3::cover(&s12), slq2::star(&soq3::cover(&soq3::u(1, 2)), Regime::QReal));
    assert_eq!(soq3::star(&soq3::u(1, 2), Regime::Unimodular), soq3::u(1, 2));
    // star maps the ideal to itself
    for g in [Regime::QReal, Regime::Unimodular] {
        for r in soq3::presentation(3, true).unwrap() {
            assert!(soq3::cover(&soq3::star(&r, g)).is_zero(), "{g:?} {r}");
        }
    }
}

fn u_poly() -> impl Strategy<Value = NcPoly> {
    common::poly(soq3::alphabet(), 2, 3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cover_is_multiplicative(a in u_poly(), b in u_poly()) {
        prop_assert_eq!(soq3::cover(&a.mul(&b)), slq2::mul(&soq3::cover(&a), &soq3::cover(&b)));
    }

    #[test]
    fn cover_respects_hopf_maps(p in u_poly()) {
        let c = soq3::cover(&p);
        prop_assert_eq!(slq2::counit(&c), soq3::counit(&p));
        prop_assert_eq!(slq2::antipode(&c), soq3::cover(&soq3::antipode(&p)));
        let lhs = slq2::coproduct(&c);
        let rhs = RewriteSystem::tensor_normal_form(sl(), sl(), &soq3::cover_tensor(&soq3::coproduct(&p)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn cover_intertwines_stars(p in u_poly(), g in common::regime()) {
        prop_assert_eq!(soq3::cover(&soq3::star(&p, g)), slq2::star(&soq3::cover(&p), g));
    }
}
