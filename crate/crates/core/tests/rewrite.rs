mod common;

use proptest::prelude::*;
use qorth_core::freealg::NcPoly;
use qorth_core::ideal::ideal_member;
use qorth_core::parse::parse_poly;
use qorth_core::rewrite::RewriteSystem;
use qorth_core::scalar::Scalar;
use qorth_core::systems::{self, c3, lambda, sl, so2, uq, x_alphabet};
use qorth_core::{slq2, soq3};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn nf(rs: &RewriteSystem, src: &str) -> NcPoly {
    rs.normal_form(&parse_poly(src, rs.alphabet()).unwrap())
}

fn p(rs: &RewriteSystem, src: &str) -> NcPoly {
    parse_poly(src, rs.alphabet()).unwrap()
}

#[test]
fn examples() {
    assert_eq!(nf(c3(), "x2*x1"), p(c3(), "q^-1*x1*x2"));
    for rs in [sl(), c3(), lambda(), uq(), so2()] {
        let one = NcPoly::one(rs.alphabet());
        assert_eq!(rs.normal_form(&one), one);
    }
    assert_eq!(nf(sl(), "a^2*d^2"), nf(sl(), "1 + (s + s^3)*b*c + s^4*b*c*b*c"));
    assert_eq!(nf(sl(), "a^2*d^2"), p(sl(), "1 + (s + s^3)*b*c + s^4*b^2*c^2"));
    assert_eq!(nf(sl(), "a*d - s*b*c"), p(sl(), "1"));
    assert_eq!(nf(sl(), "d*a"), p(sl(), "1 + s^-1*b*c"));
    assert_eq!(nf(uq(), "E*F - F*E"), nf(uq(), "(K - Kinv)/(s - s^-1)"));
    assert_eq!(nf(uq(), "K*Kinv"), p(uq(), "1"));
}

#[test]
fn e_f_squared_matches_the_naive_reducer() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let src = p(uq(), "E*F*F");
    let got = uq().normal_form(&src);
    for _ in 0..20 {
        assert_eq!(common::naive_reduce(uq(), &src, &mut rng), got);
    }
    // F^2 E plus two F-times-Cartan corrections
    let f2e = p(uq(), "F*F*E");
    let rest = got.sub(&f2e);
    assert_eq!(got.coeff(&f2e.terms().keys().next().unwrap().clone()), Scalar::one());
    assert_eq!(rest.len(), 2);
    assert!(rest.terms().keys().all(|w| w.len() == 2 && w.as_slice()[0] == qorth_core::uqdual::F));
}

#[test]
fn built_in_systems_are_confluent() {
    for rs in [sl(), c3(), lambda(), uq(), so2()] {
        let bad = rs.check_confluence(4);
        assert!(bad.is_empty(), "{}: {:?}", rs.name(), bad.iter().map(|c| c.describe(rs.alphabet())).collect::<Vec<_>>());
        assert!(!rs.ambiguities(4).is_empty() || rs.rules().len() < 2);
    }
}

#[test]
fn corrupted_system_is_detected() {
    let broken = c3().with_rule_rhs(2, parse_poly("x1*x3 + x1*x2", x_alphabet()).unwrap()).unwrap();
    assert!(!broken.check_confluence(4).is_empty());
}

#[test]
fn membership() {
    let rels = soq3::presentation(3, false).unwrap();
    // u11 cannot be reached by quadratic relations at degree 3
    let m = ideal_member(&rels, &soq3::u(1, 1), Some(3));
    assert!(!m.member);

    let target = rels[5].clone();
    let m = ideal_member(&rels, &target, Some(3));
    assert!(m.member);
    let cert = m.certificate.as_ref().unwrap();
    assert!(cert.verify(&rels, &target));

    // a real cofactor identity
    let t = soq3::cofactor_target(1, 2);
    let m = ideal_member(&rels, &t, Some(3));
    assert!(m.member);
    assert!(m.certificate.as_ref().unwrap().verify(&rels, &t));
    assert!(soq3::verify_identity(&t, &NcPoly::zero(soq3::alphabet())));
}

#[test]
fn two_by_two_relations_force_vanishing_products() {
    let rels = soq3::presentation(2, false).unwrap();
    let a = rels[0].alphabet().clone();
    for src in ["v11*v12", "v12*v11"] {
        let t = parse_poly(src, &a).unwrap();
        assert!(ideal_member(&rels, &t, Some(2)).member, "{src}");
    }
}

fn check_against_naive(rs: &RewriteSystem, poly: &NcPoly, seed: u64) -> Result<(), TestCaseError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fast = rs.normal_form(poly);
    prop_assert_eq!(common::naive_reduce(rs, poly, &mut rng), fast.clone());
    prop_assert_eq!(rs.normal_form(&fast), fast.clone());
    prop_assert!(fast.terms().keys().all(|w| rs.is_normal(w.as_slice())));
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn sl_agrees_with_naive(p in common::poly(slq2::alphabet(), 3, 5), seed in any::<u64>()) {
        check_against_naive(sl(), &p, seed)?;
    }

    #[test]
    fn c3_agrees_with_naive(p in common::poly(systems::x_alphabet(), 3, 5), seed in any::<u64>()) {
        check_against_naive(c3(), &p, seed)?;
    }

    #[test]
    fn lambda_agrees_with_naive(p in common::poly(systems::e_alphabet(), 3, 5), seed in any::<u64>()) {
        check_against_naive(lambda(), &p, seed)?;
    }

    #[test]
    fn uq_agrees_with_naive(p in common::poly(systems::uq_alphabet(), 3, 4), seed in any::<u64>()) {
        check_against_naive(uq(), &p, seed)?;
    }

    #[test]
    fn product_of_normal_forms(a in common::poly(slq2::alphabet(), 3, 3), b in common::poly(slq2::alphabet(), 3, 3)) {
        let rs = sl();
        prop_assert_eq!(rs.normal_form(&a.mul(&b)), rs.normal_form(&rs.normal_form(&a).mul(&rs.normal_form(&b))));
        prop_assert_eq!(rs.mul(&a, &b), rs.normal_form(&a.mul(&b)));
    }
}
