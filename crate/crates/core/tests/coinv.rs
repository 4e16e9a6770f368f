mod common;

use proptest::prelude::*;
use qorth_core::coinv;
use qorth_core::freealg::{NcPoly, Tensor2, Word};
use qorth_core::scalar::{Regime, Scalar};
use qorth_core::systems::{c3, z_alphabet};
use qorth_core::{slq2, soq3, uqdual};

fn u(src: &str) -> NcPoly {
    soq3::poly(src)
}

fn same(lhs: &str, rhs: &str) -> bool {
    soq3::verify_identity(&u(lhs), &u(rhs))
}

#[test]
fn coaction() {
    let z = z_alphabet();
    assert_eq!(coinv::coaction(&soq3::u(1, 1)), Tensor2::pure(&soq3::u(1, 1), &NcPoly::named(z, "z")));
    assert_eq!(coinv::coaction(&soq3::u(2, 2)), Tensor2::pure(&soq3::u(2, 2), &NcPoly::one(z)));
    assert_eq!(coinv::coaction(&u("u13*u21")), Tensor2::pure(&u("u13*u21"), &NcPoly::one(z)));
    assert!(coinv::is_coinvariant(&u("u13*u21")));
    assert!(!coinv::is_coinvariant(&u("u13*u22")));
}

#[test]
fn coinvariant_table() {
    assert!(same("u23*u21", "y3*y1"));
    assert!(same("u33*u11", "(1 + q)^-1*(q + y2 - s^-1*y3*y1)"));
    assert!(same("u13*u31", "(1 + q)^-1*(1 - y2 - s^-1*y1*y3)"));
    assert!(same("u31*u13", "u13*u31"));
    assert!(same("u11*u13", "q^2*u13*u11"));
    assert!(same("u31*u33", "q^2*u33*u31"));
    assert!(!same("u33*u11", "u11*u33"));
    for (l, r) in coinv::section("coinvariants") {
        assert!(same(l, r), "{l} = {r}");
        assert!(coinv::is_coinvariant(&u(l)) && coinv::is_coinvariant(&u(r)));
    }
}

#[test]
fn relations_of_b() {
    assert!(same("y3*(y2 - 1)", "q^-1*(y2 - 1)*y3"));
    assert!(same("(s + s^-1)*y1*y3", "(1 - y2)*(1 + q*y2)"));
    assert!(same("s^-1*y1*y3 + s*y3*y1 + y2^2", "1"));
    let quadric = u("s^-1*y1*y3 + s*y3*y1 + y2^2 - 1");
    assert!(slq2::counit(&soq3::cover(&quadric)).is_zero());
    for (l, r) in coinv::section("b-relations") {
        assert!(same(l, r), "{l} = {r}");
    }
}

#[test]
fn quantum_vector_space() {
    let rs = c3();
    let r = coinv::central_r();
    for k in 1..=3 {
        let x = coinv::x_gen(k);
        assert!(rs.mul(&r, &x).sub(&rs.mul(&x, &r)).is_zero(), "x{k}");
    }
    let rel = coinv::xpoly("x2*x1 - q^-1*x1*x2");
    assert!(coinv::reduce_x_tensor(&coinv::x_coaction(&rel)).is_zero());
    // a non-relation does not map to zero
    assert!(!coinv::reduce_x_tensor(&coinv::x_coaction(&coinv::xpoly("x2*x1 - x1*x2"))).is_zero());
    assert_eq!(coinv::x_star(&r, Regime::QReal), rs.normal_form(&r));
}

#[test]
fn cartesian_sphere() {
    let (ab, g2) = coinv::sphere_constants();
    let [p0, pa, pb] = coinv::mu_sum(&coinv::x_gen(1), &coinv::x_gen(3), &Scalar::one(), &ab);
    let total = p0.add(&coinv::x_gen(2).mul(&coinv::x_gen(2)).scale(&g2));
    assert!(c3().normal_form(&total.sub(&coinv::central_r())).is_zero());
    assert!(pa.is_zero() && pb.is_zero());

    let q = Scalar::q();
    let den = (&Scalar::one() + &Scalar::q_pow(2)).inv();
    let lin = &(&(&Scalar::one() - &q) * &(&Scalar::one() - &q)) * &den;
    let cst = &(&Scalar::int(2) * &q) * &den;
    assert!(lin.eval_at_one().unwrap().is_zero());
    assert!(cst.eval_at_one().unwrap().is_one());
    let [b0, _, _] = coinv::mu_sum(&u("y1"), &u("y3"), &Scalar::int(-1), &coinv::b_alpha_beta());
    let y2 = u("y2");
    let lhs = b0.add(&y2.mul(&y2)).sub(&y2.scale(&lin)).sub(&NcPoly::scalar(soq3::alphabet(), cst));
    assert!(soq3::cover(&lhs).is_zero());
}

fn monomial() -> impl Strategy<Value = Word> {
    prop::collection::vec(0u8..9, 0..6).prop_map(|v| Word::from_slice(&v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    /// K acts on the left through the column weight: K |> m = q^{-weight} m.
    #[test]
    fn weight_matches_the_k_action(w in monomial()) {
        let m = NcPoly::word(soq3::alphabet(), w.clone());
        let k = uqdual::gen("K");
        let wt = coinv::word_weight(&w);
        let got = uqdual::left_action(&k, &m);
        prop_assert_eq!(got.clone(), m.scale(&Scalar::q_pow(-wt as i32)));
        prop_assert_eq!(got == m, wt == 0);
        prop_assert_eq!(coinv::is_coinvariant(&m), wt == 0);
    }

    #[test]
    fn coinvariants_have_trivial_coaction(p in common::poly(soq3::alphabet(), 3, 4)) {
        let trivial = coinv::coaction(&p).terms().keys().all(|(_, z)| z.is_empty());
        prop_assert_eq!(trivial, coinv::is_coinvariant(&p));
    }

    #[test]
    fn products_of_coinvariants_are_coinvariant(a in monomial(), b in monomial()) {
        let (wa, wb) = (coinv::word_weight(&a), coinv::word_weight(&b));
        prop_assert_eq!(coinv::word_weight(&a.concat(b.as_slice())), wa + wb);
    }
}
