mod common;

use proptest::prelude::*;
use qorth_core::parse::parse_scalar;
use qorth_core::scalar::{Regime, Scalar};

fn sc(s: &str) -> Scalar {
    parse_scalar(s).unwrap()
}

#[test]
fn qint_values() {
    assert!(Scalar::qint(0).is_zero());
    assert!(Scalar::qint(1).is_one());
    assert_eq!(Scalar::qint(2), sc("r^2 + r^-2"));
    for n in 2..=8 {
        assert_eq!(Scalar::qint(n), &(&Scalar::qint(2) * &Scalar::qint(n - 1)) - &Scalar::qint(n - 2), "n = {n}");
    }
    // at q = 1 the q-integer is the integer
    for n in 0..=8 {
        assert_eq!(Scalar::qint(n).eval_at_one(), Some(qorth_core::scalar::Gauss::int(n)));
    }
}

#[test]
fn qint_closed_form() {
    // [n] = (s^n - s^-n)/(s - s^-1), s = r^2
    for n in 1..=8i32 {
        let want = &(&Scalar::s_pow(n) - &Scalar::s_pow(-n)) * &(&Scalar::s_pow(1) - &Scalar::s_pow(-1)).inv();
        assert_eq!(Scalar::qint(n as i64), want);
    }
}

#[test]
fn conjugation_examples() {
    assert_eq!(Scalar::i().conjugate(Regime::QReal), sc("-i"));
    let w = Scalar::w();
    assert_eq!(w.conjugate(Regime::Unimodular).conjugate(Regime::Unimodular), w);
    assert_eq!(w.conjugate(Regime::Unimodular), &w * &Scalar::r_pow(-2));
    assert_eq!(Scalar::r().conjugate(Regime::Unimodular), Scalar::r_pow(-1));
    assert_eq!(Scalar::r().conjugate(Regime::QReal), Scalar::r());
    for n in 0..=8 {
        assert_eq!(Scalar::qint(n).conjugate(Regime::Unimodular), Scalar::qint(n));
        assert_eq!(Scalar::qint(n).conjugate(Regime::QReal), Scalar::qint(n));
    }
    for g in [Regime::QReal, Regime::Unimodular] {
        assert_eq!(Scalar::eta().conjugate(g), Scalar::eta(), "{g:?}");
    }
}

#[test]
fn w_and_eta() {
    let w = Scalar::w();
    assert!((&(&(&w * &w) - &Scalar::one()) - &Scalar::r_pow(4)).is_zero());
    let eta = &w * &Scalar::r_pow(-1);
    assert_eq!(eta, Scalar::eta());
    assert_eq!(&eta * &eta, sc("r^2 + r^-2"));
    assert_eq!(&eta * &eta, Scalar::qint(2));
}

#[test]
fn parse_and_display_round_trip() {
    for s in ["0", "1", "-i", "r^2 + r^-2", "(q - 1)^2/(q + 1)", "w/r", "q - q^-1", "3/4*i*r^-3 + w"] {
        let x = sc(s);
        assert_eq!(sc(&x.to_string()), x, "{s} rendered as {x}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(a in common::scalar(), b in common::scalar(), c in common::scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Scalar::one(), a.clone());
    }

    #[test]
    fn inverses(a in common::scalar()) {
        prop_assume!(!a.is_zero());
        prop_assert!((&a * &a.inv()).is_one());
        prop_assert_eq!(a.inv().inv(), a);
    }

    #[test]
    fn conjugation_is_an_involutive_ring_map(a in common::scalar(), b in common::scalar(), g in common::regime()) {
        prop_assert_eq!(a.conjugate(g).conjugate(g), a.clone());
        prop_assert_eq!((&a * &b).conjugate(g), &a.conjugate(g) * &b.conjugate(g));
        prop_assert_eq!((&a + &b).conjugate(g), &a.conjugate(g) + &b.conjugate(g));
        if !a.is_zero() {
            prop_assert_eq!(a.inv().conjugate(g), a.conjugate(g).inv());
        }
    }

    #[test]
    fn w_relation_holds_inside_products(a in common::scalar()) {
        let w = Scalar::w();
        prop_assert_eq!(&(&a * &w) * &w, &a * &(&Scalar::one() + &Scalar::r_pow(4)));
    }

    #[test]
    fn rendering_round_trips(a in common::scalar()) {
        prop_assert_eq!(sc(&a.to_string()), a);
    }
}
