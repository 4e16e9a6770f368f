mod common;

use proptest::prelude::*;
use qorth_core::freealg::{AlgebraError, Alphabet, NcMatrix, NcPoly, Word};
use qorth_core::parse::parse_poly;
use qorth_core::scalar::{Regime, Scalar};
use qorth_core::{bundles, soq3, systems};

fn x(src: &str) -> NcPoly {
    parse_poly(src, systems::x_alphabet()).unwrap()
}

#[test]
fn products() {
    let p = x("x1").mul(&x("x2"));
    assert_eq!(p.len(), 1);
    assert!(p.coeff(&Word::from_slice(&[0, 1])).is_one());
    assert_eq!(x("1 + x1").mul(&x("1 - x1")), x("1 - x1*x1"));

    let lam = &Scalar::r_pow(4) - &Scalar::r_pow(-4);
    let p = soq3::u(1, 2).scale(&lam).mul(&soq3::u(2, 1));
    assert_eq!(p.coeff(&Word::from_slice(&[soq3::letter(1, 2), soq3::letter(2, 1)])), lam);
    assert_eq!(p.degree(), 2);
}

#[test]
fn mixing_alphabets_is_an_error() {
    let a = x("x1");
    let b = soq3::u(1, 1);
    assert!(matches!(a.try_mul(&b), Err(AlgebraError::AlphabetMismatch { .. })));
    assert!(a.try_add(&b).is_err());
}

#[test]
fn star_on_u12() {
    assert_eq!(soq3::star(&soq3::u(1, 2), Regime::QReal), soq3::u(3, 2).scale(&Scalar::r_pow(2)));
    assert_eq!(soq3::star(&soq3::u(1, 2), Regime::Unimodular), soq3::u(1, 2));
    // antilinear: i u12 -> -i (u12)^*
    let p = soq3::u(1, 2).scale(&Scalar::i());
    assert_eq!(soq3::star(&p, Regime::Unimodular), soq3::u(1, 2).scale(&Scalar::i()).neg());
}

#[test]
fn star_needs_a_total_map() {
    let p = x("x1*x2");
    assert!(p.star(&|l| (l == 0).then(|| x("x1")), Regime::QReal).is_err());
}

#[test]
fn matrices() {
    let a = soq3::alphabet();
    let u = NcMatrix::from_fn(3, 3, |i, j| soq3::u(i + 1, j + 1));
    let id = NcMatrix::identity(a, 3);
    assert!(id.mul(&u) == u && u.mul(&id) == u);

    let su = soq3::antipode_matrix();
    let prod = u.mul(&su);
    assert!(prod.entries().iter().all(|e| e.degree() == 2));

    let col = NcMatrix::column(vec![soq3::u(1, 1), soq3::u(2, 1), soq3::u(3, 1)]);
    let row = NcMatrix::row(vec![
        soq3::u(3, 3),
        soq3::u(2, 3).scale(&Scalar::r_pow(-2)),
        soq3::u(1, 3).scale(&Scalar::r_pow(-4)),
    ]);
    let p1 = col.mul(&row);
    let b = bundles::Bundle::build(1);
    for j in 0..3 {
        for k in 0..3 {
            assert_eq!(soq3::cover(p1.get(j, k)), *b.get(j, k), "({j},{k})");
        }
    }
}

/// Reverse each word, map letters, conjugate coefficients; written out by hand.
fn star_oracle(p: &NcPoly, g: Regime) -> NcPoly {
    let a = soq3::alphabet();
    let mut out = NcPoly::zero(a);
    for (w, c) in p.terms() {
        let mut t = NcPoly::scalar(a, c.conjugate(g));
        for &l in w.as_slice().iter().rev() {
            let (j, k) = soq3::indices(l);
            t = t.mul(&soq3::star_gen(j, k, g));
        }
        out = out.add(&t);
    }
    out
}

fn u_poly() -> impl Strategy<Value = NcPoly> {
    common::poly(soq3::alphabet(), 3, 3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn star_is_an_involution(p in u_poly(), g in common::regime()) {
        prop_assert_eq!(soq3::star(&soq3::star(&p, g), g), p.clone());
        prop_assert_eq!(soq3::star(&p, g), star_oracle(&p, g));
    }

    #[test]
    fn star_is_anti_multiplicative(a in u_poly(), b in u_poly(), g in common::regime()) {
        prop_assert_eq!(soq3::star(&a.mul(&b), g), soq3::star(&b, g).mul(&soq3::star(&a, g)));
    }

    #[test]
    fn multiplication_is_associative_and_unital(a in u_poly(), b in u_poly(), c in u_poly()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        let one = NcPoly::one(soq3::alphabet());
        prop_assert_eq!(one.mul(&a), a.clone());
        prop_assert_eq!(a.mul(&one), a.clone());
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn render_parses_back(p in common::poly(systems::x_alphabet(), 4, 4)) {
        prop_assert_eq!(parse_poly(&p.render(), systems::x_alphabet()).unwrap(), p);
    }
}

#[test]
fn alphabet_lookup() {
    let a = Alphabet::new("t", &["p", "q1"]);
    assert_eq!(a.letter("q1"), Some(1));
    assert_eq!(a.symbol(0), "p");
    assert!(a.letter("z").is_none());
}
