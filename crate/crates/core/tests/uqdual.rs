mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;
use qorth_core::freealg::{Letter, NcPoly, Tensor2, Word};
use qorth_core::scalar::Scalar;
use qorth_core::systems::uq;
use qorth_core::uqdual::{self, RealForm, E, F, K, KINV};
use qorth_core::soq3;

fn up(src: &str) -> NcPoly {
    uqdual::poly(src)
}

fn u(src: &str) -> NcPoly {
    soq3::poly(src)
}

/// `<g, u_jk>` straight from the displayed generator table.
fn table() -> BTreeMap<(usize, usize, usize), Scalar> {
    uqdual::pairing_values().into_iter().map(|(g, j, k, v)| ((g, j, k), v)).collect()
}

/// `<g1 g2 ... gm, u_jk>` as a product of 3x3 matrices.
fn word_on_generator(t: &BTreeMap<(usize, usize, usize), Scalar>, w: &Word, j: usize, k: usize) -> Scalar {
    let mut row: Vec<Scalar> = (1..=3).map(|m| if m == j { Scalar::one() } else { Scalar::zero() }).collect();
    for &g in w.as_slice() {
        row = (1..=3)
            .map(|c| (1..=3).fold(Scalar::zero(), |acc, m| {
                let v = t.get(&(g as usize, m, c)).cloned().unwrap_or_default();
                &acc + &(&row[m - 1] * &v)
            }))
            .collect();
    }
    row[k - 1].clone()
}

/// Leibniz recursion: `<f, a b> = <f_(1), a> <f_(2), b>` through the U coproduct.
fn pair_oracle(f: &NcPoly, a: &[Letter]) -> Scalar {
    let t = table();
    let mut acc = Scalar::zero();
    for (fw, c) in f.terms() {
        let v = match a.len() {
            0 => uqdual::counit(&NcPoly::word(uqdual::alphabet(), fw.clone())),
            1 => {
                let (j, k) = soq3::indices(a[0]);
                word_on_generator(&t, fw, j, k)
            }
            _ => split(&NcPoly::word(uqdual::alphabet(), fw.clone()))
                .iter()
                .fold(Scalar::zero(), |s, (l, r, d)| &s + &(&(d * &pair_oracle(l, &a[..1])) * &pair_oracle(r, &a[1..]))),
        };
        acc = &acc + &(c * &v);
    }
    acc
}

fn split(f: &NcPoly) -> Vec<(NcPoly, NcPoly, Scalar)> {
    let d: Tensor2 = uqdual::coproduct(f);
    let ua = uqdual::alphabet();
    d.terms().iter().map(|((l, r), c)| (NcPoly::word(ua, l.clone()), NcPoly::word(ua, r.clone()), c.clone())).collect()
}

/// `(a b) <| f = (a <| f_(1)) (b <| f_(2))`, `u_jk <| f = sum_m <f, u_jm> u_mk`.
fn right_oracle(a: &[Letter], f: &NcPoly) -> NcPoly {
    let ua = soq3::alphabet();
    match a.len() {
        0 => NcPoly::scalar(ua, uqdual::counit(f)),
        1 => {
            let (j, k) = soq3::indices(a[0]);
            (1..=3).fold(NcPoly::zero(ua), |acc, m| acc.add(&soq3::u(m, k).scale(&pair_oracle(f, &[soq3::letter(j, m)]))))
        }
        _ => split(f).iter().fold(NcPoly::zero(ua), |acc, (l, r, c)| {
            acc.add(&right_oracle(&a[..1], l).mul(&right_oracle(&a[1..], r)).scale(c))
        }),
    }
}

/// `f |> (a b) = (f_(1) |> a) (f_(2) |> b)`, `f |> u_jk = sum_m u_jm <f, u_mk>`.
fn left_oracle(f: &NcPoly, a: &[Letter]) -> NcPoly {
    let ua = soq3::alphabet();
    match a.len() {
        0 => NcPoly::scalar(ua, uqdual::counit(f)),
        1 => {
            let (j, k) = soq3::indices(a[0]);
            (1..=3).fold(NcPoly::zero(ua), |acc, m| acc.add(&soq3::u(j, m).scale(&pair_oracle(f, &[soq3::letter(m, k)]))))
        }
        _ => split(f).iter().fold(NcPoly::zero(ua), |acc, (l, r, c)| {
            acc.add(&left_oracle(l, &a[..1]).mul(&left_oracle(r, &a[1..])).scale(c))
        }),
    }
}

#[test]
fn pbw_and_hopf_examples() {
    assert_eq!(up("E*F - F*E"), up("(K - Kinv)/(s - s^-1)"));
    assert_eq!(up("K*Kinv"), up("1"));
    assert_eq!(uqdual::antipode(&up("E")), up("-E*Kinv"));
    assert_eq!(uqdual::antipode(&up("F")), up("-K*F"));
    assert_eq!(uqdual::antipode(&uqdual::antipode(&up("E"))), up("q*E"));
    assert_eq!(uqdual::coproduct(&up("E")), Tensor2::pure(&up("E"), &up("K")).add(&Tensor2::pure(&up("1"), &up("E"))));
    let [c1, c2, c3] = uqdual::casimir_forms();
    assert_eq!(c1, c2);
    // the symmetric form needs a half on its K-part
    assert_ne!(c1, c3);
    assert_eq!(c1, up("(E*F + F*E)/2 + (s + s^-1)/(s - s^-1)^2*(K + Kinv)/2"));
    let c = uqdual::casimir();
    for g in ["E", "F", "K", "Kinv"] {
        assert_eq!(uqdual::mul(&c, &up(g)), uqdual::mul(&up(g), &c), "{g}");
    }
}

#[test]
fn pairing_examples() {
    assert_eq!(uqdual::pair(&up("K"), &u("u11")), Scalar::q_pow(-1));
    assert_eq!(uqdual::pair(&up("E"), &u("u21")), Scalar::eta());
    assert_eq!(Scalar::eta(), &Scalar::w() * &Scalar::r_pow(-1));
    let one = u("1");
    for f in ["E", "F", "K", "E*F", "K*Kinv", "3 + E"] {
        assert_eq!(uqdual::pair(&up(f), &one), uqdual::counit(&up(f)), "{f}");
    }
}

#[test]
fn action_examples() {
    let eta = Scalar::eta();
    for k in 1..=3 {
        assert_eq!(uqdual::right_action(&soq3::u(2, k), &up("E")), soq3::u(1, k).scale(&eta));
        assert_eq!(uqdual::left_action(&up("E"), &soq3::u(k, 1)), soq3::u(k, 2).scale(&eta));
    }
    for j in 1..=3 {
        for k in 1..=3 {
            for f in ["K", "E", "F", "Kinv"] {
                let want = (1..=3).fold(u("0"), |acc, m| acc.add(&soq3::u(m, k).scale(&uqdual::pair(&up(f), &soq3::u(j, m)))));
                assert_eq!(uqdual::right_action(&soq3::u(j, k), &up(f)), want);
            }
        }
    }
}

#[test]
fn casimir_eigenvalues() {
    let cq = uqdual::casimir_op();
    let two = Scalar::qint(2);
    for k in 1..=3 {
        let y = u(&format!("y{k}"));
        assert!(soq3::verify_identity(&uqdual::left_action(&cq, &y), &y.scale(&two)), "y{k}");
    }
    let y3sq = u("y3^2");
    let e23 = &Scalar::qint(2) * &Scalar::qint(3);
    assert!(soq3::verify_identity(&uqdual::left_action(&cq, &y3sq), &y3sq.scale(&e23)));
    let v = uqdual::right_action(&y3sq, &up("E"));
    assert!(soq3::verify_identity(&uqdual::left_action(&cq, &v), &v.scale(&e23)));
    for j in 0..=3usize {
        let vs: Vec<NcPoly> = (0..=2 * j).map(|m| uqdual::v_j(j, m)).collect();
        assert_eq!(uqdual::rank_in_quotient(&vs), 2 * j + 1, "J = {j}");
        assert!(soq3::cover(&uqdual::v_j(j, 2 * j + 1)).is_zero());
    }
}

#[test]
fn real_forms() {
    assert!(uqdual::star_pairing_violations(RealForm::Su2, 2, 2).is_empty());
    assert!(uqdual::star_pairing_violations(RealForm::Sl2R, 2, 2).is_empty());
    assert!(!uqdual::star_pairing_violations(RealForm::Su11, 1, 1).is_empty());
    // <E*, u12> = conj <E, S(u12)*> for su2
    let f = uqdual::star(&up("E"), RealForm::Su2);
    let g = RealForm::Su2.regime();
    let rhs = uqdual::pair(&up("E"), &soq3::star(&soq3::antipode(&soq3::u(1, 2)), g)).conjugate(g);
    assert_eq!(uqdual::pair(&f, &soq3::u(1, 2)), rhs);
}

fn u_word() -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(0u8..9, 0..=3)
}

fn uq_word() -> impl Strategy<Value = NcPoly> {
    prop::collection::vec(0u8..4, 0..=3).prop_map(|w| NcPoly::word(uqdual::alphabet(), Word::from_slice(&w)))
}

/// `E -> E/alpha`, `F -> alpha F`, an automorphism of U.
fn rescale(f: &NcPoly, alpha: &Scalar) -> NcPoly {
    let ua = uqdual::alphabet();
    f.substitute(ua, &|l| match l {
        E => NcPoly::gen(ua, E).scale(&alpha.inv()),
        F => NcPoly::gen(ua, F).scale(alpha),
        _ => NcPoly::gen(ua, l),
    })
}

type Triple = BTreeMap<(Word, Word, Word), Scalar>;

fn coassoc(f: &NcPoly, left: bool) -> Triple {
    let mut m = Triple::new();
    for (l, r, c) in split(f) {
        let inner = split(if left { &l } else { &r });
        for (a, b, d) in inner {
            let (wa, wb) = (a.terms().keys().next().unwrap().clone(), b.terms().keys().next().unwrap().clone());
            let (lw, rw) = (l.terms().keys().next().unwrap().clone(), r.terms().keys().next().unwrap().clone());
            let key = if left { (wa, wb, rw) } else { (lw, wa, wb) };
            let e = m.entry(key.clone()).or_insert_with(Scalar::zero);
            *e = &*e + &(&c * &d);
            if e.is_zero() {
                m.remove(&key);
            }
        }
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn pairing_matches_the_leibniz_recursion(f in uq_word(), a in u_word()) {
        let aw = NcPoly::word(soq3::alphabet(), Word::from_slice(&a));
        prop_assert_eq!(uqdual::pair(&f, &aw), pair_oracle(&f, &a));
    }

    #[test]
    fn actions_match_the_module_algebra_law(f in uq_word(), a in u_word()) {
        let aw = NcPoly::word(soq3::alphabet(), Word::from_slice(&a));
        prop_assert_eq!(uqdual::right_action(&aw, &f), right_oracle(&a, &f));
        prop_assert_eq!(uqdual::left_action(&f, &aw), left_oracle(&f, &a));
    }

    #[test]
    fn pairing_is_a_dual_pairing(f in uq_word(), g in uq_word(), a in u_word(), b in u_word()) {
        let (aw, bw) = (NcPoly::word(soq3::alphabet(), Word::from_slice(&a)), NcPoly::word(soq3::alphabet(), Word::from_slice(&b)));
        // <fg, a> = <f, a_(1)> <g, a_(2)> over the u coproduct
        let d = soq3::coproduct(&aw);
        let rhs = d.terms().iter().fold(Scalar::zero(), |s, ((l, r), c)| {
            let ua = soq3::alphabet();
            &s + &(&(c * &uqdual::pair(&f, &NcPoly::word(ua, l.clone()))) * &uqdual::pair(&g, &NcPoly::word(ua, r.clone())))
        });
        prop_assert_eq!(uqdual::pair(&f.mul(&g), &aw), rhs);
        // the pairing only sees classes in both algebras
        prop_assert_eq!(uqdual::pair(&uqdual::reduce(&f.mul(&g)), &aw.mul(&bw)), uqdual::pair(&f.mul(&g), &aw.mul(&bw)));
        // <S f, a> = <f, S a>
        prop_assert_eq!(uqdual::pair(&uqdual::antipode(&f), &aw), uqdual::pair(&f, &soq3::antipode(&aw)));
    }

    #[test]
    fn rescaling_is_an_automorphism(p in common::poly(uqdual::alphabet(), 3, 3), k in -3i32..=3) {
        prop_assume!(k != 0);
        let alpha = Scalar::r_pow(k);
        prop_assert_eq!(uq().normal_form(&rescale(&p, &alpha)), rescale(&uq().normal_form(&p), &alpha));
        // the Casimir and the K-row do not see alpha
        prop_assert_eq!(uqdual::reduce(&rescale(&uqdual::casimir(), &alpha)), uqdual::casimir());
        for g in [K, KINV] {
            let kw = NcPoly::gen(uqdual::alphabet(), g);
            prop_assert_eq!(rescale(&kw, &alpha), kw);
        }
    }

    #[test]
    fn hopf_axioms(f in uq_word()) {
        let d = split(&f);
        let e = NcPoly::scalar(uqdual::alphabet(), uqdual::counit(&f));
        let reduced = uqdual::reduce(&f);
        let left = d.iter().fold(NcPoly::zero(uqdual::alphabet()), |acc, (l, r, c)| acc.add(&r.scale(&(c * &uqdual::counit(l)))));
        let right = d.iter().fold(NcPoly::zero(uqdual::alphabet()), |acc, (l, r, c)| acc.add(&l.scale(&(c * &uqdual::counit(r)))));
        prop_assert_eq!(uqdual::reduce(&left), reduced.clone());
        prop_assert_eq!(uqdual::reduce(&right), reduced);
        let ms = d.iter().fold(NcPoly::zero(uqdual::alphabet()), |acc, (l, r, c)| acc.add(&uqdual::mul(&uqdual::antipode(l), r).scale(c)));
        prop_assert_eq!(ms, e.clone());
        let sm = d.iter().fold(NcPoly::zero(uqdual::alphabet()), |acc, (l, r, c)| acc.add(&uqdual::mul(l, &uqdual::antipode(r)).scale(c)));
        prop_assert_eq!(sm, e);
        prop_assert_eq!(coassoc(&f, true), coassoc(&f, false));
    }

    #[test]
    fn star_is_involutive_per_form(f in common::poly(uqdual::alphabet(), 2, 3), which in 0usize..3) {
        let form = [RealForm::Su2, RealForm::Su11, RealForm::Sl2R][which];
        prop_assert_eq!(uqdual::star(&uqdual::star(&f, form), form), uqdual::reduce(&f));
    }
}
