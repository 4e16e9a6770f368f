//! Seeded random sampling of algebraic laws: field axioms, conjugations,
//! stars, normal forms and the two U-actions.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::freealg::{Alphabet, NcPoly, Word};
use crate::report::Check;
use crate::rewrite::RewriteSystem;
use crate::scalar::{Gauss, Poly, Rat, RatFunc, Regime, Scalar};
use crate::systems::{c3, lambda, sl, uq};
use crate::{slq2, soq3, uqdual};

pub struct Sampler(ChaCha8Rng);

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn rat(&mut self) -> Rat {
        Rat::new(self.0.gen_range(-5..=5), self.0.gen_range(1..=4))
    }

    pub fn gauss(&mut self) -> Gauss {
        let im = if self.0.gen_bool(0.3) { self.rat() } else { Rat::int(0) };
        Gauss::new(self.rat(), im)
    }

    pub fn laurent(&mut self) -> RatFunc {
        let len = self.0.gen_range(1..=3);
        let coeffs = (0..len).map(|_| self.gauss()).collect();
        RatFunc::laurent(self.0.gen_range(-4..=4), Poly::from_coeffs(coeffs))
    }

    fn part(&mut self) -> RatFunc {
        let num = self.laurent();
        if self.0.gen_bool(0.3) {
            let den = self.laurent();
            if !den.is_zero() {
                return num.div(&den);
            }
        }
        num
    }

    pub fn scalar(&mut self) -> Scalar {
        let p1 = if self.0.gen_bool(0.5) { self.part() } else { RatFunc::zero() };
        Scalar::new(self.part(), p1)
    }

    pub fn word(&mut self, alpha: &Arc<Alphabet>, max_len: usize) -> Word {
        let len = self.0.gen_range(0..=max_len);
        Word::from_slice(&(0..len).map(|_| self.0.gen_range(0..alpha.len()) as u8).collect::<Vec<_>>())
    }

    /// Up to three terms with small coefficients.
    pub fn poly(&mut self, alpha: &Arc<Alphabet>, max_len: usize) -> NcPoly {
        let n = self.0.gen_range(1..=3);
        let mut p = NcPoly::zero(alpha);
        for _ in 0..n {
            let w = self.word(alpha, max_len);
            let c = Scalar::gauss(self.gauss()) * Scalar::r_pow(self.0.gen_range(-2..=2));
            p.add_term(w, c);
        }
        p
    }

    pub fn regime(&mut self) -> Regime {
        if self.0.gen_bool(0.5) {
            Regime::QReal
        } else {
            Regime::Unimodular
        }
    }
}

fn law(id: &str, cases: usize, mut case: impl FnMut(usize) -> Option<String>) -> Check {
    let bad: Vec<String> = (0..cases).filter_map(&mut case).collect();
    if bad.is_empty() {
        Check::pass(format!("sample[{id}]"), format!("{cases} cases"))
    } else {
        Check::fail(format!("sample[{id}]"), format!("{} of {cases} cases fail", bad.len()), bad[..bad.len().min(4)].join("; "), bad.len())
    }
}

pub fn field_checks(seed: u64, cases: usize) -> Vec<Check> {
    let mut s = Sampler::new(seed);
    let mut out = Vec::new();
    out.push(law("field:add-assoc", cases, |_| {
        let (a, b, c) = (s.scalar(), s.scalar(), s.scalar());
        (&(&a + &b) + &c != &a + &(&b + &c)).then(|| format!("{a} | {b} | {c}"))
    }));
    out.push(law("field:mul-assoc", cases, |_| {
        let (a, b, c) = (s.scalar(), s.scalar(), s.scalar());
        (&(&a * &b) * &c != &a * &(&b * &c)).then(|| format!("{a} | {b} | {c}"))
    }));
    out.push(law("field:commutative", cases, |_| {
        let (a, b) = (s.scalar(), s.scalar());
        (&a * &b != &b * &a || &a + &b != &b + &a).then(|| format!("{a} | {b}"))
    }));
    out.push(law("field:distributive", cases, |_| {
        let (a, b, c) = (s.scalar(), s.scalar(), s.scalar());
        (&a * &(&b + &c) != &(&a * &b) + &(&a * &c)).then(|| format!("{a} | {b} | {c}"))
    }));
    out.push(law("field:inverse", cases, |_| {
        let a = s.scalar();
        if a.is_zero() {
            return None;
        }
        (!(&a * &a.inv()).is_one() || !(&a - &a).is_zero()).then(|| a.to_string())
    }));
    out.push(law("field:w^2", cases, |_| {
        let a = s.scalar();
        let w2 = &Scalar::w() * &Scalar::w();
        (&a * &w2 != &a * &(&Scalar::one() + &Scalar::r_pow(4))).then(|| a.to_string())
    }));
    out.push(law("conj:involutive", cases, |_| {
        let (a, g) = (s.scalar(), s.regime());
        (a.conjugate(g).conjugate(g) != a).then(|| format!("{g:?} {a}"))
    }));
    out.push(law("conj:ring-map", cases, |_| {
        let (a, b, g) = (s.scalar(), s.scalar(), s.regime());
        let mul_ok = (&a * &b).conjugate(g) == &a.conjugate(g) * &b.conjugate(g);
        let add_ok = (&a + &b).conjugate(g) == &a.conjugate(g) + &b.conjugate(g);
        (!(mul_ok && add_ok)).then(|| format!("{g:?} {a} | {b}"))
    }));
    out
}

pub fn star_checks(seed: u64, cases: usize) -> Vec<Check> {
    let mut s = Sampler::new(seed ^ 0x5a);
    let ua = soq3::alphabet();
    let sa = slq2::alphabet();
    let mut out = Vec::new();
    out.push(law("star:u-involutive", cases, |_| {
        let (p, g) = (s.poly(ua, 3), s.regime());
        (soq3::star(&soq3::star(&p, g), g) != p).then(|| format!("{g:?} {p}"))
    }));
    out.push(law("star:u-anti-multiplicative", cases, |_| {
        let (a, b, g) = (s.poly(ua, 2), s.poly(ua, 2), s.regime());
        (soq3::star(&a.mul(&b), g) != soq3::star(&b, g).mul(&soq3::star(&a, g))).then(|| format!("{g:?} {a} | {b}"))
    }));
    out.push(law("star:sl-involutive", cases, |_| {
        let (p, g) = (slq2::reduce(&s.poly(sa, 3)), s.regime());
        (slq2::star(&slq2::star(&p, g), g) != p).then(|| format!("{g:?} {p}"))
    }));
    out.push(law("star:sl-anti-multiplicative", cases, |_| {
        let (a, b, g) = (s.poly(sa, 2), s.poly(sa, 2), s.regime());
        let lhs = slq2::star(&slq2::mul(&a, &b), g);
        let rhs = slq2::mul(&slq2::star(&b, g), &slq2::star(&a, g));
        (lhs != rhs).then(|| format!("{g:?} {a} | {b}"))
    }));
    out.push(law("star:cover-intertwines", cases, |_| {
        let (p, g) = (s.poly(ua, 2), s.regime());
        (soq3::cover(&soq3::star(&p, g)) != slq2::star(&soq3::cover(&p), g)).then(|| format!("{g:?} {p}"))
    }));
    let forms = [uqdual::RealForm::Su2, uqdual::RealForm::Su11, uqdual::RealForm::Sl2R];
    out.push(law("star:U-involutive-anti-multiplicative", cases, |k| {
        let form = forms[k % 3];
        let (a, b) = (s.poly(uqdual::alphabet(), 2), s.poly(uqdual::alphabet(), 2));
        let inv = uqdual::star(&uqdual::star(&a, form), form) == uqdual::reduce(&a);
        let anti = uqdual::star(&uqdual::mul(&a, &b), form) == uqdual::mul(&uqdual::star(&b, form), &uqdual::star(&a, form));
        (!(inv && anti)).then(|| format!("{form:?} {a} | {b}"))
    }));
    out
}

pub fn normal_form_checks(seed: u64, cases: usize) -> Vec<Check> {
    let mut s = Sampler::new(seed ^ 0xa5);
    let systems: [&RewriteSystem; 4] = [sl(), c3(), lambda(), uq()];
    let mut out = Vec::new();
    for rs in systems {
        let a = rs.alphabet().clone();
        out.push(law(&format!("nf:{}-idempotent", rs.name()), cases, |_| {
            let p = s.poly(&a, 5);
            let n = rs.normal_form(&p);
            (rs.normal_form(&n) != n || n.terms().keys().any(|w| !rs.is_normal(w.as_slice()))).then(|| p.to_string())
        }));
        out.push(law(&format!("nf:{}-associative", rs.name()), cases, |_| {
            let (x, y, z) = (s.poly(&a, 3), s.poly(&a, 3), s.poly(&a, 3));
            (rs.mul(&rs.mul(&x, &y), &z) != rs.mul(&x, &rs.mul(&y, &z))).then(|| format!("{x} | {y} | {z}"))
        }));
    }
    out
}

pub fn action_checks(seed: u64, cases: usize) -> Vec<Check> {
    let mut s = Sampler::new(seed ^ 0x3c);
    let ua = soq3::alphabet();
    let uqa = uqdual::alphabet();
    let mut triples = Vec::with_capacity(cases);
    for _ in 0..cases {
        let f = NcPoly::word(uqa, s.word(uqa, 2));
        let g = NcPoly::word(uqa, s.word(uqa, 2));
        triples.push((f, g, s.poly(ua, 2)));
    }
    let results = crate::par::map(&triples, |(f, g, a)| {
        let fg = f.mul(g);
        let right = soq3::verify_identity(&uqdual::right_action(&uqdual::right_action(a, f), g), &uqdual::right_action(a, &fg));
        let left = soq3::verify_identity(&uqdual::left_action(f, &uqdual::left_action(g, a)), &uqdual::left_action(&fg, a));
        let commute = soq3::verify_identity(&uqdual::right_action(&uqdual::left_action(f, a), g), &uqdual::left_action(f, &uqdual::right_action(a, g)));
        let desc = format!("{f} | {g} | {a}");
        (right, left, commute, desc)
    });
    let mut out = Vec::new();
    out.push(law("action:right-module", cases, |k| (!results[k].0).then(|| results[k].3.clone())));
    out.push(law("action:left-module", cases, |k| (!results[k].1).then(|| results[k].3.clone())));
    out.push(law("action:commute", cases, |k| (!results[k].2).then(|| results[k].3.clone())));
    out
}

/// All sampled laws.
pub fn all(seed: u64, cases: usize) -> Vec<Check> {
    let mut out = field_checks(seed, cases);
    out.extend(star_checks(seed, cases));
    out.extend(normal_form_checks(seed, cases));
    out.extend(action_checks(seed, cases));
    out
}
