#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use proptest::prelude::*;
use qorth_core::freealg::{Alphabet, NcPoly, Word};
use qorth_core::rewrite::RewriteSystem;
use qorth_core::scalar::{Gauss, Poly, Rat, RatFunc, Regime, Scalar};
use rand::seq::SliceRandom;
use rand::Rng;

/// Rewrite any occurrence of any left-hand side, chosen at random, until none is left.
pub fn naive_reduce(rs: &RewriteSystem, p: &NcPoly, rng: &mut impl Rng) -> NcPoly {
    let mut terms: BTreeMap<Word, Scalar> = p.terms().clone();
    loop {
        let mut redexes = Vec::new();
        for w in terms.keys() {
            let s = w.as_slice();
            for (ri, rule) in rs.rules().iter().enumerate() {
                let l = rule.lhs.as_slice();
                for pos in 0..=s.len().saturating_sub(l.len()) {
                    if s.len() >= l.len() && &s[pos..pos + l.len()] == l {
                        redexes.push((w.clone(), ri, pos));
                    }
                }
            }
        }
        let Some((w, ri, pos)) = redexes.choose(rng).cloned() else {
            return NcPoly::from_terms(rs.alphabet(), terms);
        };
        let c = terms.remove(&w).expect("term present");
        let rule = &rs.rules()[ri];
        let s = w.as_slice();
        let (pre, post) = (&s[..pos], &s[pos + rule.lhs.len()..]);
        for (mid, d) in rule.rhs.terms() {
            let mut v = pre.to_vec();
            v.extend_from_slice(mid.as_slice());
            v.extend_from_slice(post);
            let e = terms.entry(Word::from_slice(&v)).or_insert_with(Scalar::zero);
            *e = &*e + &(&c * d);
            if e.is_zero() {
                terms.remove(&Word::from_slice(&v));
            }
        }
    }
}

pub fn gauss() -> impl Strategy<Value = Gauss> {
    (-6i64..=6, 1i64..=4, prop::bool::weighted(0.3), -3i64..=3).prop_map(|(n, d, cplx, im)| {
        Gauss::new(Rat::new(n, d), if cplx { Rat::int(im) } else { Rat::int(0) })
    })
}

pub fn laurent() -> impl Strategy<Value = RatFunc> {
    (-4i32..=4, prop::collection::vec(gauss(), 1..4)).prop_map(|(k, c)| RatFunc::laurent(k, Poly::from_coeffs(c)))
}

pub fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (laurent(), prop::option::weighted(0.3, laurent())).prop_map(|(n, d)| match d {
        Some(d) if !d.is_zero() => n.div(&d),
        _ => n,
    })
}

pub fn scalar() -> impl Strategy<Value = Scalar> {
    (ratfunc(), prop::option::weighted(0.5, ratfunc())).prop_map(|(a, b)| Scalar::new(a, b.unwrap_or_else(RatFunc::zero)))
}

pub fn regime() -> impl Strategy<Value = Regime> {
    prop_oneof![Just(Regime::QReal), Just(Regime::Unimodular)]
}

/// Up to `terms` words of length at most `len`, with small coefficients.
pub fn poly(alpha: &Arc<Alphabet>, terms: usize, len: usize) -> impl Strategy<Value = NcPoly> {
    let n = alpha.len() as u8;
    let a = alpha.clone();
    prop::collection::vec((prop::collection::vec(0..n, 0..=len), -3i64..=3, -2i32..=2), 1..=terms).prop_map(move |ts| {
        let mut p = NcPoly::zero(&a);
        for (w, c, k) in ts {
            p.add_term(Word::from_slice(&w), Scalar::int(c) * Scalar::r_pow(k));
        }
        p
    })
}
