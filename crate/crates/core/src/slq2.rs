//! O(SL_s(2)): normal form, Hopf structure, stars and the singular trace.

use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::freealg::{Alphabet, Letter, NcPoly, Tensor2, Word};
use crate::parse::parse_poly;
use crate::rewrite::RewriteSystem;
use crate::scalar::{Regime, Scalar};
use crate::systems::{sl, sl_alphabet};

pub const B: Letter = 0;
pub const A: Letter = 1;
pub const D: Letter = 2;
pub const C: Letter = 3;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TraceError {
    #[error("word {0} is not a power of bc")]
    OutsideBc(String),
}

pub fn alphabet() -> &'static Arc<Alphabet> {
    sl_alphabet()
}

pub fn gen(name: &str) -> NcPoly {
    NcPoly::named(alphabet(), name)
}

/// Parse and reduce.
pub fn poly(src: &str) -> NcPoly {
    reduce(&parse_poly(src, alphabet()).unwrap_or_else(|e| panic!("{src}: {e}")))
}

pub fn reduce(p: &NcPoly) -> NcPoly {
    sl().normal_form(p)
}

pub fn mul(a: &NcPoly, b: &NcPoly) -> NcPoly {
    sl().mul(a, b)
}

pub fn counit_letter(l: Letter) -> Scalar {
    if l == A || l == D {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

/// Algebra map a, d -> 1, b, c -> 0. Valid on any representative.
pub fn counit(p: &NcPoly) -> Scalar {
    let mut acc = Scalar::zero();
    for (w, c) in p.terms() {
        if w.as_slice().iter().all(|&l| l == A || l == D) {
            acc = &acc + c;
        }
    }
    acc
}

/// `mu((bc)^k) = (-1)^k r^{2k} / (r^{4k} - 1)`
pub fn mu_bc(k: u32) -> Scalar {
    if k == 0 {
        return Scalar::zero();
    }
    let k = k as i32;
    let sign = if k % 2 == 0 { Scalar::one() } else { Scalar::int(-1) };
    &(&sign * &Scalar::r_pow(2 * k)) * &(&Scalar::r_pow(4 * k) - &Scalar::one()).inv()
}

fn bc_power(w: &Word) -> Option<u32> {
    let s = w.as_slice();
    let k = s.len() / 2;
    (s.len() % 2 == 0 && s[..k].iter().all(|&l| l == B) && s[k..].iter().all(|&l| l == C)).then_some(k as u32)
}

/// Singular trace, defined on the span of `(bc)^k`.
pub fn singular_trace(p: &NcPoly) -> Result<Scalar, TraceError> {
    let p = reduce(p);
    let mut acc = Scalar::zero();
    for (w, c) in p.terms() {
        match bc_power(w) {
            Some(k) => acc = &acc + &(c * &mu_bc(k)),
            None => return Err(TraceError::OutsideBc(w.render(alphabet()))),
        }
    }
    Ok(acc)
}

fn coproduct_table() -> &'static [Tensor2; 4] {
    static T: OnceLock<[Tensor2; 4]> = OnceLock::new();
    T.get_or_init(|| {
        let g = |x: &str, y: &str, u: &str, v: &str| Tensor2::pure(&gen(x), &gen(y)).add(&Tensor2::pure(&gen(u), &gen(v)));
        // indexed by letter: b, a, d, c
        [g("a", "b", "b", "d"), g("a", "a", "b", "c"), g("c", "b", "d", "d"), g("c", "a", "d", "c")]
    })
}

pub fn coproduct_letter(l: Letter) -> &'static Tensor2 {
    &coproduct_table()[l as usize]
}

/// Multiplicative extension, both legs in normal form.
pub fn coproduct(p: &NcPoly) -> Tensor2 {
    let a = alphabet();
    let mut out = Tensor2::zero(a, a);
    for (w, c) in p.terms() {
        let mut acc = Tensor2::one(a, a);
        for &l in w.as_slice() {
            acc = RewriteSystem::tensor_mul(sl(), sl(), &acc, coproduct_letter(l));
        }
        out = out.add(&acc.scale(c));
    }
    out
}

pub fn antipode_letter(l: Letter) -> NcPoly {
    match l {
        A => gen("d"),
        D => gen("a"),
        B => gen("b").scale(&-Scalar::s_pow(-1)),
        _ => gen("c").scale(&-Scalar::s_pow(1)),
    }
}

/// Anti-multiplicative extension, reduced.
pub fn antipode(p: &NcPoly) -> NcPoly {
    let mut acc = NcPoly::zero(alphabet());
    for (w, c) in p.terms() {
        let factors: Vec<NcPoly> = w.as_slice().iter().rev().map(|&l| antipode_letter(l)).collect();
        acc.add_scaled(&sl().product(&factors), c);
    }
    acc
}

pub fn star_letter(l: Letter, regime: Regime) -> NcPoly {
    match regime {
        Regime::Unimodular => NcPoly::gen(alphabet(), l),
        Regime::QReal => match l {
            A => gen("d"),
            D => gen("a"),
            B => gen("c").scale(&-Scalar::s_pow(1)),
            _ => gen("b").scale(&-Scalar::s_pow(-1)),
        },
    }
}

/// Antilinear, anti-multiplicative star, reduced.
pub fn star(p: &NcPoly, regime: Regime) -> NcPoly {
    let s = p.star(&|l| Some(star_letter(l, regime)), regime).expect("total generator map");
    reduce(&s)
}

/// Multiplication map applied to `(S (x) id)` of a tensor.
pub fn m_s_id(t: &Tensor2) -> NcPoly {
    let mut acc = NcPoly::zero(alphabet());
    for ((l, r), c) in t.terms() {
        let left = antipode(&NcPoly::word(alphabet(), l.clone()));
        acc.add_scaled(&mul(&left, &NcPoly::word(alphabet(), r.clone())), c);
    }
    acc
}

/// `(eps (x) id)` of a tensor.
pub fn counit_left(t: &Tensor2) -> NcPoly {
    let mut acc = NcPoly::zero(alphabet());
    for ((l, r), c) in t.terms() {
        let e = counit(&NcPoly::word(alphabet(), l.clone()));
        acc.add_term(r.clone(), &e * c);
    }
    acc
}

/// `(id (x) eps)` of a tensor.
pub fn counit_right(t: &Tensor2) -> NcPoly {
    let mut acc = NcPoly::zero(alphabet());
    for ((l, r), c) in t.terms() {
        let e = counit(&NcPoly::word(alphabet(), r.clone()));
        acc.add_term(l.clone(), &e * c);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reductions() {
        assert_eq!(poly("a*d - s*b*c").render(), "1");
        assert_eq!(poly("d*a").render(), "1 + r^-2*b*c");
        assert_eq!(poly("1").render(), "1");
    }

    #[test]
    fn hopf_on_generators() {
        assert_eq!(coproduct(&gen("a")).render(), Tensor2::pure(&gen("a"), &gen("a")).add(&Tensor2::pure(&gen("b"), &gen("c"))).render());
        assert_eq!(antipode(&gen("a")), gen("d"));
        assert_eq!(antipode(&gen("b")), poly("-s^-1*b"));
        for name in ["a", "b", "c", "d"] {
            let g = gen(name);
            let d = coproduct(&g);
            assert_eq!(counit_left(&d), g);
            assert_eq!(counit_right(&d), g);
            assert_eq!(m_s_id(&d), NcPoly::scalar(alphabet(), counit(&g)));
        }
    }

    #[test]
    fn trace_values() {
        assert!(singular_trace(&poly("1")).unwrap().is_zero());
        assert_eq!(singular_trace(&poly("b*c")).unwrap(), crate::parse::parse_scalar("-r^2/(r^4 - 1)").unwrap());
        assert!(singular_trace(&gen("a")).is_err());
    }

    #[test]
    fn stars_are_involutive() {
        for regime in [Regime::QReal, Regime::Unimodular] {
            for name in ["a", "b", "c", "d"] {
                assert_eq!(star(&star(&gen(name), regime), regime), gen(name));
            }
        }
    }
}
