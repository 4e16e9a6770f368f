//! SO(2)-coinvariants: weights, the coaction, the y-generators and the
//! quantum vector space.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::freealg::{Letter, NcPoly, Tensor2, Word};
use crate::parse::parse_poly;
use crate::report::Check;
use crate::scalar::{Regime, Scalar};
use crate::soq3::{self, cover, cover_word, poly, residual, u};
use crate::systems::{c3, so2, x_alphabet, z_alphabet};

const IDENTITY_DATA: &str = include_str!("../data/identities.txt");

/// Sections of `lhs = rhs` lines over the u-alphabet.
pub fn identities() -> &'static BTreeMap<String, Vec<(String, String)>> {
    static T: OnceLock<BTreeMap<String, Vec<(String, String)>>> = OnceLock::new();
    T.get_or_init(|| {
        let mut out: BTreeMap<String, Vec<(String, String)>> = BTreeMap::new();
        let mut section = String::new();
        for line in IDENTITY_DATA.lines().map(str::trim).filter(|l| !l.is_empty()) {
            if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                section = name.to_string();
                continue;
            }
            let (l, r) = line.split_once('=').expect("identity lines are `lhs = rhs`");
            out.entry(section.clone()).or_default().push((l.trim().to_string(), r.trim().to_string()));
        }
        out
    })
}

pub fn section(name: &str) -> &'static [(String, String)] {
    identities().get(name).map_or(&[], |v| v.as_slice())
}

/// Column 1 has weight +1, column 2 weight 0, column 3 weight -1.
pub fn letter_weight(l: Letter) -> i64 {
    let (_, j) = soq3::indices(l);
    2 - j as i64
}

pub fn word_weight(w: &Word) -> i64 {
    w.as_slice().iter().map(|&l| letter_weight(l)).sum()
}

pub fn is_coinvariant(p: &NcPoly) -> bool {
    p.terms().keys().all(|w| word_weight(w) == 0)
}

pub fn z_power(k: i64) -> Word {
    let l = if k >= 0 { 0 } else { 1 };
    Word::from_slice(&vec![l; k.unsigned_abs() as usize])
}

/// `delta(w) = w (x) z^{weight(w)}`
pub fn coaction(p: &NcPoly) -> Tensor2 {
    let mut t = Tensor2::zero(soq3::alphabet(), z_alphabet());
    for (w, c) in p.terms() {
        t.add_term(w.clone(), z_power(word_weight(w)), c.clone());
    }
    t
}

pub fn z_star_letter(l: Letter, regime: Regime) -> NcPoly {
    let z = z_alphabet();
    match regime {
        Regime::QReal => NcPoly::gen(z, 1 - l),
        Regime::Unimodular => NcPoly::gen(z, l),
    }
}

/// Star on both legs of a u (x) z tensor, right leg reduced.
pub fn star_tensor(t: &Tensor2, regime: Regime) -> Tensor2 {
    let (ua, z) = (soq3::alphabet(), z_alphabet());
    let mut out = Tensor2::zero(ua, z);
    for ((l, r), c) in t.terms() {
        let left = soq3::star(&NcPoly::word(ua, l.clone()), regime);
        let right = NcPoly::word(z, r.clone()).star(&|x| Some(z_star_letter(x, regime)), regime).expect("total map");
        let right = so2().normal_form(&right);
        out = out.add(&Tensor2::pure(&left.scale(&c.conjugate(regime)), &right));
    }
    out
}

fn identity_checks(prefix: &str, name: &str) -> Vec<Check> {
    section(name)
        .iter()
        .enumerate()
        .map(|(k, (l, r))| {
            let res = residual(&poly(l), &poly(r));
            let mut c = Check::zero(format!("{prefix}[{k}]"), &res);
            c.detail = format!("{l} = {r}");
            c
        })
        .collect()
}

pub fn coinvariant_checks() -> Vec<Check> {
    let mut out = identity_checks("table", "coinvariants");
    out.extend(identity_checks("step", "coinvariant-steps"));
    for (k, (l, r)) in section("coinvariants").iter().enumerate() {
        let ok = is_coinvariant(&poly(l)) && is_coinvariant(&poly(r));
        out.push(Check::expect(format!("weight-zero[{k}]"), ok, format!("{l} = {r}")));
    }
    out.push(Check::expect("delta-u11", coaction(&u(1, 1)) == Tensor2::pure(&u(1, 1), &NcPoly::named(z_alphabet(), "z")), "u11 (x) z"));
    out.push(Check::expect("delta-u22", coaction(&u(2, 2)) == Tensor2::pure(&u(2, 2), &NcPoly::one(z_alphabet())), "u22 (x) 1"));
    out.push(Check::expect("delta-u13u21", is_coinvariant(&poly("u13*u21")), "u13*u21 (x) 1"));
    // agrees with (id (x) pi) Delta on generators and products
    for l in soq3::alphabet().letters() {
        let (i, j) = soq3::indices(l);
        let g = u(i, j).mul(&u(4 - i, 2));
        let d = soq3::coproduct(&g);
        let pi = d.map_legs(&|w| NcPoly::word(soq3::alphabet(), w.clone()), &|w| {
            soq3::so2_quotient(&NcPoly::word(soq3::alphabet(), w.clone()))
        });
        let want = coaction(&g);
        out.push(Check::zero_tensor(format!("id-pi-delta[{i}{j}]"), &pi.sub(&want)));
    }
    out
}

pub fn b_relation_checks() -> Vec<Check> {
    let mut out = identity_checks("relation", "b-relations");
    // the counit sends y2 to 1 and y1, y3 to 0
    let quadric = poly("r^-2*y1*y3 + r^2*y3*y1 + y2^2 - 1");
    out.push(Check::expect("counit-quadric", crate::slq2::counit(&cover(&quadric)).is_zero(), "epsilon(quadric) = 0"));
    out.push(Check::equal("counit-y2", &crate::slq2::counit(&cover(&poly("y2"))), &Scalar::one()));
    out
}

pub fn appendix_c_checks() -> Vec<Check> {
    let mut out = identity_checks("column", "column-relations");
    out.extend(identity_checks("qq", "qq"));
    out.extend(identity_checks("second-column", "second-column"));
    out.extend(identity_checks("outer", "outer-columns"));
    out
}

/// Column relations that already follow from the RTT relations.
pub fn column_relations() -> &'static [(String, String)] {
    section("column-relations")
}

pub fn x_gen(k: usize) -> NcPoly {
    NcPoly::gen(x_alphabet(), (k - 1) as Letter)
}

pub fn xpoly(src: &str) -> NcPoly {
    parse_poly(src, x_alphabet()).unwrap_or_else(|e| panic!("{src}: {e}"))
}

/// `r = q^{-1/2} x1 x3 + x2^2 + q^{1/2} x3 x1`
pub fn central_r() -> NcPoly {
    xpoly("r^-2*x1*x3 + x2^2 + r^2*x3*x1")
}

pub fn x_star_letter(l: Letter, regime: Regime) -> NcPoly {
    let k = l as usize + 1;
    match regime {
        Regime::QReal => x_gen(4 - k).scale(&Scalar::r_pow(2 * crate::rmatrix::rho2(k, 3))),
        Regime::Unimodular => x_gen(k),
    }
}

pub fn x_star(p: &NcPoly, regime: Regime) -> NcPoly {
    c3().normal_form(&p.star(&|l| Some(x_star_letter(l, regime)), regime).expect("total map"))
}

/// `x_k -> sum_m u_km (x) x_m`, extended multiplicatively.
pub fn x_coaction(p: &NcPoly) -> Tensor2 {
    let (ua, xa) = (soq3::alphabet(), x_alphabet());
    let mut out = Tensor2::zero(ua, xa);
    for (w, c) in p.terms() {
        let mut acc = Tensor2::one(ua, xa);
        for &l in w.as_slice() {
            let k = l as usize + 1;
            let mut d = Tensor2::zero(ua, xa);
            for m in 1..=3 {
                d.add_term(Word::letter(soq3::letter(k, m)), Word::letter((m - 1) as Letter), Scalar::one());
            }
            acc = acc.mul(&d);
        }
        out = out.add(&acc.scale(c));
    }
    out
}

/// Left leg through the covering, right leg in C3 normal form.
pub fn reduce_x_tensor(t: &Tensor2) -> Tensor2 {
    let (sa, xa) = (crate::slq2::alphabet(), x_alphabet());
    let mut out = Tensor2::zero(sa, xa);
    for ((l, r), c) in t.terms() {
        let left = cover_word(l).scale(c);
        let right = c3().reduce_word(r.as_slice());
        for (w1, c1) in left.terms() {
            for (w2, c2) in right.terms() {
                out.add_term(w1.clone(), w2.clone(), c1 * c2);
            }
        }
    }
    out
}

pub fn qvector_checks() -> Vec<Check> {
    let mut out = Vec::new();
    let rs = c3();
    let r = central_r();
    for k in 1..=3 {
        let x = x_gen(k);
        let comm = rs.mul(&r, &x).sub(&rs.mul(&x, &r));
        out.push(Check::zero(format!("central[x{k}]"), &comm));
    }
    let rels = crate::rmatrix::rule_relations(&crate::systems::C3_RULES, x_alphabet());
    for (k, g) in rels.iter().enumerate() {
        out.push(Check::zero_tensor(format!("coaction[{k}]"), &reduce_x_tensor(&x_coaction(g))));
    }
    for (name, regime) in [("real", Regime::QReal), ("unimodular", Regime::Unimodular)] {
        for (k, g) in rels.iter().enumerate() {
            out.push(Check::zero(format!("star-{name}[{k}]"), &x_star(g, regime)));
        }
        out.push(Check::zero(format!("r-real-{name}"), &x_star(&r, regime).sub(&rs.normal_form(&r))));
    }
    out
}

/// `alpha beta` and `gamma^2` in the Euclidean coordinates of C3_q.
pub fn sphere_constants() -> (Scalar, Scalar) {
    let half = Scalar::rational(1, 2);
    let ab = &half * &(&Scalar::s_pow(1) + &Scalar::s_pow(-1));
    let g2 = &half * &(&Scalar::q() + &Scalar::q_pow(-1));
    (ab, g2)
}

/// `alpha beta` in the cartesian coordinates of B.
pub fn b_alpha_beta() -> Scalar {
    let q = Scalar::q();
    &(&Scalar::s_pow(1) * &(&Scalar::one() + &q)) * &(&Scalar::one() + &Scalar::q_pow(2)).inv()
}

/// `mu^2 V1^2 + V3^2` for `V1 = mu i (-alpha v1 + beta v3)/sqrt2`,
/// `V3 = (alpha v1 + beta v3)/sqrt2`, split as `(P0, P_{alpha^2}, P_{beta^2})`.
/// `mu^4 = 1` is used; `alpha^2` and `beta^2` stay formal.
pub fn mu_sum(v1: &NcPoly, v3: &NcPoly, mu2: &Scalar, ab: &Scalar) -> [NcPoly; 3] {
    let half = Scalar::rational(1, 2);
    // (mu i)^2 = -mu^2
    let x1 = (&-mu2) * &half;
    let x1 = mu2 * &x1;
    let x3 = half.clone();
    let cross = v1.mul(v3).add(&v3.mul(v1));
    let p0 = cross.scale(&(&(&x3 - &x1) * ab));
    let pa = v1.mul(v1).scale(&(&x1 + &x3));
    let pb = v3.mul(v3).scale(&(&x1 + &x3));
    [p0, pa, pb]
}

pub fn cartesian_checks() -> Vec<Check> {
    let mut out = Vec::new();
    let (ab, g2) = sphere_constants();
    let rs = c3();
    for (label, mu2) in [("sphere", Scalar::one()), ("hyperboloid", Scalar::int(-1))] {
        let [p0, pa, pb] = mu_sum(&x_gen(1), &x_gen(3), &mu2, &ab);
        let total = p0.add(&x_gen(2).mul(&x_gen(2)).scale(&g2));
        out.push(Check::zero(format!("c3-{label}"), &rs.normal_form(&total.sub(&central_r()))));
        out.push(Check::zero(format!("c3-{label}-alpha2"), &pa));
        out.push(Check::zero(format!("c3-{label}-beta2"), &pb));
        let bab = b_alpha_beta();
        let [b0, ba, bb] = mu_sum(&poly("y1"), &poly("y3"), &mu2, &bab);
        let q = Scalar::q();
        let den = (&Scalar::one() + &Scalar::q_pow(2)).inv();
        let lin = &(&(&Scalar::one() - &q) * &(&Scalar::one() - &q)) * &den;
        let cst = &(&Scalar::int(2) * &q) * &den;
        let y2 = poly("y2");
        let lhs = b0.add(&y2.mul(&y2)).sub(&y2.scale(&lin)).sub(&NcPoly::scalar(soq3::alphabet(), cst));
        out.push(Check::zero(format!("b-{label}"), &cover(&lhs)));
        out.push(Check::zero(format!("b-{label}-alpha2"), &ba));
        out.push(Check::zero(format!("b-{label}-beta2"), &bb));
    }
    let q = Scalar::q();
    let den = (&Scalar::one() + &Scalar::q_pow(2)).inv();
    let lin = &(&(&Scalar::one() - &q) * &(&Scalar::one() - &q)) * &den;
    let cst = &(&Scalar::int(2) * &q) * &den;
    let at_one = |s: &Scalar| s.eval_at_one().map(|g| Scalar::gauss(g));
    out.push(Check::expect("limit-linear", at_one(&lin) == Some(Scalar::zero()), "(1-q)^2/(1+q^2) at q = 1"));
    out.push(Check::expect("limit-constant", at_one(&cst) == Some(Scalar::one()), "2q/(1+q^2) at q = 1"));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sections_load() {
        assert_eq!(section("coinvariants").len(), 18);
        assert_eq!(section("qq").len(), 6);
        assert_eq!(section("column-relations").len(), 17);
    }

    #[test]
    fn weights() {
        assert_eq!(coaction(&u(1, 1)).render(), "(1)*u11 (x) z");
        assert!(is_coinvariant(&poly("u13*u21")));
        assert!(!is_coinvariant(&poly("u13*u22")));
    }

    #[test]
    fn example_identities() {
        assert!(soq3::verify_identity(&poly("u23*u21"), &poly("y3*y1")));
        assert!(!soq3::verify_identity(&poly("u23*u21"), &poly("y1*y3")));
    }
}
