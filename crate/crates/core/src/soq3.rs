//! O_q(3) and SO_q(3): presentation, determinant, cofactors, Hopf maps and
//! the covering homomorphism into O(SL_s(2)).

use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Arc, OnceLock};

use dashmap::DashMap;

use crate::freealg::{Alphabet, Letter, NcMatrix, NcPoly, Tensor2, Word};
use crate::ideal::{IdealSpan, Membership};
use crate::linalg::ScalarMatrix;
use crate::par;
use crate::parse::parse_with;
use crate::report::Check;
use crate::rewrite::RewriteSystem;
use crate::rmatrix::{self, Epsilon, RMatrixError};
use crate::scalar::{Regime, Scalar};
use crate::slq2;
use crate::systems::{sl, so2, u_alphabet, u_context, v_alphabet, z_alphabet};

pub fn alphabet() -> &'static Arc<Alphabet> {
    u_alphabet()
}

/// Letter of `u_ij` in an N x N matrix alphabet (indices from 1).
pub fn letter_n(n: usize, i: usize, j: usize) -> Letter {
    ((i - 1) * n + (j - 1)) as Letter
}

pub fn letter(i: usize, j: usize) -> Letter {
    letter_n(3, i, j)
}

/// Inverse of `letter`.
pub fn indices(l: Letter) -> (usize, usize) {
    (l as usize / 3 + 1, l as usize % 3 + 1)
}

pub fn u(i: usize, j: usize) -> NcPoly {
    NcPoly::gen(alphabet(), letter(i, j))
}

/// Parse over the u-alphabet, with `y1, y2, y3` standing for the middle column.
pub fn poly(src: &str) -> NcPoly {
    parse_with(src, &u_context()).unwrap_or_else(|e| panic!("{src}: {e}"))
}

fn matrix_alphabet(n: usize) -> Result<&'static Arc<Alphabet>, RMatrixError> {
    match n {
        2 => Ok(v_alphabet()),
        3 => Ok(u_alphabet()),
        _ => Err(RMatrixError::TooSmall(n)),
    }
}

/// `sum_kl R^{ji}_{kl} u_km u_ln - sum_kl u_ik u_jl R^{lk}_{mn}`, tagged by (i, j, m, n).
pub fn rtt_residues(n: usize) -> Result<Vec<((usize, usize, usize, usize), NcPoly)>, RMatrixError> {
    let alpha = matrix_alphabet(n)?;
    let r = rmatrix::build_r(n)?;
    let g = |i: usize, j: usize| NcPoly::gen(alpha, letter_n(n, i, j));
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for m in 1..=n {
                for nn in 1..=n {
                    let mut p = NcPoly::zero(alpha);
                    for k in 1..=n {
                        for l in 1..=n {
                            let c = r.get(rmatrix::idx(n, j, i), rmatrix::idx(n, k, l));
                            if !c.is_zero() {
                                p.add_scaled(&g(k, m).mul(&g(l, nn)), c);
                            }
                            let c = r.get(rmatrix::idx(n, l, k), rmatrix::idx(n, m, nn));
                            if !c.is_zero() {
                                p.add_scaled(&g(i, k).mul(&g(j, l)), &-c);
                            }
                        }
                    }
                    out.push(((i, j, m, nn), p));
                }
            }
        }
    }
    Ok(out)
}

/// RTT relations with zero rows and exact duplicates dropped.
pub fn generate_rtt(n: usize) -> Result<Vec<NcPoly>, RMatrixError> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (_, p) in rtt_residues(n)? {
        if !p.is_zero() && seen.insert(p.render()) {
            out.push(p);
        }
    }
    Ok(out)
}

/// `C_ij = delta(i, j') q^{-rho_i}`; `C^{-1} = C`.
pub fn c_matrix(n: usize) -> ScalarMatrix {
    ScalarMatrix::from_fn(n, n, |i, j| {
        if i + j == n - 1 {
            Scalar::r_pow(-2 * rmatrix::rho2(i + 1, n))
        } else {
            Scalar::zero()
        }
    })
}

fn generic_matrix(alpha: &Arc<Alphabet>, n: usize) -> NcMatrix {
    NcMatrix::from_fn(n, n, |i, j| NcPoly::gen(alpha, letter_n(n, i + 1, j + 1)))
}

fn scalar_matrix(alpha: &Arc<Alphabet>, m: &ScalarMatrix) -> NcMatrix {
    NcMatrix::from_fn(m.rows(), m.cols(), |i, j| NcPoly::scalar(alpha, m.get(i, j).clone()))
}

/// Entries of `u C u^t C^{-1} - I` followed by `C^{-1} u^t C u - I`.
pub fn metric_relations(n: usize) -> Result<Vec<NcPoly>, RMatrixError> {
    let alpha = matrix_alphabet(n)?;
    let u = generic_matrix(alpha, n);
    let c = scalar_matrix(alpha, &c_matrix(n));
    let id = NcMatrix::identity(alpha, n);
    let first = u.mul(&c).mul(&u.transpose()).mul(&c).sub(&id);
    let second = c.mul(&u.transpose()).mul(&c).mul(&u).sub(&id);
    Ok(first.entries().iter().chain(second.entries()).cloned().collect())
}

/// RTT and metric relations, optionally with `D_q - 1` (N = 3 only).
pub fn presentation(n: usize, with_det: bool) -> Result<Vec<NcPoly>, RMatrixError> {
    let mut rels = generate_rtt(n)?;
    rels.extend(metric_relations(n)?.into_iter().filter(|p| !p.is_zero()));
    if with_det && n == 3 {
        rels.push(quantum_determinant().sub(&NcPoly::one(alphabet())));
    }
    Ok(rels)
}

pub fn epsilon() -> &'static Epsilon {
    static E: OnceLock<Epsilon> = OnceLock::new();
    E.get_or_init(|| rmatrix::extract_epsilon().expect("exterior algebra is consistent"))
}

/// `sum eps_{mnp} u_{1m} u_{2n} u_{3p}`
pub fn quantum_determinant() -> NcPoly {
    let mut d = NcPoly::zero(alphabet());
    for (&(m, n, p), c) in &epsilon().0 {
        d.add_scaled(&u(1, m).mul(&u(2, n)).mul(&u(3, p)), c);
    }
    d
}

/// `eps_{abc}^{-1} sum eps_{mnp} u_bn u_cp`, if `eps_{abc} != 0`.
pub fn cofactor_expr(m: usize, a: usize, b: usize, c: usize) -> Option<NcPoly> {
    let e = epsilon().get(a, b, c);
    if e.is_zero() {
        return None;
    }
    let mut p = NcPoly::zero(alphabet());
    for n in 1..=3 {
        for q in 1..=3 {
            let k = epsilon().get(m, n, q);
            if !k.is_zero() {
                p.add_scaled(&u(b, n).mul(&u(c, q)), &k);
            }
        }
    }
    Some(p.scale(&e.inv()))
}

/// Every expression of the cofactor of `u_am`, keyed by (b, c).
pub fn cofactor_alternatives(m: usize, a: usize) -> Vec<((usize, usize), NcPoly)> {
    let mut out = Vec::new();
    for b in 1..=3 {
        for c in 1..=3 {
            if let Some(p) = cofactor_expr(m, a, b, c) {
                out.push(((b, c), p));
            }
        }
    }
    out
}

/// Listed expressions for the cofactor `hat u^m_a`, keyed by (m, a).
pub const COFACTOR_LIST: [((usize, usize), &[&str]); 9] = [
    ((1, 1), &["u22*u33 - r^4*u23*u32", "-r^-4*u32*u23 + u33*u22"]),
    ((2, 1), &["-r^4*u21*u33 + r^4*u23*u31 - r^4*(r^2-r^-2)*u22*u32", "u31*u23 - u33*u21 + (r^2-r^-2)*u32*u22"]),
    ((3, 1), &["r^4*u21*u32 - r^8*u22*u31", "-u31*u22 + r^4*u32*u21"]),
    (
        (1, 2),
        &["-r^-4*u12*u33 + u13*u32", "r^-4*u32*u13 - u33*u12", "-r^-4/(r^2-r^-2)*(u22*u23 - r^4*u23*u22)"],
    ),
    (
        (2, 2),
        &[
            "u11*u33 - u13*u31 + (r^2-r^-2)*u12*u32",
            "-u31*u13 + u33*u11 - (r^2-r^-2)*u32*u12",
            "1/(r^2-r^-2)*(u21*u23 - u23*u21 + (r^2-r^-2)*u22*u22)",
        ],
    ),
    (
        (3, 2),
        &["-u11*u32 + r^4*u12*u31", "r^-4*u31*u12 - r^4*u32*u11", "1/(r^2-r^-2)*(-u21*u22 + r^4*u22*u21)"],
    ),
    ((1, 3), &["r^-4*u12*u23 - u13*u22", "-r^-8*u22*u13 + r^-4*u23*u12"]),
    (
        (2, 3),
        &[
            "-u11*u23 + u13*u21 - (r^2-r^-2)*u12*u22",
            "r^-4*u21*u13 - r^-4*u23*u11 + r^-4*(r^2-r^-2)*u22*u12",
        ],
    ),
    ((3, 3), &["u11*u22 - r^4*u12*u21", "-r^-8*u21*u12 + r^-4*u22*u11"]),
];

pub fn cofactor_table() -> BTreeMap<(usize, usize), Vec<NcPoly>> {
    COFACTOR_LIST.iter().map(|(k, v)| (*k, v.iter().map(|s| poly(s)).collect())).collect()
}

/// The cofactor expression with `b = d` used for `(u hat u)_{da}`, `d != a`;
/// for `d = a` the first expression with `b < c`.
pub fn cofactor_for_row(m: usize, a: usize, d: usize) -> NcPoly {
    let (b, c) = if d != a {
        (d, 6 - a - d)
    } else {
        match a {
            1 => (2, 3),
            2 => (1, 3),
            _ => (1, 2),
        }
    };
    cofactor_expr(m, a, b, c).expect("distinct indices give a nonzero epsilon")
}

/// `(u hat u)_{da} - delta_{da} D_q`
pub fn cofactor_target(d: usize, a: usize) -> NcPoly {
    let mut p = NcPoly::zero(alphabet());
    for m in 1..=3 {
        p = p.add(&u(d, m).mul(&cofactor_for_row(m, a, d)));
    }
    if d == a {
        p = p.sub(&quantum_determinant());
    }
    p
}

/// `S(u_kj) = q^{rho_j - rho_k} u_{j'k'}`
pub fn antipode_gen(k: usize, j: usize) -> NcPoly {
    u(4 - j, 4 - k).scale(&Scalar::r_pow(2 * (rmatrix::rho2(j, 3) - rmatrix::rho2(k, 3))))
}

pub fn antipode_matrix() -> NcMatrix {
    NcMatrix::from_fn(3, 3, |k, j| antipode_gen(k + 1, j + 1))
}

/// Anti-multiplicative extension in the free algebra.
pub fn antipode(p: &NcPoly) -> NcPoly {
    let mut acc = NcPoly::zero(alphabet());
    for (w, c) in p.terms() {
        let mut t = NcPoly::one(alphabet());
        for &l in w.as_slice().iter().rev() {
            let (k, j) = indices(l);
            t = t.mul(&antipode_gen(k, j));
        }
        acc.add_scaled(&t, c);
    }
    acc
}

/// q-real: `(u_jk)^* = q^{rho_j - rho_k} u_{j'k'}`; unimodular: fixed.
pub fn star_gen(j: usize, k: usize, regime: Regime) -> NcPoly {
    match regime {
        Regime::QReal => u(4 - j, 4 - k).scale(&Scalar::r_pow(2 * (rmatrix::rho2(j, 3) - rmatrix::rho2(k, 3)))),
        Regime::Unimodular => u(j, k),
    }
}

/// Antilinear anti-multiplicative star in the free algebra.
pub fn star(p: &NcPoly, regime: Regime) -> NcPoly {
    p.star(
        &|l| {
            let (j, k) = indices(l);
            Some(star_gen(j, k, regime))
        },
        regime,
    )
    .expect("total generator map")
}

/// Multiplicative extension of `u_ij -> sum_k u_ik (x) u_kj`, unreduced.
pub fn coproduct(p: &NcPoly) -> Tensor2 {
    let a = alphabet();
    let mut out = Tensor2::zero(a, a);
    for (w, c) in p.terms() {
        let mut acc = Tensor2::one(a, a);
        for &l in w.as_slice() {
            let (i, j) = indices(l);
            let mut d = Tensor2::zero(a, a);
            for k in 1..=3 {
                d.add_term(Word::letter(letter(i, k)), Word::letter(letter(k, j)), Scalar::one());
            }
            acc = acc.mul(&d);
        }
        out = out.add(&acc.scale(c));
    }
    out
}

/// `u_ij -> delta_ij`
pub fn counit(p: &NcPoly) -> Scalar {
    let mut acc = Scalar::zero();
    for (w, c) in p.terms() {
        if w.as_slice().iter().all(|&l| {
            let (i, j) = indices(l);
            i == j
        }) {
            acc = &acc + c;
        }
    }
    acc
}

/// `u11 -> z`, `u22 -> 1`, `u33 -> zinv`, off-diagonal `-> 0`, then cancel.
pub fn so2_quotient(p: &NcPoly) -> NcPoly {
    let z = z_alphabet();
    let img = p.substitute(z, &|l| match indices(l) {
        (1, 1) => NcPoly::named(z, "z"),
        (2, 2) => NcPoly::one(z),
        (3, 3) => NcPoly::named(z, "zinv"),
        _ => NcPoly::zero(z),
    });
    so2().normal_form(&img)
}

/// Texts of the covering images, indexed by letter.
pub const COVERING: [&str; 9] = ["a^2", "w*b*a", "-b^2", "w*c*a", "1 + (s + s^-1)*b*c", "-w*d*b", "-c^2", "-w*d*c", "d^2"];

pub fn phi_gen(l: Letter) -> &'static NcPoly {
    static T: OnceLock<Vec<NcPoly>> = OnceLock::new();
    &T.get_or_init(|| COVERING.iter().map(|s| slq2::poly(s)).collect())[l as usize]
}

fn word_cache() -> &'static DashMap<Word, NcPoly> {
    static C: OnceLock<DashMap<Word, NcPoly>> = OnceLock::new();
    C.get_or_init(DashMap::new)
}

/// Covering image of a word, memoized on prefixes.
pub fn cover_word(w: &Word) -> NcPoly {
    if w.is_empty() {
        return NcPoly::one(slq2::alphabet());
    }
    if w.len() == 1 {
        return phi_gen(w.as_slice()[0]).clone();
    }
    if let Some(p) = word_cache().get(w) {
        return p.clone();
    }
    let s = w.as_slice();
    let head = cover_word(&Word::from_slice(&s[..s.len() - 1]));
    let p = sl().mul(&head, phi_gen(s[s.len() - 1]));
    word_cache().insert(w.clone(), p.clone());
    p
}

pub fn clear_cover_cache() {
    word_cache().clear();
}

/// Image under the covering map, in SL normal form.
pub fn cover(p: &NcPoly) -> NcPoly {
    let terms: Vec<(&Word, &Scalar)> = p.terms().iter().collect();
    let images = par::map(&terms, |(w, _)| cover_word(w));
    let mut acc = NcPoly::zero(slq2::alphabet());
    for ((_, c), img) in terms.iter().zip(&images) {
        acc.add_scaled(img, c);
    }
    acc
}

pub fn residual(lhs: &NcPoly, rhs: &NcPoly) -> NcPoly {
    cover(&lhs.sub(rhs))
}

/// Decides `lhs = rhs` in SO_q(3).
pub fn verify_identity(lhs: &NcPoly, rhs: &NcPoly) -> bool {
    residual(lhs, rhs).is_zero()
}

/// Covering image of a u (x) u tensor, legwise.
pub fn cover_tensor(t: &Tensor2) -> Tensor2 {
    let sa = slq2::alphabet();
    let mut out = Tensor2::zero(sa, sa);
    for ((l, r), c) in t.terms() {
        out = out.add(&Tensor2::pure(&cover_word(l).scale(c), &cover_word(r)));
    }
    out
}

pub fn covering_checks() -> Vec<Check> {
    let mut out = Vec::new();
    let rtt = rtt_residues(3).expect("N = 3");
    for ((i, j, m, n), p) in &rtt {
        out.push(Check::zero(format!("rtt[{i}{j}{m}{n}]"), &cover(p)));
    }
    for (k, p) in metric_relations(3).expect("N = 3").iter().enumerate() {
        let which = if k < 9 { "uCutC" } else { "CutCu" };
        out.push(Check::zero(format!("metric-{which}[{}{}]", k % 9 / 3 + 1, k % 3 + 1), &cover(p)));
    }
    out.push(Check::zero("det", &residual(&quantum_determinant(), &NcPoly::one(alphabet()))));
    for l in alphabet().letters() {
        let (i, j) = indices(l);
        let lhs = slq2::coproduct(phi_gen(l));
        let rhs = RewriteSystem::tensor_normal_form(sl(), sl(), &cover_tensor(&coproduct(&u(i, j))));
        out.push(Check::zero_tensor(format!("coproduct[{i}{j}]"), &lhs.sub(&rhs)));
        let e = slq2::counit(phi_gen(l));
        out.push(Check::equal(format!("counit[{i}{j}]"), &e, &counit(&u(i, j))));
    }
    out
}

pub fn rtt_checks() -> Vec<Check> {
    let mut out = Vec::new();
    let r3 = generate_rtt(3).expect("N = 3");
    let r2 = generate_rtt(2).expect("N = 2");
    out.push(Check::expect("n3-count", !r3.is_empty(), format!("{} distinct nonzero relations", r3.len())));
    out.push(Check::expect("n2-count", !r2.is_empty(), format!("{} distinct nonzero relations", r2.len())));
    let span3 = IdealSpan::build(&r3, 2);
    for (lhs, rhs) in crate::coinv::column_relations() {
        let t = poly(lhs).sub(&poly(rhs));
        let m = span3.test(&t);
        out.push(Check::expect(format!("span[{lhs} = {rhs}]"), m.member, m.diagnostic()));
    }
    let v = v_alphabet();
    let mut rels2 = r2.clone();
    rels2.extend(metric_relations(2).expect("N = 2").into_iter().filter(|p| !p.is_zero()));
    let span2 = IdealSpan::build(&rels2, 2);
    for t in ["v11*v12", "v12*v11"] {
        let m = span2.test(&crate::parse::parse_poly(t, v).expect("fixed text"));
        out.push(Check::expect(format!("n2-{t}"), m.member, m.diagnostic()));
    }
    out
}

pub fn det_checks() -> Vec<Check> {
    let d = quantum_determinant();
    let want = poly(
        "u11*u22*u33 - q*u12*u21*u33 - q*u11*u23*u32 + q*u12*u23*u31 + q*u13*u21*u32 - q^2*u13*u22*u31 - q*(s - s^-1)*u12*u22*u32",
    );
    vec![
        Check::zero("formula", &d.sub(&want)),
        Check::equal("terms", &d.len(), &7),
        Check::zero("cover", &residual(&d, &NcPoly::one(alphabet()))),
        Check::zero("so2", &so2_quotient(&d).sub(&NcPoly::one(z_alphabet()))),
    ]
}

/// Prop. (u hat u = D_q I) by membership in the O_q(3) ideal.
pub fn cofactor_memberships(bound: usize) -> Vec<((usize, usize), NcPoly, Membership)> {
    let rels = presentation(3, false).expect("N = 3");
    let span = IdealSpan::build(&rels, bound);
    let mut out = Vec::new();
    for d in 1..=3 {
        for a in 1..=3 {
            let t = cofactor_target(d, a);
            let m = span.test(&t);
            out.push(((d, a), t, m));
        }
    }
    out
}

pub fn cofactor_checks(bound: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let table = cofactor_table();
    for ((m, a), exprs) in &table {
        for (k, e) in exprs.iter().enumerate() {
            for (l, f) in exprs.iter().enumerate().skip(k + 1) {
                out.push(Check::zero(format!("listed-pair[{m}{a}:{k}-{l}]"), &residual(e, f)));
            }
        }
        let from_eps = cofactor_alternatives(*m, *a);
        for ((b, c), p) in &from_eps {
            out.push(Check::zero(format!("eps-vs-listed[{m}{a}:{b}{c}]"), &residual(&exprs[0], p)));
        }
        let (bc, first) = &from_eps[0];
        for (k, e) in exprs.iter().enumerate().skip(1) {
            let mut ch = Check::zero(format!("listed-vs-eps[{m}{a}:{k}]"), &residual(e, first));
            ch.detail = format!("{} against (b, c) = {bc:?}", COFACTOR_LIST.iter().find(|x| x.0 == (*m, *a)).map_or("", |x| x.1[k]));
            out.push(ch);
        }
        out.push(Check::zero(format!("antipode[{m}{a}]"), &residual(&antipode_gen(*m, *a), &exprs[0])));
    }
    let rels = presentation(3, false).expect("N = 3");
    for ((d, a), t, m) in cofactor_memberships(bound) {
        let id = format!("u-hat-u[{d}{a}]");
        if m.member {
            let cert = m.certificate.as_ref().expect("members carry a certificate");
            let ok = cert.verify(&rels, &t);
            let terms = cert.terms.len();
            out.push(Check::expect(id, ok, format!("certificate with {terms} terms at bound {}: {}", m.bound, cert.render())));
        } else {
            out.push(Check::inconclusive(id, m.diagnostic()));
        }
    }
    let s = antipode_matrix();
    let um = NcMatrix::from_fn(3, 3, |i, j| u(i + 1, j + 1));
    let id = NcMatrix::identity(alphabet(), 3);
    let su = s.mul(&um).sub(&id);
    let us = um.mul(&s).sub(&id);
    for i in 0..3 {
        for j in 0..3 {
            out.push(Check::zero(format!("S(u)u[{}{}]", i + 1, j + 1), &cover(su.get(i, j))));
            out.push(Check::zero(format!("uS(u)[{}{}]", i + 1, j + 1), &cover(us.get(i, j))));
        }
    }
    out.push(Check::zero("hat-u22", &residual(&table[&(2, 2)][0], &u(2, 2))));
    out
}

pub fn star_checks(regime: Regime) -> Vec<Check> {
    let mut out = Vec::new();
    let rels = presentation(3, true).expect("N = 3");
    for (k, g) in rels.iter().enumerate() {
        out.push(Check::zero(format!("relation[{k}]"), &cover(&star(g, regime))));
    }
    let d = quantum_determinant();
    out.push(Check::zero("det-real", &residual(&star(&d, regime), &d)));
    for l in alphabet().letters() {
        let (i, j) = indices(l);
        let lhs = cover(&star(&u(i, j), regime));
        let rhs = slq2::star(phi_gen(l), regime);
        out.push(Check::zero(format!("intertwine[{i}{j}]"), &lhs.sub(&rhs)));
        let dl = crate::coinv::coaction(&star(&u(i, j), regime));
        let dr = crate::coinv::star_tensor(&crate::coinv::coaction(&u(i, j)), regime);
        out.push(Check::zero_tensor(format!("coaction[{i}{j}]"), &dl.sub(&dr)));
    }
    out
}

pub fn so2_checks() -> Vec<Check> {
    let z = z_alphabet();
    let one = NcPoly::one(z);
    let mut out = vec![
        Check::zero("u12", &so2_quotient(&u(1, 2))),
        Check::zero("u11u33", &so2_quotient(&poly("u11*u33")).sub(&one)),
        Check::zero("det", &so2_quotient(&quantum_determinant()).sub(&one)),
    ];
    for (k, g) in presentation(3, true).expect("N = 3").iter().enumerate() {
        out.push(Check::zero(format!("relation[{k}]"), &so2_quotient(g)));
    }
    for l in alphabet().letters() {
        let (i, j) = indices(l);
        let d = coproduct(&u(i, j));
        let img = d.map_legs(&|w| so2_quotient(&NcPoly::word(alphabet(), w.clone())), &|w| {
            so2_quotient(&NcPoly::word(alphabet(), w.clone()))
        });
        let want = Tensor2::pure(&so2_quotient(&u(i, j)), &so2_quotient(&u(i, j)));
        let diag = if i == j { want } else { Tensor2::zero(z, z) };
        let got = if img.is_zero() { Tensor2::zero(z, z) } else { img };
        out.push(Check::zero_tensor(format!("hopf-ideal[{i}{j}]"), &got.sub(&diag)));
    }
    out
}
