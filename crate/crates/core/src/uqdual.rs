//! U_{q^{1/2}}(sl2): PBW normal form, Hopf maps, the pairing with SO_q(3),
//! the left and right actions, real forms and the Casimir.
//!
//! The pairing is evaluated through the 3-dimensional representation
//! `rho(f)_{jk} = <f, u_jk>`: on a word of length n it is a matrix entry of
//! `rho^{(x)n}(Delta^{(n)} f)`, and all four Hopf generators act on tensor basis
//! vectors monomially.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use crate::coinv;
use crate::freealg::{Alphabet, Letter, NcPoly, Tensor2, Word};
use crate::linalg::Echelon;
use crate::par;
use crate::parse::{parse_poly, parse_scalar};
use crate::report::Check;
use crate::rewrite::RewriteSystem;
use crate::scalar::{Regime, Scalar};
use crate::soq3;
use crate::systems::{uq, uq_alphabet, UQ_RULES};

pub const F: Letter = 0;
pub const K: Letter = 1;
pub const KINV: Letter = 2;
pub const E: Letter = 3;

pub fn alphabet() -> &'static Arc<Alphabet> {
    uq_alphabet()
}

pub fn gen(name: &str) -> NcPoly {
    NcPoly::named(alphabet(), name)
}

/// Parse and reduce.
pub fn poly(src: &str) -> NcPoly {
    reduce(&parse_poly(src, alphabet()).unwrap_or_else(|e| panic!("{src}: {e}")))
}

pub fn reduce(p: &NcPoly) -> NcPoly {
    uq().normal_form(p)
}

pub fn mul(a: &NcPoly, b: &NcPoly) -> NcPoly {
    uq().mul(a, b)
}

fn coproduct_table() -> &'static [Tensor2; 4] {
    static T: OnceLock<[Tensor2; 4]> = OnceLock::new();
    T.get_or_init(|| {
        let one = NcPoly::one(alphabet());
        let t = |a: &NcPoly, b: &NcPoly| Tensor2::pure(a, b);
        let (e, f, k, ki) = (gen("E"), gen("F"), gen("K"), gen("Kinv"));
        // indexed by letter: F, K, Kinv, E
        [t(&f, &one).add(&t(&ki, &f)), t(&k, &k), t(&ki, &ki), t(&e, &k).add(&t(&one, &e))]
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
            acc = RewriteSystem::tensor_mul(uq(), uq(), &acc, coproduct_letter(l));
        }
        out = out.add(&acc.scale(c));
    }
    out
}

/// `K, Kinv -> 1`, `E, F -> 0`; valid on any representative.
pub fn counit(p: &NcPoly) -> Scalar {
    let mut acc = Scalar::zero();
    for (w, c) in p.terms() {
        if w.as_slice().iter().all(|&l| l == K || l == KINV) {
            acc = &acc + c;
        }
    }
    acc
}

pub fn antipode_letter(l: Letter) -> NcPoly {
    match l {
        K => gen("Kinv"),
        KINV => gen("K"),
        E => gen("E").mul(&gen("Kinv")).neg(),
        _ => gen("K").mul(&gen("F")).neg(),
    }
}

/// Anti-multiplicative extension, reduced.
pub fn antipode(p: &NcPoly) -> NcPoly {
    let mut acc = NcPoly::zero(alphabet());
    for (w, c) in p.terms() {
        let factors: Vec<NcPoly> = w.as_slice().iter().rev().map(|&l| antipode_letter(l)).collect();
        acc.add_scaled(&uq().product(&factors), c);
    }
    acc
}

/// Star structures on U.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RealForm {
    /// q real: `E* = FK`, `F* = Kinv E`.
    Su2,
    /// q real: `E* = -FK`, `F* = -Kinv E`.
    Su11,
    /// |q| = 1: `E* = -E`, `F* = -F`.
    Sl2R,
}

impl RealForm {
    pub fn regime(self) -> Regime {
        match self {
            RealForm::Su2 | RealForm::Su11 => Regime::QReal,
            RealForm::Sl2R => Regime::Unimodular,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RealForm::Su2 => "su2",
            RealForm::Su11 => "su11",
            RealForm::Sl2R => "sl2R",
        }
    }
}

pub fn star_letter(l: Letter, form: RealForm) -> NcPoly {
    match (l, form) {
        (K, _) => gen("K"),
        (KINV, _) => gen("Kinv"),
        (E, RealForm::Su2) => gen("F").mul(&gen("K")),
        (E, RealForm::Su11) => gen("F").mul(&gen("K")).neg(),
        (_, RealForm::Su2) => gen("Kinv").mul(&gen("E")),
        (_, RealForm::Su11) => gen("Kinv").mul(&gen("E")).neg(),
        (_, RealForm::Sl2R) => NcPoly::gen(alphabet(), l).neg(),
    }
}

/// Antilinear anti-multiplicative star, reduced.
pub fn star(p: &NcPoly, form: RealForm) -> NcPoly {
    reduce(&p.star(&|l| Some(star_letter(l, form)), form.regime()).expect("total generator map"))
}

/// `(s + s^-1) / (s - s^-1)^2`, the value of the K-part of `C_q` on K-invariants.
pub fn casimir_shift() -> Scalar {
    let d = Scalar::s_minus();
    &(&Scalar::s_pow(1) + &Scalar::s_pow(-1)) / &(&d * &d)
}

/// The three displayed forms of the Casimir, verbatim.
pub const CASIMIR_FORMS: [&str; 3] = [
    "E*F + (s^-1*K + s*Kinv)/(s - s^-1)^2",
    "F*E + (s*K + s^-1*Kinv)/(s - s^-1)^2",
    "(E*F + F*E)/2 + (s + s^-1)/(s - s^-1)^2*(K + Kinv)",
];

pub fn casimir_forms() -> [NcPoly; 3] {
    CASIMIR_FORMS.map(poly)
}

/// `C_q` in normal form.
pub fn casimir() -> NcPoly {
    poly(CASIMIR_FORMS[0])
}

/// `rho(g)` for the four generators, 1-based entries; zero where absent.
fn rho_table() -> &'static [[[Scalar; 3]; 3]; 4] {
    static T: OnceLock<[[[Scalar; 3]; 3]; 4]> = OnceLock::new();
    T.get_or_init(|| {
        let mut t: [[[Scalar; 3]; 3]; 4] = Default::default();
        for (g, i, j, v) in pairing_values() {
            if g != usize::MAX {
                t[g][i - 1][j - 1] = v;
            }
        }
        t
    })
}

/// Nonzero values `<g, u_ij>` on the Hopf generators, with `alpha = 1`.
/// The unit of U is encoded as `usize::MAX`.
pub fn pairing_values() -> Vec<(usize, usize, usize, Scalar)> {
    const T: [(&str, usize, usize, &str); 13] = [
        ("1", 1, 1, "1"),
        ("1", 2, 2, "1"),
        ("1", 3, 3, "1"),
        ("K", 1, 1, "q^-1"),
        ("K", 2, 2, "1"),
        ("K", 3, 3, "q"),
        ("Kinv", 1, 1, "q"),
        ("Kinv", 2, 2, "1"),
        ("Kinv", 3, 3, "q^-1"),
        ("E", 2, 1, "eta"),
        ("E", 3, 2, "-s*eta"),
        ("F", 1, 2, "eta"),
        ("F", 2, 3, "-s^-1*eta"),
    ];
    T.iter()
        .map(|&(g, i, j, v)| {
            let l = if g == "1" { usize::MAX } else { alphabet().letter(g).expect("generator") as usize };
            (l, i, j, parse_scalar(v).expect("table value"))
        })
        .collect()
}

pub fn rho(g: Letter, i: usize, j: usize) -> &'static Scalar {
    &rho_table()[g as usize][i - 1][j - 1]
}

/// `rho(g) e_j = c e_i`
fn col_image(g: Letter, j: u8) -> Option<(u8, Scalar)> {
    (1..=3u8).find_map(|i| {
        let v = rho(g, i as usize, j as usize);
        (!v.is_zero()).then(|| (i, v.clone()))
    })
}

/// `e_i^T rho(g) = c e_j^T`
fn row_image(g: Letter, i: u8) -> Option<(u8, Scalar)> {
    (1..=3u8).find_map(|j| {
        let v = rho(g, i as usize, j as usize);
        (!v.is_zero()).then(|| (j, v.clone()))
    })
}

/// Legs of the iterated coproduct `Delta^{(n)}(g)`; `None` is the unit. For
/// n = 0 this is the counit.
fn legs(g: Letter, n: usize) -> Vec<Vec<Option<Letter>>> {
    match g {
        K | KINV => vec![vec![Some(g); n]],
        E => (0..n).map(|p| (0..n).map(|t| if t < p { None } else if t == p { Some(E) } else { Some(K) }).collect()).collect(),
        _ => (0..n).map(|p| (0..n).map(|t| if t < p { Some(KINV) } else if t == p { Some(F) } else { None }).collect()).collect(),
    }
}

type Vector = BTreeMap<Vec<u8>, Scalar>;

fn accumulate(v: &mut Vector, k: Vec<u8>, c: Scalar) {
    use std::collections::btree_map::Entry;
    match v.entry(k) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            let s = e.get() + &c;
            if s.is_zero() {
                e.remove();
            } else {
                e.insert(s);
            }
        }
    }
}

/// Apply `rho^{(x)n}(Delta^{(n)} g)` to a sparse vector, from the left on
/// columns (`rows = false`) or from the right on rows (`rows = true`).
fn apply(g: Letter, v: &Vector, rows: bool) -> Vector {
    let mut out = Vector::new();
    for (idx, c) in v {
        'term: for leg in legs(g, idx.len()) {
            let mut k = idx.clone();
            let mut coef = c.clone();
            for (t, f) in leg.iter().enumerate() {
                let Some(f) = f else { continue };
                let img = if rows { row_image(*f, k[t]) } else { col_image(*f, k[t]) };
                let Some((to, x)) = img else { continue 'term };
                k[t] = to;
                coef = &coef * &x;
            }
            accumulate(&mut out, k, coef);
        }
    }
    out
}

fn word_indices(w: &Word) -> (Vec<u8>, Vec<u8>) {
    w.as_slice()
        .iter()
        .map(|&l| {
            let (i, j) = soq3::indices(l);
            (i as u8, j as u8)
        })
        .unzip()
}

fn u_word(rows: &[u8], cols: &[u8]) -> Word {
    Word::from_slice(&rows.iter().zip(cols).map(|(&i, &j)| soq3::letter(i as usize, j as usize)).collect::<Vec<_>>())
}

/// `rho_n(f) e_cols` for a U-polynomial `f` (unreduced words are fine).
fn act_columns(f: &NcPoly, cols: &[u8]) -> Vector {
    let mut out = Vector::new();
    for (w, c) in f.terms() {
        let mut v: Vector = [(cols.to_vec(), c.clone())].into();
        for &l in w.as_slice().iter().rev() {
            v = apply(l, &v, false);
        }
        for (k, x) in v {
            accumulate(&mut out, k, x);
        }
    }
    out
}

/// `e_rows^T rho_n(f)`.
fn act_rows(f: &NcPoly, rows: &[u8]) -> Vector {
    let mut out = Vector::new();
    for (w, c) in f.terms() {
        let mut v: Vector = [(rows.to_vec(), c.clone())].into();
        for &l in w.as_slice() {
            v = apply(l, &v, true);
        }
        for (k, x) in v {
            accumulate(&mut out, k, x);
        }
    }
    out
}

/// `<f, a>`; `f` over the U-alphabet, `a` over the u-alphabet.
pub fn pair(f: &NcPoly, a: &NcPoly) -> Scalar {
    let mut acc = Scalar::zero();
    for (w, c) in a.terms() {
        let (rows, cols) = word_indices(w);
        if let Some(x) = act_columns(f, &cols).get(&rows) {
            acc = &acc + &(c * x);
        }
    }
    acc
}

/// `a <| f = <f, a_(1)> a_(2)`
pub fn right_action(a: &NcPoly, f: &NcPoly) -> NcPoly {
    let mut out = NcPoly::zero(soq3::alphabet());
    for (w, c) in a.terms() {
        let (rows, cols) = word_indices(w);
        for (m, x) in act_rows(f, &rows) {
            out.add_term(u_word(&m, &cols), c * &x);
        }
    }
    out
}

/// `f |> a = a_(1) <f, a_(2)>`
pub fn left_action(f: &NcPoly, a: &NcPoly) -> NcPoly {
    let mut out = NcPoly::zero(soq3::alphabet());
    for (w, c) in a.terms() {
        let (rows, cols) = word_indices(w);
        for (m, x) in act_columns(f, &cols) {
            out.add_term(u_word(&rows, &m), c * &x);
        }
    }
    out
}

/// `a <| E^m`
pub fn right_power(a: &NcPoly, l: Letter, m: usize) -> NcPoly {
    right_action(a, &NcPoly::word(alphabet(), Word::from_slice(&vec![l; m])))
}

/// The operator `C_q` acting on K-invariants with the constant removed.
pub fn casimir_op() -> NcPoly {
    gen("E").mul(&gen("F"))
}

/// Highest weight vectors `y3^J <| E^m`.
pub fn v_j(j: usize, m: usize) -> NcPoly {
    right_power(&soq3::poly("y3").pow(j), E, m)
}

/// Displayed generator actions: (U generator, source index, coefficient, target index).
/// Right action moves rows, left action moves columns.
pub const RIGHT_TABLE: [(&str, usize, &str, usize); 12] = [
    ("K", 1, "q^-1", 1),
    ("K", 2, "1", 2),
    ("K", 3, "q", 3),
    ("Kinv", 1, "q", 1),
    ("Kinv", 2, "1", 2),
    ("Kinv", 3, "q^-1", 3),
    ("E", 1, "0", 1),
    ("E", 2, "eta", 1),
    ("E", 3, "-s*eta", 2),
    ("F", 1, "eta", 2),
    ("F", 2, "-s^-1*eta", 3),
    ("F", 3, "0", 3),
];

pub const LEFT_TABLE: [(&str, usize, &str, usize); 12] = [
    ("K", 1, "q^-1", 1),
    ("K", 2, "1", 2),
    ("K", 3, "q", 3),
    ("Kinv", 1, "q", 1),
    ("Kinv", 2, "1", 2),
    ("Kinv", 3, "q^-1", 3),
    ("E", 1, "eta", 2),
    ("E", 2, "-s*eta", 3),
    ("E", 3, "0", 3),
    ("F", 1, "0", 1),
    ("F", 2, "eta", 1),
    ("F", 3, "-s^-1*eta", 2),
];

fn words_upto(alpha: &Arc<Alphabet>, len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..len {
        layer = layer.iter().flat_map(|w| alpha.letters().map(move |l| w.concat(&[l]))).collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn words_of(alpha: &Arc<Alphabet>, len: usize) -> Vec<Word> {
    words_upto(alpha, len).into_iter().filter(|w| w.len() == len).collect()
}

fn gen_names() -> [&'static str; 4] {
    ["K", "Kinv", "E", "F"]
}

/// Both conditions `<f*, a> = conj <f, S(a)*>` and `<f, a*> = conj <S(f)*, a>`
/// over U-words of length `lf` and u-words of length `la`; returns the failing pairs.
pub fn star_pairing_violations(form: RealForm, lf: usize, la: usize) -> Vec<String> {
    let regime = form.regime();
    let us = words_of(soq3::alphabet(), la);
    let fs = words_of(alphabet(), lf);
    let bad: Vec<Vec<String>> = par::map(&fs, |fw| {
        let f = NcPoly::word(alphabet(), fw.clone());
        let fstar = star(&f, form);
        let sfstar = star(&antipode(&f), form);
        let mut bad = Vec::new();
        for aw in &us {
            let a = NcPoly::word(soq3::alphabet(), aw.clone());
            let lhs1 = pair(&fstar, &a);
            let rhs1 = pair(&f, &soq3::star(&soq3::antipode(&a), regime)).conjugate(regime);
            let lhs2 = pair(&f, &soq3::star(&a, regime));
            let rhs2 = pair(&sfstar, &a).conjugate(regime);
            if lhs1 != rhs1 || lhs2 != rhs2 {
                bad.push(format!("<{}, {}>", fw.render(alphabet()), aw.render(soq3::alphabet())));
            }
        }
        bad
    });
    bad.into_iter().flatten().collect()
}

fn zero_or_list(id: String, bad: Vec<String>, total: usize) -> Check {
    if bad.is_empty() {
        Check::pass(id, format!("{total} cases"))
    } else {
        let n = bad.len();
        Check::fail(id, format!("{n} of {total} cases fail"), bad.into_iter().take(8).collect::<Vec<_>>().join("; "), n)
    }
}

/// Pairing table, well-definedness, Hopf compatibility, action tables, K-invariance
/// and the real forms.
pub fn pairing_checks() -> Vec<Check> {
    let ua = soq3::alphabet();
    let mut out = Vec::new();

    // Full generator table, including the zeros.
    let table = pairing_values();
    for g in std::iter::once("1").chain(gen_names()) {
        let f = if g == "1" { NcPoly::one(alphabet()) } else { gen(g) };
        let gl = if g == "1" { usize::MAX } else { alphabet().letter(g).unwrap() as usize };
        for i in 1..=3 {
            for j in 1..=3 {
                let want = table.iter().find(|t| t.0 == gl && t.1 == i && t.2 == j).map(|t| t.3.clone()).unwrap_or_else(Scalar::zero);
                out.push(Check::equal(format!("table[<{g},u{i}{j}>]"), &pair(&f, &soq3::u(i, j)), &want));
            }
        }
    }
    for g in ["E", "F", "K", "E*F"] {
        let f = poly(g);
        out.push(Check::equal(format!("unit[<{g},1>]"), &pair(&f, &NcPoly::one(ua)), &counit(&f)));
    }

    // The pairing descends to both quotients.
    for (k, (l, r)) in UQ_RULES.iter().enumerate() {
        let rel = parse_poly(l, alphabet()).unwrap().sub(&parse_poly(r, alphabet()).unwrap());
        let mut bad = Vec::new();
        let mut total = 0;
        for aw in words_upto(ua, 2) {
            total += 1;
            let v = pair(&rel, &NcPoly::word(ua, aw.clone()));
            if !v.is_zero() {
                bad.push(format!("{} -> {v}", aw.render(ua)));
            }
        }
        out.push(zero_or_list(format!("descends-U[{k}:{l}]"), bad, total));
    }
    let rels = soq3::presentation(3, true).expect("N=3 presentation");
    let fwords = words_upto(alphabet(), 4);
    let bad: Vec<Vec<String>> = par::map(&fwords, |fw| {
        let f = NcPoly::word(alphabet(), fw.clone());
        rels.iter().enumerate().filter(|(_, r)| !pair(&f, r).is_zero()).map(|(i, _)| format!("{}:rel{i}", fw.render(alphabet()))).collect()
    });
    out.push(zero_or_list("descends-SO[|f|<=4]".into(), bad.into_iter().flatten().collect(), fwords.len() * rels.len()));

    // Hopf compatibility: <S f, a> = <f, S a> and <fg, a> = <f (x) g, Delta a>.
    let mut bad = Vec::new();
    let aw2 = words_upto(ua, 2);
    for fw in words_upto(alphabet(), 2) {
        let f = NcPoly::word(alphabet(), fw.clone());
        for aw in &aw2 {
            let a = NcPoly::word(ua, aw.clone());
            if pair(&antipode(&f), &a) != pair(&f, &soq3::antipode(&a)) {
                bad.push(format!("S:<{},{}>", fw.render(alphabet()), aw.render(ua)));
            }
        }
    }
    out.push(zero_or_list("antipode-dual[|f|,|a|<=2]".into(), bad, 21 * aw2.len()));
    let mut bad = Vec::new();
    for gw in words_upto(alphabet(), 2) {
        for hw in alphabet().letters() {
            let (g, h) = (NcPoly::word(alphabet(), gw.clone()), gen(alphabet().symbol(hw)));
            for aw in words_upto(ua, 1) {
                let a = NcPoly::word(ua, aw.clone());
                let mut via = Scalar::zero();
                for ((l, r), c) in soq3::coproduct(&a).terms() {
                    via = &via + &(&(c * &pair(&g, &NcPoly::word(ua, l.clone()))) * &pair(&h, &NcPoly::word(ua, r.clone())));
                }
                if pair(&g.mul(&h), &a) != via {
                    bad.push(format!("<{}{}, {}>", gw.render(alphabet()), alphabet().symbol(hw), aw.render(ua)));
                }
            }
        }
    }
    out.push(zero_or_list("product-dual".into(), bad, 21 * 4 * 10));

    // U is a Hopf algebra: counit, coassociativity on generators, antipode.
    for g in gen_names() {
        let x = gen(g);
        let d = coproduct(&x);
        let mut left = NcPoly::zero(alphabet());
        let mut right = NcPoly::zero(alphabet());
        let mut ms = NcPoly::zero(alphabet());
        let mut sm = NcPoly::zero(alphabet());
        for ((l, r), c) in d.terms() {
            let (lp, rp) = (NcPoly::word(alphabet(), l.clone()), NcPoly::word(alphabet(), r.clone()));
            left.add_scaled(&rp, &(c * &counit(&lp)));
            right.add_scaled(&lp, &(c * &counit(&rp)));
            ms.add_scaled(&mul(&antipode(&lp), &rp), c);
            sm.add_scaled(&mul(&lp, &antipode(&rp)), c);
        }
        out.push(Check::zero(format!("hopf[{g}:counit-left]"), &left.sub(&x)));
        out.push(Check::zero(format!("hopf[{g}:counit-right]"), &right.sub(&x)));
        out.push(Check::zero(format!("hopf[{g}:m(S,id)]"), &ms.sub(&NcPoly::scalar(alphabet(), counit(&x)))));
        out.push(Check::zero(format!("hopf[{g}:m(id,S)]"), &sm.sub(&NcPoly::scalar(alphabet(), counit(&x)))));
        // (Delta (x) id) Delta vs (id (x) Delta) Delta, compared by pairing with all u-words of length 3.
        let mut bad = Vec::new();
        for aw in words_of(ua, 3) {
            let a = NcPoly::word(ua, aw.clone());
            let direct = pair(&x, &a);
            let (a1, a23) = (NcPoly::word(ua, Word::from_slice(&aw.as_slice()[..1])), NcPoly::word(ua, Word::from_slice(&aw.as_slice()[1..])));
            let (a12, a3) = (NcPoly::word(ua, Word::from_slice(&aw.as_slice()[..2])), NcPoly::word(ua, Word::from_slice(&aw.as_slice()[2..])));
            let mut lhs = Scalar::zero();
            let mut rhs = Scalar::zero();
            for ((l, r), c) in d.terms() {
                let (lp, rp) = (NcPoly::word(alphabet(), l.clone()), NcPoly::word(alphabet(), r.clone()));
                lhs = &lhs + &(&(c * &pair(&lp, &a1)) * &pair(&rp, &a23));
                rhs = &rhs + &(&(c * &pair(&lp, &a12)) * &pair(&rp, &a3));
            }
            if lhs != direct || rhs != direct {
                bad.push(aw.render(ua));
            }
        }
        out.push(zero_or_list(format!("hopf[{g}:coassoc]"), bad, 729));
    }
    out.push(Check::zero("antipode[S(E)=-E*Kinv]", &antipode(&gen("E")).sub(&poly("-E*Kinv"))));

    // Displayed action tables.
    for (tname, table, right) in [("ractso", &RIGHT_TABLE, true), ("lactso", &LEFT_TABLE, false)] {
        for &(g, from, coef, to) in table.iter() {
            let c = parse_scalar(coef).unwrap();
            let mut bad = Vec::new();
            for other in 1..=3 {
                let (src, want) = if right {
                    (soq3::u(from, other), soq3::u(to, other).scale(&c))
                } else {
                    (soq3::u(other, from), soq3::u(other, to).scale(&c))
                };
                let got = if right { right_action(&src, &gen(g)) } else { left_action(&gen(g), &src) };
                if got != want {
                    bad.push(format!("{} -> {}", src.render(), got.render()));
                }
            }
            out.push(zero_or_list(format!("{tname}[{g}:{from}]"), bad, 3));
        }
    }
    for k in 1..=3 {
        let y = soq3::poly(&format!("y{k}"));
        let yk = right_action(&y, &gen("E"));
        out.push(Check::expect(format!("preserves-B[y{k}<|E]"), coinv::is_coinvariant(&yk), yk.render()));
    }

    // K |> b = b exactly on weight-zero words; E and F leave B.
    let mut bad = Vec::new();
    let mut n = 0;
    for w in words_upto(ua, 4) {
        let a = NcPoly::word(ua, w.clone());
        let fixed = left_action(&gen("K"), &a) == a;
        if coinv::word_weight(&w) == 0 {
            n += 1;
        }
        if fixed != (coinv::word_weight(&w) == 0) {
            bad.push(w.render(ua));
        }
    }
    out.push(zero_or_list(format!("K-invariants[{n} weight-0 words]"), bad, words_upto(ua, 4).len()));
    let y2 = soq3::poly("y2");
    out.push(Check::expect("E-leaves-B", !coinv::is_coinvariant(&left_action(&gen("E"), &y2)), "E |> y2"));

    // Real forms.
    for (form, pairs) in [(RealForm::Su2, "SO_q(3,R)"), (RealForm::Sl2R, "SO_q(1,2)")] {
        for (lf, la) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            let bad = star_pairing_violations(form, lf, la);
            let total = 4usize.pow(lf as u32) * 9usize.pow(la as u32);
            out.push(zero_or_list(format!("real-form[{}~{pairs}:{lf}x{la}]", form.name()), bad, total));
        }
    }
    let bad = star_pairing_violations(RealForm::Su11, 1, 1);
    out.push(Check::expect(
        "real-form[su11 incompatible]",
        !bad.is_empty(),
        if bad.is_empty() { "no violation found".to_string() } else { format!("{} violations, e.g. {}", bad.len(), bad[0]) },
    ));
    out
}

/// `E |> y_l^n` and `F |> y_l^n` as displayed.
pub fn ladder(l: usize, n: usize, raising: bool) -> (NcPoly, NcPoly) {
    let y = soq3::poly(&format!("y{l}"));
    let yn1 = y.pow(n - 1);
    let ni = n as i32;
    if raising {
        let lhs = left_action(&gen("E"), &y.pow(n));
        let c = &(&Scalar::s_pow(2 - ni) * &Scalar::eta()) * &Scalar::qint(n as i64);
        (lhs, yn1.mul(&soq3::u(l, 3)).scale(&-c))
    } else {
        let lhs = left_action(&gen("F"), &y.pow(n));
        let c = &(&Scalar::s_pow(ni - 1) * &Scalar::eta()) * &Scalar::qint(n as i64);
        (lhs, yn1.mul(&soq3::u(l, 1)).scale(&c))
    }
}

/// Rank of a family of u-polynomials in SO_q(3), computed on covering images.
pub fn rank_in_quotient(ps: &[NcPoly]) -> usize {
    let images = par::map(ps, soq3::cover);
    let mut ech = Echelon::new(false);
    for (i, p) in images.iter().enumerate() {
        ech.insert(i, p);
    }
    ech.rank()
}

/// Casimir forms and centrality, eigenvalues on `V_J`, ladders, dimensions.
pub fn casimir_checks(max_j: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let [c1, c2, c3] = casimir_forms();
    out.push(Check::zero("forms[EF-form=FE-form]", &c1.sub(&c2)));
    out.push(Check::zero("forms[EF-form=symmetric-form]", &c1.sub(&c3)));
    out.push(Check::zero(
        "forms[symmetric with (K+Kinv)/2]",
        &c1.sub(&poly("(E*F + F*E)/2 + (s + s^-1)/(s - s^-1)^2*(K + Kinv)/2")),
    ));
    for g in gen_names() {
        let x = gen(g);
        out.push(Check::zero(format!("central[{g}]"), &mul(&c1, &x).sub(&mul(&x, &c1))));
    }
    out.push(Check::equal("eta^2=[2]", &(&Scalar::eta() * &Scalar::eta()), &Scalar::qint(2)));

    // On K-invariants: C_q = EF + shift = FE + shift.
    let ef = casimir_op();
    let fe = gen("F").mul(&gen("E"));
    let samples = ["y1", "y2", "y3", "y1*y3", "y2^2", "y3*y1", "y1*y2*y3"];
    for s in samples {
        let b = soq3::poly(s);
        let via_c = left_action(&c1, &b).sub(&b.scale(&casimir_shift()));
        out.push(Check::zero(format!("shift[{s}]"), &soq3::residual(&via_c, &left_action(&ef, &b))));
        out.push(Check::zero(format!("EF=FE on B[{s}]"), &soq3::residual(&left_action(&ef, &b), &left_action(&fe, &b))));
    }
    for k in 1..=3 {
        let y = soq3::poly(&format!("y{k}"));
        out.push(Check::zero(format!("cqn1[y{k}]"), &soq3::residual(&left_action(&ef, &y), &y.scale(&Scalar::qint(2)))));
    }

    // q-number identities used in the induction.
    for n in 2..=(max_j as i64 + 2) {
        let lhs = Scalar::qint(n);
        let rhs = &(&Scalar::qint(2) * &Scalar::qint(n - 1)) - &Scalar::qint(n - 2);
        out.push(Check::equal(format!("qint-recursion[{n}]"), &lhs, &rhs));
    }
    for n in 1..=max_j as i64 {
        let ni = n as i32;
        let lhs = &(&Scalar::qint(2) + &(&Scalar::s_pow(-(ni + 2)) * &Scalar::qint(n))) + &(&Scalar::s_pow(ni + 2) * &Scalar::qint(n));
        let rhs = &Scalar::qint(n + 1) * &(&(&Scalar::qint(2) * &Scalar::qint(n + 1)) - &(&Scalar::int(2) * &Scalar::qint(n)));
        out.push(Check::equal(format!("qint-step[{n}]"), &lhs, &rhs));
    }

    // Products used in the induction, for l = 1, 3.
    for l in [1, 3] {
        let y2 = soq3::poly(&format!("y{l}")).pow(2);
        let den = (&Scalar::one() + &Scalar::q()).inv();
        let c13 = -(&Scalar::s_pow(3) * &den);
        let c31 = -(&Scalar::s_pow(-1) * &den);
        out.push(Check::zero(format!("u{l}1u{l}3"), &soq3::residual(&soq3::u(l, 1).mul(&soq3::u(l, 3)), &y2.scale(&c13))));
        out.push(Check::zero(format!("u{l}3u{l}1"), &soq3::residual(&soq3::u(l, 3).mul(&soq3::u(l, 1)), &y2.scale(&c31))));
    }

    // Ladders.
    for l in [1, 3] {
        for n in 1..=max_j {
            for (raising, name) in [(true, "E"), (false, "F")] {
                let (lhs, rhs) = ladder(l, n, raising);
                out.push(Check::zero(format!("ladder-{name}[y{l}^{n}]"), &soq3::residual(&lhs, &rhs)));
            }
        }
    }

    // Eigenvalues on V_J, one cell per (J, m).
    let cells: Vec<(usize, usize)> = (0..=max_j).flat_map(|j| (0..=2 * j).map(move |m| (j, m))).collect();
    let eig = par::map(&cells, |&(j, m)| {
        let v = v_j(j, m);
        let lambda = &Scalar::qint(j as i64) * &Scalar::qint(j as i64 + 1);
        let res = soq3::residual(&left_action(&ef, &v), &v.scale(&lambda));
        let mut c = Check::zero(format!("eigen[J={j},m={m}]"), &res);
        if c.passed() {
            c.detail = format!("[{j}][{}]", j + 1);
        }
        (c, coinv::is_coinvariant(&v), soq3::cover(&v).is_zero())
    });
    for ((c, coinvariant, vanishes), (j, m)) in eig.into_iter().zip(&cells) {
        out.push(c);
        out.push(Check::expect(format!("coinvariant[J={j},m={m}]"), coinvariant, ""));
        out.push(Check::expect(format!("nonzero[J={j},m={m}]"), !vanishes, ""));
    }
    for j in 0..=max_j.min(4) {
        let top = v_j(j, 2 * j + 1);
        out.push(Check::zero(format!("top[y3^{j}<|E^{}]", 2 * j + 1), &soq3::cover(&top)));
    }

    // Dimensions of V_J, and the lowest weight description of the same space.
    for j in 0..=max_j.min(3) {
        let hi: Vec<NcPoly> = (0..=2 * j).map(|m| v_j(j, m)).collect();
        let lo: Vec<NcPoly> = (0..=2 * j).map(|m| right_power(&soq3::poly("y1").pow(j), F, m)).collect();
        let r_hi = rank_in_quotient(&hi);
        out.push(Check::equal(format!("dim[V_{j}]"), &r_hi, &(2 * j + 1)));
        let both: Vec<NcPoly> = hi.into_iter().chain(lo).collect();
        out.push(Check::equal(format!("dim[V_{j} via y1<|F]"), &rank_in_quotient(&both), &(2 * j + 1)));
    }

    // EF keeps weight-zero words weight-zero.
    let ua = soq3::alphabet();
    let mut bad = Vec::new();
    let mut n = 0;
    for w in words_upto(ua, 3) {
        if coinv::word_weight(&w) == 0 {
            n += 1;
            let a = NcPoly::word(ua, w.clone());
            if !coinv::is_coinvariant(&left_action(&ef, &a)) {
                bad.push(w.render(ua));
            }
        }
    }
    out.push(zero_or_list("preserves-B[EF,deg<=3]".into(), bad, n));
    out
}
