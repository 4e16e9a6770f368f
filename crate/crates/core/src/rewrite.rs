//! Normal forms against a rewrite system and critical-pair confluence checks.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::Arc;

use dashmap::DashMap;
use thiserror::Error;

use crate::freealg::{Alphabet, Letter, NcPoly, Tensor2, Word};
use crate::par;
use crate::parse;
use crate::scalar::Scalar;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RewriteError {
    #[error("rule {0}: empty left-hand side")]
    EmptyLhs(usize),
    #[error("rule {0}: left-hand side {1} already used")]
    DuplicateLhs(usize, String),
    #[error("rule {0}: term {1} is not smaller than the left-hand side")]
    NotDecreasing(usize, String),
    #[error("rule {0}: {1}")]
    Parse(usize, String),
}

/// Monomial order: degree first, then an optional per-letter weight sum, then
/// lexicographic in the alphabet order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Order {
    DegLex,
    Weighted(Vec<u32>),
}

impl Order {
    pub fn cmp(&self, a: &Word, b: &Word) -> Ordering {
        a.len().cmp(&b.len()).then_with(|| {
            let by_weight = match self {
                Order::DegLex => Ordering::Equal,
                Order::Weighted(wt) => {
                    let f = |w: &Word| w.as_slice().iter().map(|&l| wt[l as usize] as u64).sum::<u64>();
                    f(a).cmp(&f(b))
                }
            };
            by_weight.then_with(|| a.as_slice().cmp(b.as_slice()))
        })
    }
}

#[derive(Clone, Debug)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: NcPoly,
}

type Expansion = Arc<[(Word, Scalar)]>;

pub struct RewriteSystem {
    name: String,
    alpha: Arc<Alphabet>,
    order: Order,
    rules: Vec<Rule>,
    by_last: Vec<Vec<usize>>,
    cache: DashMap<Word, Expansion>,
}

/// An ambiguity whose two resolutions have different normal forms.
#[derive(Clone, Debug)]
pub struct CriticalPair {
    pub word: Word,
    pub rules: (usize, usize),
    pub residual: NcPoly,
}

impl CriticalPair {
    pub fn describe(&self, alpha: &Alphabet) -> String {
        format!("{} (rules {}, {}): {}", self.word.render(alpha), self.rules.0, self.rules.1, self.residual)
    }
}

impl RewriteSystem {
    pub fn new(name: &str, alpha: &Arc<Alphabet>, order: Order, rules: Vec<Rule>) -> Result<RewriteSystem, RewriteError> {
        let mut by_last = vec![Vec::new(); alpha.len()];
        for (i, r) in rules.iter().enumerate() {
            let Some(&last) = r.lhs.as_slice().last() else {
                return Err(RewriteError::EmptyLhs(i));
            };
            if rules[..i].iter().any(|o| o.lhs == r.lhs) {
                return Err(RewriteError::DuplicateLhs(i, r.lhs.render(alpha)));
            }
            for w in r.rhs.terms().keys() {
                if order.cmp(w, &r.lhs) != Ordering::Less {
                    let shown = if w.is_empty() { "1".to_string() } else { w.render(alpha) };
                    return Err(RewriteError::NotDecreasing(i, shown));
                }
            }
            by_last[last as usize].push(i);
        }
        Ok(RewriteSystem { name: name.into(), alpha: alpha.clone(), order, rules, by_last, cache: DashMap::new() })
    }

    /// Rules given as `(lhs, rhs)` expression pairs over the alphabet.
    pub fn from_text(name: &str, alpha: &Arc<Alphabet>, order: Order, rules: &[(&str, &str)]) -> Result<RewriteSystem, RewriteError> {
        let mut out = Vec::with_capacity(rules.len());
        for (i, (l, r)) in rules.iter().enumerate() {
            let lhs = parse::parse_poly(l, alpha).map_err(|e| RewriteError::Parse(i, e.to_string()))?;
            let rhs = parse::parse_poly(r, alpha).map_err(|e| RewriteError::Parse(i, e.to_string()))?;
            let word = match lhs.terms().iter().next() {
                Some((w, c)) if lhs.len() == 1 && c.is_one() => w.clone(),
                _ => return Err(RewriteError::Parse(i, format!("left-hand side {l} is not a word"))),
            };
            out.push(Rule { lhs: word, rhs });
        }
        RewriteSystem::new(name, alpha, order, out)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alpha
    }

    pub fn order(&self) -> &Order {
        &self.order
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn cache_len(&self) -> usize {
        self.cache.len()
    }

    pub fn clear_cache(&self) {
        self.cache.clear();
    }

    /// Longest rule whose lhs is a suffix of `w`; ties go to the lowest index.
    fn suffix_rule(&self, w: &[Letter]) -> Option<usize> {
        let last = *w.last()?;
        let mut best: Option<usize> = None;
        for &i in &self.by_last[last as usize] {
            let l = self.rules[i].lhs.as_slice();
            if w.ends_with(l) && best.is_none_or(|b| self.rules[b].lhs.len() < l.len()) {
                best = Some(i);
            }
        }
        best
    }

    pub fn is_normal(&self, w: &[Letter]) -> bool {
        (1..=w.len()).all(|k| self.suffix_rule(&w[..k]).is_none())
    }

    /// Normal form of `m * x` for a normal word `m`. Any lhs occurrence must
    /// then be a suffix, so only suffix matches are tried.
    fn append(&self, m: &Word, x: Letter) -> Expansion {
        let mut key = m.clone();
        key.0.push(x);
        let Some(ri) = self.suffix_rule(key.as_slice()) else {
            return Arc::from(vec![(key, Scalar::one())]);
        };
        if let Some(v) = self.cache.get(&key) {
            return v.clone();
        }
        let rule = &self.rules[ri];
        let prefix = Word::from_slice(&key.as_slice()[..key.len() - rule.lhs.len()]);
        let mut acc: BTreeMap<Word, Scalar> = BTreeMap::new();
        for (w, c) in rule.rhs.terms() {
            for (v, d) in self.extend(&prefix, w.as_slice()) {
                add_into(&mut acc, v, c * &d);
            }
        }
        let res: Expansion = acc.into_iter().collect::<Vec<_>>().into();
        self.cache.insert(key, res.clone());
        res
    }

    /// Normal form of `start * letters` for a normal word `start`.
    pub fn extend(&self, start: &Word, letters: &[Letter]) -> BTreeMap<Word, Scalar> {
        let mut cur: BTreeMap<Word, Scalar> = BTreeMap::new();
        cur.insert(start.clone(), Scalar::one());
        for &x in letters {
            let mut next = BTreeMap::new();
            for (m, c) in &cur {
                for (w, d) in self.append(m, x).iter() {
                    add_into(&mut next, w.clone(), c * d);
                }
            }
            cur = next;
        }
        cur
    }

    pub fn reduce_word(&self, w: &[Letter]) -> NcPoly {
        NcPoly::from_terms(&self.alpha, self.extend(&Word::empty(), w))
    }

    pub fn normal_form(&self, p: &NcPoly) -> NcPoly {
        assert!(Alphabet::same(p.alphabet(), &self.alpha), "normal form over the wrong alphabet");
        let mut acc: BTreeMap<Word, Scalar> = BTreeMap::new();
        for (w, c) in p.terms() {
            for (v, d) in self.extend(&Word::empty(), w.as_slice()) {
                add_into(&mut acc, v, c * &d);
            }
        }
        NcPoly::from_terms(&self.alpha, acc)
    }

    /// Normal form of a product.
    pub fn mul(&self, a: &NcPoly, b: &NcPoly) -> NcPoly {
        let mut acc: BTreeMap<Word, Scalar> = BTreeMap::new();
        for (w1, c1) in a.terms() {
            let left = self.extend(&Word::empty(), w1.as_slice());
            for (w2, c2) in b.terms() {
                let c = c1 * c2;
                for (m, d) in &left {
                    for (v, e) in self.extend(m, w2.as_slice()) {
                        add_into(&mut acc, v, &(&c * d) * &e);
                    }
                }
            }
        }
        NcPoly::from_terms(&self.alpha, acc)
    }

    /// Normal form of a product of normal-form factors.
    pub fn product(&self, factors: &[NcPoly]) -> NcPoly {
        let mut acc = NcPoly::one(&self.alpha);
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    /// Componentwise product of two legwise-normal tensors, reduced legwise.
    pub fn tensor_mul(left: &RewriteSystem, right: &RewriteSystem, x: &Tensor2, y: &Tensor2) -> Tensor2 {
        let mut t = Tensor2::zero(&left.alpha, &right.alpha);
        for ((a, b), c1) in x.terms() {
            for ((c, d), c2) in y.terms() {
                let c12 = c1 * c2;
                let ls = left.extend(a, c.as_slice());
                let rs = right.extend(b, d.as_slice());
                for (lw, lc) in &ls {
                    let k = &c12 * lc;
                    for (rw, rc) in &rs {
                        t.add_term(lw.clone(), rw.clone(), &k * rc);
                    }
                }
            }
        }
        t
    }

    /// Reduce both legs of a tensor.
    pub fn tensor_normal_form(left: &RewriteSystem, right: &RewriteSystem, x: &Tensor2) -> Tensor2 {
        x.map_legs(&|w| left.reduce_word(w.as_slice()), &|w| right.reduce_word(w.as_slice()))
    }

    /// One rewriting step: `u * lhs_i * v -> u * rhs_i * v`.
    pub fn step(&self, w: &Word, rule: usize, pos: usize) -> NcPoly {
        let l = &self.rules[rule].lhs;
        assert_eq!(&w.as_slice()[pos..pos + l.len()], l.as_slice(), "rule does not match");
        let u = NcPoly::word(&self.alpha, Word::from_slice(&w.as_slice()[..pos]));
        let v = NcPoly::word(&self.alpha, Word::from_slice(&w.as_slice()[pos + l.len()..]));
        u.mul(&self.rules[rule].rhs).mul(&v)
    }

    /// Ambiguities (word, rule a at position 0, rule b at position p) up to
    /// the given word length.
    pub fn ambiguities(&self, max_degree: usize) -> Vec<(Word, usize, usize, usize)> {
        let mut out = Vec::new();
        for (i, ri) in self.rules.iter().enumerate() {
            let a = ri.lhs.as_slice();
            for (j, rj) in self.rules.iter().enumerate() {
                let b = rj.lhs.as_slice();
                for k in 1..a.len().min(b.len()) {
                    if a[a.len() - k..] == b[..k] && a.len() + b.len() - k <= max_degree {
                        let w = Word::from_slice(a).concat(&b[k..]);
                        out.push((w, i, j, a.len() - k));
                    }
                }
                if i != j && b.len() < a.len() {
                    for p in 0..=a.len() - b.len() {
                        if &a[p..p + b.len()] == b && a.len() <= max_degree {
                            out.push((Word::from_slice(a), i, j, p));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn check_confluence(&self, max_degree: usize) -> Vec<CriticalPair> {
        let amb = self.ambiguities(max_degree);
        let res = par::map(&amb, |(w, i, j, p)| {
            let left = self.normal_form(&self.step(w, *i, 0));
            let right = self.normal_form(&self.step(w, *j, *p));
            let residual = left.sub(&right);
            (!residual.is_zero()).then(|| CriticalPair { word: w.clone(), rules: (*i, *j), residual })
        });
        res.into_iter().flatten().collect()
    }

    /// Copy of the system without rule `i`'s given term, for negative controls.
    pub fn with_rule_rhs(&self, i: usize, rhs: NcPoly) -> Result<RewriteSystem, RewriteError> {
        let mut rules = self.rules.clone();
        rules[i].rhs = rhs;
        RewriteSystem::new(&format!("{}-modified", self.name), &self.alpha, self.order.clone(), rules)
    }
}

fn add_into(acc: &mut BTreeMap<Word, Scalar>, w: Word, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match acc.entry(w) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get() + &c;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}
