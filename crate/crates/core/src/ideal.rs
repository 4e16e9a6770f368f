//! Degree-bounded two-sided ideal membership by exact elimination.

use std::sync::Arc;

use serde::Serialize;

use crate::freealg::{Alphabet, NcPoly, Word};
use crate::linalg::Echelon;
use crate::par;
use crate::scalar::Scalar;

/// `left * relations[relation] * right`
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Multiple {
    pub relation: usize,
    pub left: String,
    pub right: String,
    #[serde(skip)]
    pub left_word: Word,
    #[serde(skip)]
    pub right_word: Word,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateTerm {
    #[serde(flatten)]
    pub multiple: Multiple,
    pub coefficient: Scalar,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Certificate {
    pub terms: Vec<CertificateTerm>,
}

impl Certificate {
    /// Recompute `sum c * left * g * right`.
    pub fn evaluate(&self, relations: &[NcPoly]) -> Option<NcPoly> {
        let alpha = relations.first()?.alphabet().clone();
        let mut acc = NcPoly::zero(&alpha);
        for t in &self.terms {
            let m = &t.multiple;
            let p = NcPoly::word(&alpha, m.left_word.clone())
                .mul(&relations[m.relation])
                .mul(&NcPoly::word(&alpha, m.right_word.clone()));
            acc.add_scaled(&p, &t.coefficient);
        }
        Some(acc)
    }

    /// `(c) left g_k right + ...`, relations numbered from 0.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| {
                let m = &t.multiple;
                let mut f = vec![format!("({})", t.coefficient)];
                f.extend([m.left.as_str(), &format!("g{}", m.relation), m.right.as_str()].iter().filter(|x| !x.is_empty() && **x != "1").map(|x| x.to_string()));
                f.join("*")
            })
            .collect();
        parts.join(" + ")
    }

    pub fn verify(&self, relations: &[NcPoly], target: &NcPoly) -> bool {
        match self.evaluate(relations) {
            Some(p) => p == *target,
            None => target.is_zero(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Membership {
    pub member: bool,
    /// Set when `member` is false: the target may still lie in the ideal at a
    /// larger bound.
    pub inconclusive: bool,
    pub bound: usize,
    pub certificate: Option<Certificate>,
    pub rows: usize,
    pub rank: usize,
}

impl Membership {
    pub fn diagnostic(&self) -> String {
        if self.member {
            format!("member (bound {}, {} terms)", self.bound, self.certificate.as_ref().map_or(0, |c| c.terms.len()))
        } else {
            format!("inconclusive at bound {}", self.bound)
        }
    }
}

fn words_up_to(alpha: &Arc<Alphabet>, max: usize) -> Vec<Vec<Word>> {
    let mut by_len = vec![vec![Word::empty()]];
    for k in 1..=max {
        let mut next = Vec::new();
        for w in &by_len[k - 1] {
            for l in alpha.letters() {
                next.push(w.concat(&[l]));
            }
        }
        by_len.push(next);
    }
    by_len
}

/// Span of `m1 * g * m2` with total degree at most `bound`, kept as an
/// echelon basis so several targets can be tested against it.
pub struct IdealSpan {
    relations: Vec<NcPoly>,
    multiples: Vec<Multiple>,
    echelon: Echelon,
    bound: usize,
}

impl IdealSpan {
    pub fn build(relations: &[NcPoly], bound: usize) -> IdealSpan {
        let Some(first) = relations.first() else {
            return IdealSpan { relations: Vec::new(), multiples: Vec::new(), echelon: Echelon::new(true), bound };
        };
        let alpha = first.alphabet().clone();
        let words = words_up_to(&alpha, bound);
        let mut multiples = Vec::new();
        for (ri, g) in relations.iter().enumerate() {
            let dg = g.degree();
            if g.is_zero() || dg > bound {
                continue;
            }
            let slack = bound - dg;
            for ll in 0..=slack {
                for rl in 0..=slack - ll {
                    for lw in &words[ll] {
                        for rw in &words[rl] {
                            multiples.push(Multiple {
                                relation: ri,
                                left: render_word(lw, &alpha),
                                right: render_word(rw, &alpha),
                                left_word: lw.clone(),
                                right_word: rw.clone(),
                            });
                        }
                    }
                }
            }
        }
        let polys = par::map(&multiples, |m| {
            NcPoly::word(&alpha, m.left_word.clone())
                .mul(&relations[m.relation])
                .mul(&NcPoly::word(&alpha, m.right_word.clone()))
        });
        let mut echelon = Echelon::new(true);
        for (i, p) in polys.iter().enumerate() {
            echelon.insert(i, p);
        }
        IdealSpan { relations: relations.to_vec(), multiples, echelon, bound }
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn relations(&self) -> &[NcPoly] {
        &self.relations
    }

    pub fn test(&self, target: &NcPoly) -> Membership {
        let base = Membership {
            member: false,
            inconclusive: true,
            bound: self.bound,
            certificate: None,
            rows: self.multiples.len(),
            rank: self.echelon.rank(),
        };
        if target.is_zero() {
            return Membership { member: true, inconclusive: false, certificate: Some(Certificate::default()), ..base };
        }
        if target.degree() > self.bound {
            return base;
        }
        match self.echelon.express(target) {
            None => base,
            Some(comb) => {
                let terms = comb
                    .into_iter()
                    .map(|(i, c)| CertificateTerm { multiple: self.multiples[i].clone(), coefficient: c })
                    .collect();
                Membership { member: true, inconclusive: false, certificate: Some(Certificate { terms }), ..base }
            }
        }
    }
}

fn render_word(w: &Word, alpha: &Alphabet) -> String {
    if w.is_empty() {
        "1".into()
    } else {
        w.render(alpha)
    }
}

/// One-shot membership test; `bound` defaults to `deg(target) + 1`.
pub fn ideal_member(relations: &[NcPoly], target: &NcPoly, bound: Option<usize>) -> Membership {
    let d = bound.unwrap_or(target.degree() + 1);
    IdealSpan::build(relations, d).test(target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    #[test]
    fn membership_basics() {
        let a = Alphabet::new("x", &["x1", "x2", "x3"]);
        let rels = vec![
            parse_poly("x2*x1 - q^-1*x1*x2", &a).unwrap(),
            parse_poly("x3*x2 - q^-1*x2*x3", &a).unwrap(),
            parse_poly("x3*x1 - x1*x3", &a).unwrap(),
        ];
        let t = parse_poly("x3*x2*x1 - q^-2*x1*x2*x3", &a).unwrap();
        let m = ideal_member(&rels, &t, Some(3));
        assert!(m.member);
        assert!(m.certificate.unwrap().verify(&rels, &t));
        let own = ideal_member(&rels, &rels[0], None);
        assert!(own.member);
        let u = ideal_member(&rels, &parse_poly("x1", &a).unwrap(), Some(3));
        assert!(!u.member && u.inconclusive);
        assert!(ideal_member(&rels, &NcPoly::zero(&a), Some(2)).member);
    }
}
