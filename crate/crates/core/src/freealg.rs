//! Free noncommutative polynomials over [`Scalar`] on declared alphabets,
//! tensor-square elements, matrices and star maps.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;
use thiserror::Error;

use crate::scalar::{Regime, Scalar};

pub type Letter = u8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("alphabet mismatch: {0} vs {1}")]
    AlphabetMismatch(String, String),
    #[error("star map has no image for generator {0}")]
    Unmapped(String),
    #[error("shape mismatch: {0}x{1} times {2}x{3}")]
    Shape(usize, usize, usize, usize),
}

/// Ordered generator names. The declaration order is the letter order.
#[derive(Debug)]
pub struct Alphabet {
    name: String,
    names: Vec<String>,
    index: HashMap<String, Letter>,
}

impl Alphabet {
    pub fn new(name: &str, names: &[&str]) -> Arc<Alphabet> {
        assert!(names.len() < 256, "alphabet too large");
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            let prev = index.insert(n.to_string(), i as Letter);
            assert!(prev.is_none(), "duplicate generator {n}");
        }
        Arc::new(Alphabet { name: name.into(), names: names.iter().map(|s| s.to_string()).collect(), index })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.index.get(name).copied()
    }

    pub fn symbol(&self, l: Letter) -> &str {
        &self.names[l as usize]
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        0..self.names.len() as Letter
    }

    pub fn same(a: &Arc<Alphabet>, b: &Arc<Alphabet>) -> bool {
        Arc::ptr_eq(a, b) || (a.name == b.name && a.names == b.names)
    }
}

/// Sequence of letters; ordered by length, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub SmallVec<[Letter; 14]>);

impl Word {
    pub fn empty() -> Word {
        Word(SmallVec::new())
    }

    pub fn from_slice(s: &[Letter]) -> Word {
        Word(SmallVec::from_slice(s))
    }

    pub fn letter(l: Letter) -> Word {
        Word::from_slice(&[l])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, o: &[Letter]) -> Word {
        let mut w = self.clone();
        w.0.extend_from_slice(o);
        w
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn render(&self, alpha: &Alphabet) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == l {
                j += 1;
            }
            let n = j - i;
            if n == 1 {
                parts.push(alpha.symbol(l).to_string());
            } else {
                parts.push(format!("{}^{}", alpha.symbol(l), n));
            }
            i = j;
        }
        parts.join("*")
    }
}

impl Ord for Word {
    fn cmp(&self, o: &Self) -> Ordering {
        self.0.len().cmp(&o.0.len()).then_with(|| self.0.as_slice().cmp(o.0.as_slice()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// Finite sum of scalar multiples of words.
#[derive(Clone)]
pub struct NcPoly {
    alpha: Arc<Alphabet>,
    terms: BTreeMap<Word, Scalar>,
}

impl PartialEq for NcPoly {
    fn eq(&self, o: &Self) -> bool {
        Alphabet::same(&self.alpha, &o.alpha) && self.terms == o.terms
    }
}

impl Eq for NcPoly {}

impl NcPoly {
    pub fn zero(alpha: &Arc<Alphabet>) -> NcPoly {
        NcPoly { alpha: alpha.clone(), terms: BTreeMap::new() }
    }

    pub fn scalar(alpha: &Arc<Alphabet>, c: Scalar) -> NcPoly {
        NcPoly::term(alpha, Word::empty(), c)
    }

    pub fn one(alpha: &Arc<Alphabet>) -> NcPoly {
        NcPoly::scalar(alpha, Scalar::one())
    }

    pub fn term(alpha: &Arc<Alphabet>, w: Word, c: Scalar) -> NcPoly {
        let mut p = NcPoly::zero(alpha);
        p.add_term(w, c);
        p
    }

    pub fn word(alpha: &Arc<Alphabet>, w: Word) -> NcPoly {
        NcPoly::term(alpha, w, Scalar::one())
    }

    pub fn gen(alpha: &Arc<Alphabet>, l: Letter) -> NcPoly {
        NcPoly::word(alpha, Word::letter(l))
    }

    /// Generator by name; panics on unknown names (internal tables only).
    pub fn named(alpha: &Arc<Alphabet>, name: &str) -> NcPoly {
        let l = alpha.letter(name).unwrap_or_else(|| panic!("unknown generator {name}"));
        NcPoly::gen(alpha, l)
    }

    pub fn from_terms(alpha: &Arc<Alphabet>, terms: impl IntoIterator<Item = (Word, Scalar)>) -> NcPoly {
        let mut p = NcPoly::zero(alpha);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alpha
    }

    pub fn terms(&self) -> &BTreeMap<Word, Scalar> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Word, Scalar> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().next_back().map_or(0, Word::len)
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Constant term.
    pub fn constant(&self) -> Scalar {
        self.coeff(&Word::empty())
    }

    /// `Some(c)` when the polynomial is the scalar `c`.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn add_scaled(&mut self, o: &NcPoly, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (w, d) in &o.terms {
            self.add_term(w.clone(), d * c);
        }
    }

    fn check(&self, o: &NcPoly) -> Result<(), AlgebraError> {
        if Alphabet::same(&self.alpha, &o.alpha) {
            Ok(())
        } else {
            Err(AlgebraError::AlphabetMismatch(self.alpha.name.clone(), o.alpha.name.clone()))
        }
    }

    pub fn try_add(&self, o: &NcPoly) -> Result<NcPoly, AlgebraError> {
        self.check(o)?;
        let mut p = self.clone();
        for (w, c) in &o.terms {
            p.add_term(w.clone(), c.clone());
        }
        Ok(p)
    }

    pub fn try_mul(&self, o: &NcPoly) -> Result<NcPoly, AlgebraError> {
        self.check(o)?;
        let mut p = NcPoly::zero(&self.alpha);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                p.add_term(w1.concat(&w2.0), c1 * c2);
            }
        }
        Ok(p)
    }

    pub fn add(&self, o: &NcPoly) -> NcPoly {
        self.try_add(o).expect("alphabet mismatch")
    }

    pub fn sub(&self, o: &NcPoly) -> NcPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &NcPoly) -> NcPoly {
        self.try_mul(o).expect("alphabet mismatch")
    }

    pub fn neg(&self) -> NcPoly {
        self.scale(&Scalar::int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> NcPoly {
        if c.is_zero() {
            return NcPoly::zero(&self.alpha);
        }
        NcPoly { alpha: self.alpha.clone(), terms: self.terms.iter().map(|(w, d)| (w.clone(), d * c)).collect() }
    }

    pub fn pow(&self, n: usize) -> NcPoly {
        let mut acc = NcPoly::one(&self.alpha);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> NcPoly {
        NcPoly::from_terms(&self.alpha, self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    /// Algebra homomorphism into another alphabet, given the images of the
    /// generators.
    pub fn substitute(&self, target: &Arc<Alphabet>, image: &dyn Fn(Letter) -> NcPoly) -> NcPoly {
        let images: Vec<NcPoly> = self.alpha.letters().map(image).collect();
        let mut out = NcPoly::zero(target);
        for (w, c) in &self.terms {
            let mut t = NcPoly::scalar(target, c.clone());
            for &l in w.as_slice() {
                t = t.mul(&images[l as usize]);
            }
            out = out.add(&t);
        }
        out
    }

    /// Antilinear anti-homomorphism: reverse words, map generators through
    /// `genmap`, conjugate coefficients.
    pub fn star(&self, genmap: &dyn Fn(Letter) -> Option<NcPoly>, regime: Regime) -> Result<NcPoly, AlgebraError> {
        let mut images = Vec::with_capacity(self.alpha.len());
        for l in self.alpha.letters() {
            images.push(genmap(l));
        }
        let mut out = NcPoly::zero(&self.alpha);
        for (w, c) in &self.terms {
            let mut t = NcPoly::scalar(&self.alpha, c.conjugate(regime));
            for &l in w.as_slice().iter().rev() {
                let img = images[l as usize]
                    .as_ref()
                    .ok_or_else(|| AlgebraError::Unmapped(self.alpha.symbol(l).to_string()))?;
                t = t.try_mul(img)?;
            }
            out = out.try_add(&t)?;
        }
        Ok(out)
    }

    /// Sum of the absolute word weights, used by the grading checks.
    pub fn is_homogeneous_for(&self, weight: &dyn Fn(&Word) -> i64, value: i64) -> bool {
        self.terms.keys().all(|w| weight(w) == value)
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (w, c) in &self.terms {
            let (neg, text) = if w.is_empty() {
                let s = c.to_string();
                match s.strip_prefix('-') {
                    Some(rest) if c.as_factor().0 => (true, rest.to_string()),
                    _ => (false, s),
                }
            } else {
                let (neg, f) = c.as_factor();
                let ws = w.render(&self.alpha);
                (neg, match f {
                    None => ws,
                    Some(f) => format!("{f}*{ws}"),
                })
            };
            match (out.is_empty(), neg) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            out.push_str(&text);
        }
        out
    }
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Finite sum of `c * (left word) (x) (right word)`.
#[derive(Clone)]
pub struct Tensor2 {
    left: Arc<Alphabet>,
    right: Arc<Alphabet>,
    terms: BTreeMap<(Word, Word), Scalar>,
}

impl PartialEq for Tensor2 {
    fn eq(&self, o: &Self) -> bool {
        Alphabet::same(&self.left, &o.left) && Alphabet::same(&self.right, &o.right) && self.terms == o.terms
    }
}

impl Tensor2 {
    pub fn zero(left: &Arc<Alphabet>, right: &Arc<Alphabet>) -> Tensor2 {
        Tensor2 { left: left.clone(), right: right.clone(), terms: BTreeMap::new() }
    }

    pub fn one(left: &Arc<Alphabet>, right: &Arc<Alphabet>) -> Tensor2 {
        let mut t = Tensor2::zero(left, right);
        t.add_term(Word::empty(), Word::empty(), Scalar::one());
        t
    }

    /// `a (x) b`
    pub fn pure(a: &NcPoly, b: &NcPoly) -> Tensor2 {
        let mut t = Tensor2::zero(a.alphabet(), b.alphabet());
        for (w1, c1) in a.terms() {
            for (w2, c2) in b.terms() {
                t.add_term(w1.clone(), w2.clone(), c1 * c2);
            }
        }
        t
    }

    pub fn left_alphabet(&self) -> &Arc<Alphabet> {
        &self.left
    }

    pub fn right_alphabet(&self) -> &Arc<Alphabet> {
        &self.right
    }

    pub fn terms(&self) -> &BTreeMap<(Word, Word), Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, a: Word, b: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (a, b);
        let s = match self.terms.get(&key) {
            Some(d) => d + &c,
            None => c,
        };
        if s.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, s);
        }
    }

    pub fn add(&self, o: &Tensor2) -> Tensor2 {
        let mut t = self.clone();
        for ((a, b), c) in &o.terms {
            t.add_term(a.clone(), b.clone(), c.clone());
        }
        t
    }

    pub fn sub(&self, o: &Tensor2) -> Tensor2 {
        let mut t = self.clone();
        for ((a, b), c) in &o.terms {
            t.add_term(a.clone(), b.clone(), -c);
        }
        t
    }

    pub fn scale(&self, c: &Scalar) -> Tensor2 {
        let mut t = Tensor2::zero(&self.left, &self.right);
        for ((a, b), d) in &self.terms {
            t.add_term(a.clone(), b.clone(), d * c);
        }
        t
    }

    /// Componentwise product `(a (x) b)(c (x) d) = ac (x) bd`.
    pub fn mul(&self, o: &Tensor2) -> Tensor2 {
        let mut t = Tensor2::zero(&self.left, &self.right);
        for ((a, b), c1) in &self.terms {
            for ((c, d), c2) in &o.terms {
                t.add_term(a.concat(&c.0), b.concat(&d.0), c1 * c2);
            }
        }
        t
    }

    /// Apply linear maps to both legs and collect.
    pub fn map_legs(&self, f: &dyn Fn(&Word) -> NcPoly, g: &dyn Fn(&Word) -> NcPoly) -> Tensor2 {
        let mut out: Option<Tensor2> = None;
        for ((a, b), c) in &self.terms {
            let (fa, gb) = (f(a), g(b));
            let acc = out.get_or_insert_with(|| Tensor2::zero(fa.alphabet(), gb.alphabet()));
            for (w1, c1) in fa.terms() {
                let c1 = c1 * c;
                for (w2, c2) in gb.terms() {
                    acc.add_term(w1.clone(), w2.clone(), &c1 * c2);
                }
            }
        }
        out.unwrap_or_else(|| Tensor2::zero(&self.left, &self.right))
    }

    /// Collect the left legs by right word: `sum_v L_v (x) v`.
    pub fn by_right(&self) -> BTreeMap<Word, NcPoly> {
        let mut m: BTreeMap<Word, NcPoly> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            m.entry(b.clone()).or_insert_with(|| NcPoly::zero(&self.left)).add_term(a.clone(), c.clone());
        }
        m
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((a, b), c)| {
                let l = if a.is_empty() { "1".to_string() } else { a.render(&self.left) };
                let r = if b.is_empty() { "1".to_string() } else { b.render(&self.right) };
                format!("({c})*{l} (x) {r}")
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Debug for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Rectangular matrix of noncommutative polynomials.
#[derive(Clone, PartialEq)]
pub struct NcMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<NcPoly>,
}

impl NcMatrix {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> NcPoly) -> NcMatrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        NcMatrix { rows, cols, entries }
    }

    pub fn identity(alpha: &Arc<Alphabet>, n: usize) -> NcMatrix {
        NcMatrix::from_fn(n, n, |i, j| if i == j { NcPoly::one(alpha) } else { NcPoly::zero(alpha) })
    }

    pub fn column(v: Vec<NcPoly>) -> NcMatrix {
        NcMatrix { rows: v.len(), cols: 1, entries: v }
    }

    pub fn row(v: Vec<NcPoly>) -> NcMatrix {
        NcMatrix { rows: 1, cols: v.len(), entries: v }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &NcPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[NcPoly] {
        &self.entries
    }

    pub fn transpose(&self) -> NcMatrix {
        NcMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn try_mul(&self, o: &NcMatrix) -> Result<NcMatrix, AlgebraError> {
        if self.cols != o.rows {
            return Err(AlgebraError::Shape(self.rows, self.cols, o.rows, o.cols));
        }
        let alpha = self.entries.first().or(o.entries.first()).map(|p| p.alphabet().clone());
        let mut out = Vec::with_capacity(self.rows * o.cols);
        for i in 0..self.rows {
            for j in 0..o.cols {
                let mut acc = NcPoly::zero(alpha.as_ref().expect("empty matrix product"));
                for k in 0..self.cols {
                    acc = acc.try_add(&self.get(i, k).try_mul(o.get(k, j))?)?;
                }
                out.push(acc);
            }
        }
        Ok(NcMatrix { rows: self.rows, cols: o.cols, entries: out })
    }

    pub fn mul(&self, o: &NcMatrix) -> NcMatrix {
        self.try_mul(o).expect("matrix product")
    }

    pub fn sub(&self, o: &NcMatrix) -> NcMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        NcMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).sub(o.get(i, j)))
    }

    pub fn apply_entrywise(&self, mut f: impl FnMut(&NcPoly) -> NcPoly) -> NcMatrix {
        NcMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(&mut f).collect() }
    }
}

impl fmt::Debug for NcMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).render()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
