//! Dense exact matrices over [`Scalar`] and sparse row reduction of
//! polynomial spans.

use std::collections::BTreeMap;
use std::fmt;

use crate::freealg::{NcPoly, Word};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl ScalarMatrix {
    pub fn zeros(rows: usize, cols: usize) -> ScalarMatrix {
        ScalarMatrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> ScalarMatrix {
        let mut m = ScalarMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> ScalarMatrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ScalarMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn mul(&self, o: &ScalarMatrix) -> ScalarMatrix {
        assert_eq!(self.cols, o.rows, "matrix shape mismatch");
        let mut out = ScalarMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + &(a * b);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, o: &ScalarMatrix) -> ScalarMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        ScalarMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + o.get(i, j))
    }

    pub fn sub(&self, o: &ScalarMatrix) -> ScalarMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        ScalarMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - o.get(i, j))
    }

    pub fn scale(&self, c: &Scalar) -> ScalarMatrix {
        ScalarMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * c)
    }

    pub fn transpose(&self) -> ScalarMatrix {
        ScalarMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn kron(&self, o: &ScalarMatrix) -> ScalarMatrix {
        ScalarMatrix::from_fn(self.rows * o.rows, self.cols * o.cols, |i, j| {
            self.get(i / o.rows, j / o.cols) * o.get(i % o.rows, j % o.cols)
        })
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (ScalarMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, row * m.cols + j);
                }
            }
            let inv = m.get(row, col).inv();
            for j in 0..m.cols {
                let v = m.get(row, j) * &inv;
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let f = m.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..m.cols {
                    let v = m.get(r, j) - &(&f * m.get(row, j));
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }
}

impl fmt::Debug for ScalarMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Incremental echelon basis of a span of polynomials, pivoting on the
/// largest word of each row. Each basis row carries its expansion in terms of
/// the inserted inputs.
#[derive(Default, Clone)]
pub struct Echelon {
    rows: Vec<(BTreeMap<Word, Scalar>, BTreeMap<usize, Scalar>)>,
    pivots: BTreeMap<Word, usize>,
    track: bool,
}

impl Echelon {
    pub fn new(track_history: bool) -> Echelon {
        Echelon { rows: Vec::new(), pivots: BTreeMap::new(), track: track_history }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Top-reduce against the basis. Returns the remainder and the combination
    /// of inputs that was subtracted.
    fn reduce(&self, mut p: BTreeMap<Word, Scalar>, mut hist: BTreeMap<usize, Scalar>) -> (BTreeMap<Word, Scalar>, BTreeMap<usize, Scalar>) {
        let mut bound: Option<Word> = None;
        loop {
            let lead = match &bound {
                None => p.keys().next_back().cloned(),
                Some(b) => p.range(..b.clone()).next_back().map(|(w, _)| w.clone()),
            };
            let Some(lead) = lead else {
                return (p, hist);
            };
            match self.pivots.get(&lead) {
                Some(&k) => {
                    let c = p[&lead].clone();
                    let (row, h) = &self.rows[k];
                    for (w, d) in row {
                        add_into(&mut p, w.clone(), -(&c * d));
                    }
                    if self.track {
                        for (g, d) in h {
                            add_into(&mut hist, *g, -(&c * d));
                        }
                    }
                }
                None => bound = Some(lead),
            }
        }
    }

    /// Insert input number `id`; returns true when the rank grew.
    pub fn insert(&mut self, id: usize, p: &NcPoly) -> bool {
        let mut hist = BTreeMap::new();
        if self.track {
            hist.insert(id, Scalar::one());
        }
        let (rest, hist) = self.reduce(p.terms().clone(), hist);
        let Some((lead, c)) = rest.iter().next_back().map(|(w, c)| (w.clone(), c.clone())) else {
            return false;
        };
        // Only the leading word must be new; lower words may still hit pivots,
        // which is fine for membership by top reduction.
        let inv = c.inv();
        let row: BTreeMap<Word, Scalar> = rest.into_iter().map(|(w, d)| (w, d * &inv)).collect();
        let hist: BTreeMap<usize, Scalar> = hist.into_iter().map(|(g, d)| (g, d * &inv)).collect();
        self.pivots.insert(lead, self.rows.len());
        self.rows.push((row, hist));
        true
    }

    /// `Some(combination)` with `p = sum c_id * input_id` when `p` lies in the
    /// span.
    pub fn express(&self, p: &NcPoly) -> Option<BTreeMap<usize, Scalar>> {
        let (rest, hist) = self.reduce(p.terms().clone(), BTreeMap::new());
        if !rest.is_empty() {
            return None;
        }
        Some(hist.into_iter().map(|(g, c)| (g, -c)).collect())
    }

    pub fn contains(&self, p: &NcPoly) -> bool {
        let (rest, _) = self.reduce(p.terms().clone(), BTreeMap::new());
        rest.is_empty()
    }

    /// Fully reduced basis, sorted by leading word, each with lead coefficient 1.
    pub fn canonical_basis(&self) -> Vec<BTreeMap<Word, Scalar>> {
        // Ascending leads: rows with smaller leads are already fully reduced,
        // so subtracting them never reintroduces a pivot word.
        let mut done: Vec<(Word, BTreeMap<Word, Scalar>)> = Vec::new();
        for (lead, &k) in &self.pivots {
            let mut row = self.rows[k].0.clone();
            for (l, other) in &done {
                if let Some(c) = row.get(l).cloned() {
                    for (w, d) in other {
                        add_into(&mut row, w.clone(), -(&c * d));
                    }
                }
            }
            done.push((lead.clone(), row));
        }
        done.into_iter().map(|(_, r)| r).collect()
    }
}

pub(crate) fn add_into<K: Ord>(acc: &mut BTreeMap<K, Scalar>, k: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match acc.entry(k) {
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::Alphabet;
    use crate::parse::parse_poly;

    #[test]
    fn rank_and_identity() {
        let m = ScalarMatrix::from_fn(3, 3, |i, j| Scalar::int((i * 3 + j) as i64));
        assert_eq!(m.rank(), 2);
        assert_eq!(ScalarMatrix::identity(4).rank(), 4);
        let i2 = ScalarMatrix::identity(2);
        assert_eq!(i2.kron(&i2), ScalarMatrix::identity(4));
    }

    #[test]
    fn echelon_membership() {
        let a = Alphabet::new("x", &["x1", "x2"]);
        let mut e = Echelon::new(true);
        let g0 = parse_poly("x1*x2 - q*x2*x1", &a).unwrap();
        let g1 = parse_poly("x2*x2 - 1", &a).unwrap();
        assert!(e.insert(0, &g0));
        assert!(e.insert(1, &g1));
        assert!(!e.insert(2, &g0.scale(&Scalar::r())));
        let t = g0.scale(&Scalar::int(3)).sub(&g1);
        let comb = e.express(&t).unwrap();
        let mut back = NcPoly::zero(&a);
        for (id, c) in comb {
            back = back.add(&[&g0, &g1, &g0.scale(&Scalar::r())][id].scale(&c));
        }
        assert_eq!(back, t);
        assert!(!e.contains(&parse_poly("x1", &a).unwrap()));
    }
}
