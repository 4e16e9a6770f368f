//! The orthogonal R-matrix, the spectral projectors of R-hat, the quadratic
//! relations they induce, and the epsilon tensor of the exterior algebra.

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::freealg::{Alphabet, Letter, NcPoly, Word};
use crate::linalg::{Echelon, ScalarMatrix};
use crate::parse::parse_poly;
use crate::scalar::Scalar;
use crate::systems;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RMatrixError {
    #[error("R-matrix needs N >= 2, got {0}")]
    TooSmall(usize),
    #[error("eigenvalues {0} and {1} coincide")]
    Degenerate(String, String),
    #[error("e{0}*e{1}*e{2} does not reduce to a multiple of e1*e2*e3: {3}")]
    NotProportional(usize, usize, usize, String),
}

/// 2*rho_i for the orthogonal R-matrix of size N (indices from 1).
pub fn rho2(i: usize, n: usize) -> i32 {
    let ip = n + 1 - i;
    match i.cmp(&ip) {
        std::cmp::Ordering::Less => n as i32 - 2 * i as i32,
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Greater => -rho2(ip, n),
    }
}

/// q^{k/2}
fn q_half(k: i32) -> Scalar {
    Scalar::r_pow(2 * k)
}

fn delta(a: usize, b: usize) -> bool {
    a == b
}

/// Flattened index of the pair (i, j), both from 1.
pub fn idx(n: usize, i: usize, j: usize) -> usize {
    (i - 1) * n + (j - 1)
}

/// R^{ij}_{mn} stored at row (i-1)N + j, column (m-1)N + n.
///
/// R^{ij}_{mn} = q^{d(i,j) - d(i,j')} d(i,m) d(j,n)
///             + lambda th(i-m) (d(j,m) d(i,n) - q^{-rho_j - rho_m} d(i,j') d(n,m'))
pub fn build_r(n: usize) -> Result<ScalarMatrix, RMatrixError> {
    if n < 2 {
        return Err(RMatrixError::TooSmall(n));
    }
    let lam = Scalar::lambda();
    let mut m = ScalarMatrix::zeros(n * n, n * n);
    for i in 1..=n {
        for j in 1..=n {
            for a in 1..=n {
                for b in 1..=n {
                    let (jp, ap) = (n + 1 - j, n + 1 - a);
                    let mut v = Scalar::zero();
                    if delta(i, a) && delta(j, b) {
                        let e = delta(i, j) as i32 - delta(i, jp) as i32;
                        v = Scalar::q_pow(e);
                    }
                    if i > a {
                        let mut t = Scalar::zero();
                        if delta(j, a) && delta(i, b) {
                            t = Scalar::one();
                        }
                        if delta(i, jp) && delta(b, ap) {
                            t = t - q_half(-(rho2(j, n) + rho2(a, n)));
                        }
                        v = v + &lam * &t;
                    }
                    m.set(idx(n, i, j), idx(n, a, b), v);
                }
            }
        }
    }
    Ok(m)
}

/// R-hat^{kj}_{mn} = R^{jk}_{mn}.
pub fn r_hat(r: &ScalarMatrix, n: usize) -> ScalarMatrix {
    ScalarMatrix::from_fn(n * n, n * n, |row, col| {
        let (k, j) = (row / n, row % n);
        r.get(j * n + k, col).clone()
    })
}

/// R12 R13 R23 - R23 R13 R12 on (C^N)^{(x)3}.
pub fn ybe_residual(r: &ScalarMatrix, n: usize) -> ScalarMatrix {
    let id = ScalarMatrix::identity(n);
    let r12 = r.kron(&id);
    let r23 = id.kron(r);
    let n3 = n * n * n;
    let swap23 = ScalarMatrix::from_fn(n3, n3, |row, col| {
        let (a, b, c) = (row / (n * n), (row / n) % n, row % n);
        if col == a * n * n + c * n + b {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    });
    let r13 = swap23.mul(&r12).mul(&swap23);
    r12.mul(&r13).mul(&r23).sub(&r23.mul(&r13).mul(&r12))
}

/// Nonzero entries of the displayed 9x9 matrix for N = 3, as
/// (row, column, value) with rows and columns from 1.
pub fn displayed_r3() -> Vec<(usize, usize, Scalar)> {
    let q = Scalar::q();
    let qi = Scalar::q_pow(-1);
    let lam = Scalar::lambda();
    let slam = -(Scalar::s_pow(1) * &lam);
    let one = Scalar::one();
    vec![
        (1, 1, q.clone()),
        (2, 2, one.clone()),
        (3, 3, qi.clone()),
        (4, 2, lam.clone()),
        (4, 4, one.clone()),
        (5, 3, slam.clone()),
        (5, 5, one.clone()),
        (6, 6, one.clone()),
        (7, 5, slam),
        (7, 7, qi),
        (8, 6, lam),
        (8, 8, one),
        (9, 9, q),
    ]
}

/// Entries where `r` differs from the displayed N = 3 matrix:
/// (row, column, built, displayed).
pub fn compare_displayed_r3(r: &ScalarMatrix) -> Vec<(usize, usize, Scalar, Scalar)> {
    let shown = displayed_r3();
    let mut out = Vec::new();
    for row in 1..=9 {
        for col in 1..=9 {
            let want = shown.iter().find(|(a, b, _)| *a == row && *b == col).map_or(Scalar::zero(), |t| t.2.clone());
            let got = r.get(row - 1, col - 1).clone();
            if got != want {
                out.push((row, col, got, want));
            }
        }
    }
    out
}

pub struct Projectors {
    pub plus: ScalarMatrix,
    pub minus: ScalarMatrix,
    pub zero: ScalarMatrix,
}

/// Eigenvalues q, -q^-1, q^{1-N}.
pub fn eigenvalues(n: usize) -> [Scalar; 3] {
    [Scalar::q(), -Scalar::q_pow(-1), Scalar::q_pow(1 - n as i32)]
}

/// Lagrange interpolation P_a = prod_{b != a} (R-hat - l_b)/(l_a - l_b).
pub fn spectral_projectors(rhat: &ScalarMatrix, n: usize) -> Result<Projectors, RMatrixError> {
    let ev = eigenvalues(n);
    let id = ScalarMatrix::identity(rhat.rows());
    let mut out = Vec::new();
    for a in 0..3 {
        let mut p = id.clone();
        for b in 0..3 {
            if a == b {
                continue;
            }
            let d = &ev[a] - &ev[b];
            if d.is_zero() {
                return Err(RMatrixError::Degenerate(ev[a].to_string(), ev[b].to_string()));
            }
            p = p.mul(&rhat.sub(&id.scale(&ev[b]))).scale(&d.inv());
        }
        out.push(p);
    }
    let zero = out.pop().expect("three projectors");
    let minus = out.pop().expect("three projectors");
    let plus = out.pop().expect("three projectors");
    Ok(Projectors { plus, minus, zero })
}

/// (R-hat - q)(R-hat + q^-1)(R-hat - q^{1-N})
pub fn cubic(rhat: &ScalarMatrix, n: usize) -> ScalarMatrix {
    let id = ScalarMatrix::identity(rhat.rows());
    let mut acc = id.clone();
    for e in eigenvalues(n) {
        acc = acc.mul(&rhat.sub(&id.scale(&e)));
    }
    acc
}

/// Rows sum_{m,n} P[(j,l),(m,n)] g_m g_n of a projector on (C^N)^{(x)2}.
pub fn projector_rows(p: &ScalarMatrix, alpha: &Arc<Alphabet>) -> Vec<NcPoly> {
    let n = alpha.len();
    assert_eq!(p.rows(), n * n, "projector size does not match the alphabet");
    (0..p.rows())
        .map(|row| {
            let mut acc = NcPoly::zero(alpha);
            for col in 0..p.cols() {
                let c = p.get(row, col);
                if !c.is_zero() {
                    acc.add_term(Word::from_slice(&[(col / n) as Letter, (col % n) as Letter]), c.clone());
                }
            }
            acc
        })
        .filter(|r| !r.is_zero())
        .collect()
}

/// Canonical basis (fully reduced, lead coefficient 1) of a span.
pub fn canonical_span(polys: &[NcPoly]) -> Vec<NcPoly> {
    let Some(alpha) = polys.first().map(|p| p.alphabet().clone()) else {
        return Vec::new();
    };
    let mut e = Echelon::new(false);
    for (i, p) in polys.iter().enumerate() {
        e.insert(i, p);
    }
    e.canonical_basis().into_iter().map(|t| NcPoly::from_terms(&alpha, t)).collect()
}

pub fn relations_from_projector(p: &ScalarMatrix, alpha: &Arc<Alphabet>) -> Vec<NcPoly> {
    canonical_span(&projector_rows(p, alpha))
}

pub fn span_rank(polys: &[NcPoly]) -> usize {
    let mut e = Echelon::new(false);
    for (i, p) in polys.iter().enumerate() {
        e.insert(i, p);
    }
    e.rank()
}

pub fn same_span(a: &[NcPoly], b: &[NcPoly]) -> bool {
    let ra = span_rank(a);
    let rb = span_rank(b);
    let mut all = a.to_vec();
    all.extend_from_slice(b);
    ra == rb && span_rank(&all) == ra
}

/// Relations `lhs - rhs` of a list of rewrite rules given as text.
pub fn rule_relations(rules: &[(&str, &str)], alpha: &Arc<Alphabet>) -> Vec<NcPoly> {
    rules
        .iter()
        .map(|(l, r)| parse_poly(l, alpha).expect("rule text").sub(&parse_poly(r, alpha).expect("rule text")))
        .collect()
}

/// Nonzero epsilon components, keyed by (i, j, k) from 1.
#[derive(Clone, Debug, PartialEq)]
pub struct Epsilon(pub BTreeMap<(usize, usize, usize), Scalar>);

impl Epsilon {
    pub fn get(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.0.get(&(i, j, k)).cloned().unwrap_or_default()
    }

    /// The seven displayed components.
    pub fn displayed() -> Epsilon {
        let q = Scalar::q();
        let mut m = BTreeMap::new();
        m.insert((1, 2, 3), Scalar::one());
        m.insert((1, 3, 2), -q.clone());
        m.insert((2, 1, 3), -q.clone());
        m.insert((2, 3, 1), q.clone());
        m.insert((3, 1, 2), q.clone());
        m.insert((3, 2, 1), -Scalar::q_pow(2));
        m.insert((2, 2, 2), -(&q * &Scalar::s_minus()));
        Epsilon(m)
    }
}

/// Reduce every degree-3 word of the exterior algebra to a multiple of e1e2e3.
pub fn extract_epsilon() -> Result<Epsilon, RMatrixError> {
    let rs = systems::lambda();
    let top = Word::from_slice(&[0, 1, 2]);
    let mut m = BTreeMap::new();
    for i in 1..=3 {
        for j in 1..=3 {
            for k in 1..=3 {
                let w = [(i - 1) as Letter, (j - 1) as Letter, (k - 1) as Letter];
                let nf = rs.reduce_word(&w);
                let c = nf.coeff(&top);
                if nf.len() > usize::from(!c.is_zero()) {
                    return Err(RMatrixError::NotProportional(i, j, k, nf.render()));
                }
                if !c.is_zero() {
                    m.insert((i, j, k), c);
                }
            }
        }
    }
    Ok(Epsilon(m))
}

pub struct PreregularReport {
    /// Triples violating eps_{ijk} = mu_k eps_{kij}.
    pub cyclicity_failures: Vec<(usize, usize, usize)>,
    pub rank: usize,
    pub spans_c3: bool,
}

/// T-cyclicity with T = diag(q, 1, q^-1), non-degeneracy and the quadratic
/// relations sum_{jk} eps_{ijk} x_j x_k.
pub fn preregular_checks(eps: &Epsilon) -> PreregularReport {
    let mu = [Scalar::q(), Scalar::one(), Scalar::q_pow(-1)];
    let mut fails = Vec::new();
    for i in 1..=3 {
        for j in 1..=3 {
            for k in 1..=3 {
                if eps.get(i, j, k) != &mu[k - 1] * &eps.get(k, i, j) {
                    fails.push((i, j, k));
                }
            }
        }
    }
    let m = ScalarMatrix::from_fn(3, 9, |i, c| eps.get(i + 1, c / 3 + 1, c % 3 + 1));
    let x = systems::x_alphabet();
    let rels: Vec<NcPoly> = (1..=3)
        .map(|i| {
            let mut p = NcPoly::zero(x);
            for j in 1..=3 {
                for k in 1..=3 {
                    p.add_term(Word::from_slice(&[(j - 1) as Letter, (k - 1) as Letter]), eps.get(i, j, k));
                }
            }
            p
        })
        .collect();
    let c3 = rule_relations(&systems::C3_RULES, x);
    PreregularReport { cyclicity_failures: fails, rank: m.rank(), spans_c3: same_span(&rels, &c3) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rho_values() {
        assert_eq!((1..=3).map(|i| rho2(i, 3)).collect::<Vec<_>>(), vec![1, 0, -1]);
        assert_eq!((1..=4).map(|i| rho2(i, 4)).collect::<Vec<_>>(), vec![2, 0, 0, -2]);
    }

    #[test]
    fn n2_is_diagonal() {
        let r = build_r(2).unwrap();
        let q = Scalar::q();
        let qi = Scalar::q_pow(-1);
        let want = ScalarMatrix::from_fn(4, 4, |i, j| match (i == j, i) {
            (false, _) => Scalar::zero(),
            (true, 0) | (true, 3) => q.clone(),
            _ => qi.clone(),
        });
        assert_eq!(r, want);
        assert!(build_r(1).is_err());
    }

    #[test]
    fn ybe_small() {
        for n in 2..=3 {
            assert!(ybe_residual(&build_r(n).unwrap(), n).is_zero());
        }
    }

    #[test]
    fn epsilon_matches_display() {
        assert_eq!(extract_epsilon().unwrap(), Epsilon::displayed());
    }
}
