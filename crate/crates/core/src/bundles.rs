//! Line bundles over the coinvariant algebra: idempotents, traces, pairings
//! and the Hopf-Galois sums.

use crate::coinv::{self, is_coinvariant};
use crate::freealg::NcPoly;
use crate::par;
use crate::report::Check;
use crate::scalar::{Regime, Scalar};
use crate::slq2;
use crate::soq3::{self, cover, poly, residual, u};

/// `xi = (u11, u21, u31)`
pub fn xi(j: usize) -> NcPoly {
    u(j, 1)
}

/// `eta = (u33, q^{-1/2} u23, q^{-1} u13)`
pub fn eta(j: usize) -> NcPoly {
    u(4 - j, 3).scale(&Scalar::r_pow(-2 * (j as i32 - 1)))
}

/// `beta = (q u31, q^{1/2} u21, u11)`
pub fn beta(j: usize) -> NcPoly {
    u(4 - j, 1).scale(&Scalar::r_pow(2 * (3 - j as i32)))
}

/// `alpha = (u13, u23, u33)`
pub fn alpha(j: usize) -> NcPoly {
    u(j, 3)
}

/// All of `{1,2,3}^len` in lexicographic order.
pub fn multi_indices(len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out.into_iter().flat_map(|p| (1..=3).map(move |j| [p.clone(), vec![j]].concat())).collect();
    }
    out
}

/// Kets and bras over the u-alphabet, indexed by `multi_indices(|n|)`.
pub fn generators(n: i32) -> (Vec<NcPoly>, Vec<NcPoly>) {
    let one = NcPoly::one(soq3::alphabet());
    let (k, b): (fn(usize) -> NcPoly, fn(usize) -> NcPoly) = if n >= 0 { (xi, eta) } else { (alpha, beta) };
    let mut kets = Vec::new();
    let mut bras = Vec::new();
    for jj in multi_indices(n.unsigned_abs() as usize) {
        kets.push(jj.iter().rev().fold(one.clone(), |acc, &j| acc.mul(&k(j))));
        bras.push(jj.iter().fold(one.clone(), |acc, &j| acc.mul(&b(j))));
    }
    (kets, bras)
}

/// `p_n` with entries `ket_J bra_K`, as covering images.
pub struct Bundle {
    pub n: i32,
    pub kets: Vec<NcPoly>,
    pub bras: Vec<NcPoly>,
    pub size: usize,
    /// Row-major SL normal forms.
    pub entries: Vec<NcPoly>,
}

impl Bundle {
    pub fn build(n: i32) -> Bundle {
        let (kets, bras) = generators(n);
        let size = kets.len();
        let ck: Vec<NcPoly> = par::map(&kets, cover);
        let cb: Vec<NcPoly> = par::map(&bras, cover);
        let entries = par::map_range(size * size, |i| slq2::mul(&ck[i / size], &cb[i % size]));
        Bundle { n, kets, bras, size, entries }
    }

    pub fn get(&self, j: usize, k: usize) -> &NcPoly {
        &self.entries[j * self.size + k]
    }

    /// Entry over the u-alphabet, before covering.
    pub fn word_entry(&self, j: usize, k: usize) -> NcPoly {
        self.kets[j].mul(&self.bras[k])
    }

    /// Entrywise `p^2 - p`.
    pub fn square_defect(&self) -> Vec<NcPoly> {
        let s = self.size;
        par::map_range(s * s, |i| {
            let (j, k) = (i / s, i % s);
            let mut acc = NcPoly::zero(slq2::alphabet());
            for l in 0..s {
                acc = acc.add(&slq2::mul(self.get(j, l), self.get(l, k)));
            }
            acc.sub(self.get(j, k))
        })
    }

    pub fn trace(&self) -> NcPoly {
        let mut acc = NcPoly::zero(slq2::alphabet());
        for j in 0..self.size {
            acc = acc.add(self.get(j, j));
        }
        acc
    }

    /// Pass iff `(p_{KJ})^* = p_{JK}` for every entry.
    pub fn self_adjoint_defect(&self, regime: Regime) -> Vec<NcPoly> {
        let s = self.size;
        par::map_range(s * s, |i| {
            let (j, k) = (i / s, i % s);
            cover(&soq3::star(&self.word_entry(k, j), regime)).sub(self.get(j, k))
        })
    }
}

/// `C_J^{(n)} = prod_{k=0}^{J-1} (q^{2n-k} - 1)`
pub fn c_coeff(j: i32, n: i32) -> Scalar {
    (0..j).fold(Scalar::one(), |acc, k| &acc * &(&Scalar::q_pow(2 * n - k) - &Scalar::one()))
}

/// `1 + sum_{J=1}^{2n} (q+1)^{-J} C_J (y2-1)^J` in SL normal form.
pub fn trace_formula(n: i32) -> NcPoly {
    let y = cover(&poly("y2 - 1"));
    let inv = (&Scalar::q() + &Scalar::one()).inv();
    let mut acc = NcPoly::one(slq2::alphabet());
    let mut pw = NcPoly::one(slq2::alphabet());
    for j in 1..=2 * n {
        pw = slq2::mul(&pw, &y);
        acc = acc.add(&pw.scale(&(&inv.pow(j as i64) * &c_coeff(j, n))));
    }
    acc
}

pub fn trace_p1_display() -> NcPoly {
    poly("1 + (q - 1)*(y2 - 1) + (q - 1)^2/(q + 1)*(y2 - 1)^2")
}

/// `mu((y2 - 1)^k) = (-1)^k (q+1)^k / (q^k - 1)`
pub fn mu_y(k: i32) -> Scalar {
    let sign = if k % 2 == 0 { Scalar::one() } else { Scalar::int(-1) };
    &(&sign * &(&Scalar::q() + &Scalar::one()).pow(k as i64)) * &(&Scalar::q_pow(k) - &Scalar::one()).inv()
}

pub struct Pairings {
    pub trace: NcPoly,
    pub rank: Scalar,
    pub degree: Result<Scalar, slq2::TraceError>,
}

pub fn pairings(b: &Bundle) -> Pairings {
    let t = b.trace();
    Pairings { rank: slq2::counit(&t), degree: slq2::singular_trace(&t), trace: t }
}

pub fn bundle_checks(max_n: i32) -> Vec<Check> {
    let mut out = Vec::new();
    for n in -max_n..=max_n {
        let b = Bundle::build(n);
        out.push(Check::equal(format!("size[{n}]"), &b.size, &3usize.pow(n.unsigned_abs())));
        let weight_ok = (0..b.size).all(|j| (0..b.size).all(|k| is_coinvariant(&b.word_entry(j, k))));
        out.push(Check::expect(format!("weight-zero[{n}]"), weight_ok, "entries are coinvariant"));
        let defect = b.square_defect();
        let bad: Vec<usize> = (0..defect.len()).filter(|&i| !defect[i].is_zero()).collect();
        if bad.is_empty() {
            out.push(Check::pass(format!("idempotent[{n}]"), format!("{0}x{0}", b.size)));
        } else {
            let first = &defect[bad[0]];
            out.push(Check::fail(format!("idempotent[{n}]"), format!("{} entries differ", bad.len()), first.render(), first.len()));
        }
        let p = pairings(&b);
        out.push(Check::equal(format!("rank[{n}]"), &p.rank, &Scalar::one()));
        match &p.degree {
            Ok(d) => out.push(Check::equal(format!("degree[{n}]"), d, &Scalar::int(-2 * n as i64))),
            Err(e) => out.push(Check::fail(format!("degree[{n}]"), "trace outside C[bc]", e.to_string(), 1)),
        }
        if n >= 1 {
            let mut c = Check::zero(format!("trace-formula[{n}]"), &p.trace.sub(&trace_formula(n)));
            if c.passed() {
                c.detail = trace_in_x(n);
            }
            out.push(c);
        }
        if n == 1 {
            out.push(Check::zero("trace-p1", &p.trace.sub(&cover(&trace_p1_display()))));
            let want = |i: usize, j: usize| xi(i).mul(&eta(j));
            let ok = (0..3).all(|i| (0..3).all(|j| b.word_entry(i, j) == want(i + 1, j + 1)));
            out.push(Check::expect("p+1-entries", ok, "column (u11, u21, u31) times row (u33, q^-1/2 u23, q^-1 u13)"));
        }
        if n == -1 {
            // listed with both indices reversed
            let want = |i: usize, j: usize| u(i, 3).mul(&beta(j));
            let listed = [u(3, 3), u(2, 3), u(1, 3)];
            let row = [u(1, 1), u(2, 1).scale(&Scalar::s_pow(1)), u(3, 1).scale(&Scalar::q())];
            let ok = (0..3).all(|i| (0..3).all(|j| b.word_entry(2 - i, 2 - j) == listed[i].mul(&row[j])));
            let ok = ok && (0..3).all(|i| (0..3).all(|j| b.word_entry(i, j) == want(i + 1, j + 1)));
            out.push(Check::expect("p-1-entries", ok, "listed p_-1 up to the reversal j -> 4 - j"));
        }
        let sa = b.self_adjoint_defect(Regime::QReal);
        let bad = sa.iter().filter(|p| !p.is_zero()).count();
        out.push(Check::expect(format!("self-adjoint-real[{n}]"), bad == 0, format!("{bad} entries differ")));
        if n != 0 {
            let su = b.self_adjoint_defect(Regime::Unimodular);
            let bad = su.iter().filter(|p| !p.is_zero()).count();
            out.push(Check::expect(format!("not-self-adjoint-unimodular[{n}]"), bad > 0, format!("{bad} entries differ")));
        }
    }
    for n in 1..=max_n {
        let (a, b) = (pairings(&Bundle::build(n)), pairings(&Bundle::build(-n)));
        let ok = matches!((&a.degree, &b.degree), (Ok(x), Ok(y)) if (x + y).is_zero());
        out.push(Check::expect(format!("degree-additivity[{n}]"), ok, "mu(tr p_n) + mu(tr p_-n) = 0"));
    }
    for n in 0..=max_n.max(1) {
        for j in 1..=2 * n + 2 {
            if j >= 1 && j <= 2 * n {
                let lhs = c_coeff(j, n);
                let rhs = &(&Scalar::q_pow(2 * n + 1 - j) - &Scalar::one()) * &c_coeff(j - 1, n);
                out.push(Check::equal(format!("c-step[{n},{j}]"), &lhs, &rhs));
            }
            if j <= 2 * n {
                let lhs = c_coeff(j + 2, n + 1);
                let rhs = &(&(&Scalar::q_pow(2 * n + 2) - &Scalar::one()) * &(&Scalar::q_pow(2 * n + 1) - &Scalar::one())) * &c_coeff(j, n);
                out.push(Check::equal(format!("c-shift[{n},{j}]"), &lhs, &rhs));
            }
        }
    }
    let ss = &Scalar::s_pow(1) + &Scalar::s_pow(-1);
    for k in 1..=8 {
        let t = slq2::singular_trace(&cover(&poly(&format!("(y2 - 1)^{k}"))));
        let ok = t.as_ref().is_ok_and(|v| *v == mu_y(k)) && mu_y(k) == &ss.pow(k as i64) * &slq2::mu_bc(k as u32);
        out.push(Check::expect(format!("mu-y[{k}]"), ok, "trace of (y2 - 1)^k in both forms"));
    }
    out.extend(aux_checks());
    out
}

/// Powers of `X = (y2 - 1)/(q + 1)` commuted past the first column, and the
/// quadratic expressions in `X`.
pub fn aux_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for j in 1..=4 {
        let x = format!("(y2 - 1)^{j}");
        for (row, qexp) in [(1usize, 2 * j), (2, j), (3, 0)] {
            let lhs = u(row, 1).mul(&poly(&x));
            let rhs = poly(&x).mul(&u(row, 1)).scale(&Scalar::q_pow(qexp));
            out.push(Check::zero(format!("comm-u{row}1-X[{j}]"), &residual(&lhs, &rhs)));
        }
    }
    for (k, (l, r)) in coinv::section("bundle-aux").iter().enumerate() {
        let mut c = Check::zero(format!("aux[{k}]"), &residual(&poly(l), &poly(r)));
        c.detail = format!("{l} = {r}");
        out.push(c);
    }
    out
}

/// `tr(p_n)` as a polynomial in `X`.
pub fn trace_in_x(n: i32) -> String {
    let mut parts = vec!["1".to_string()];
    for j in 1..=2 * n {
        parts.push(format!("({})*X^{j}", c_coeff(j, n)));
    }
    parts.join(" + ")
}

pub fn hopf_galois_checks(max_n: i32) -> Vec<Check> {
    let one = NcPoly::one(soq3::alphabet());
    let sum = |f: &dyn Fn(usize) -> NcPoly, g: &dyn Fn(usize) -> NcPoly| {
        (1..=3).fold(NcPoly::zero(soq3::alphabet()), |acc, j| acc.add(&f(j).mul(&g(j))))
    };
    let mut out = vec![
        Check::zero("eta-xi", &residual(&sum(&eta, &xi), &one)),
        Check::zero("beta-alpha", &residual(&sum(&beta, &alpha), &one)),
        Check::zero("eta-xi-is-S(u)u11", &sum(&eta, &xi).sub(&poly("u33*u11 + r^-2*u23*u21 + r^-4*u13*u31"))),
        Check::zero("beta-alpha-is-S(u)u33", &sum(&beta, &alpha).sub(&poly("r^4*u31*u13 + r^2*u21*u23 + u11*u33"))),
    ];
    for n in -max_n..=max_n {
        let (kets, bras) = generators(n);
        let terms: Vec<NcPoly> = par::map_range(kets.len(), |i| cover(&bras[i].mul(&kets[i])));
        let total = terms.iter().fold(NcPoly::zero(slq2::alphabet()), |a, t| a.add(t));
        out.push(Check::zero(format!("telescoping[{n}]"), &total.sub(&NcPoly::one(slq2::alphabet()))));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_examples() {
        let (k, _) = generators(1);
        assert_eq!(k, vec![u(1, 1), u(2, 1), u(3, 1)]);
        let (_, b) = generators(-1);
        assert_eq!(b, vec![poly("q*u31"), poly("r^2*u21"), u(1, 1)]);
        let p0 = Bundle::build(0);
        assert_eq!(p0.size, 1);
        assert_eq!(p0.get(0, 0).render(), "1");
    }

    #[test]
    fn p1_pairings() {
        let b = Bundle::build(1);
        assert!(b.square_defect().iter().all(NcPoly::is_zero));
        let p = pairings(&b);
        assert!(p.rank.is_one());
        assert_eq!(p.degree.unwrap(), Scalar::int(-2));
    }

    #[test]
    fn c_coefficients() {
        assert_eq!(c_coeff(1, 1), &Scalar::q_pow(2) - &Scalar::one());
        assert!(c_coeff(0, 3).is_one());
    }
}
