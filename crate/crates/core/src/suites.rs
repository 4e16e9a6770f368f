//! Suite registry and the checks that have no natural home module.

use std::time::Instant;

use serde::Serialize;

use crate::linalg::ScalarMatrix;
use crate::parse::parse_poly;
use crate::report::{Check, SuiteReport};
use crate::rewrite::RewriteSystem;
use crate::rmatrix::{self, Epsilon};
use crate::scalar::{Regime, Scalar};
use crate::systems::{self, c3, e_alphabet, lambda, sl, so2, uq, x_alphabet};
use crate::{bundles, coinv, par, props, soq3, uqdual};

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Config {
    pub max_n: i32,
    pub max_j: usize,
    pub degree_bound: usize,
    pub seed: u64,
    /// Randomized cases per sampled law.
    pub cases: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { max_n: 3, max_j: 5, degree_bound: 3, seed: 0, cases: 128 }
    }
}

pub const SUITES: [&str; 18] = [
    "rtt",
    "det",
    "cofactors",
    "covering",
    "appendixC",
    "star-real",
    "star-unimodular",
    "so2",
    "coinvariants",
    "b-relations",
    "qvector",
    "cartesian",
    "bundles",
    "hopf-galois",
    "pairing",
    "casimir",
    "confluence",
    "projectors",
];

pub fn checks(name: &str, cfg: &Config) -> Option<Vec<Check>> {
    Some(match name {
        "rtt" => soq3::rtt_checks(),
        "det" => soq3::det_checks(),
        "cofactors" => soq3::cofactor_checks(cfg.degree_bound),
        "covering" => soq3::covering_checks(),
        "appendixC" => coinv::appendix_c_checks(),
        "star-real" => soq3::star_checks(Regime::QReal),
        "star-unimodular" => soq3::star_checks(Regime::Unimodular),
        "so2" => soq3::so2_checks(),
        "coinvariants" => coinv::coinvariant_checks(),
        "b-relations" => coinv::b_relation_checks(),
        "qvector" => coinv::qvector_checks(),
        "cartesian" => coinv::cartesian_checks(),
        "bundles" => bundles::bundle_checks(cfg.max_n),
        "hopf-galois" => bundles::hopf_galois_checks(cfg.max_n),
        "pairing" => uqdual::pairing_checks(),
        "casimir" => uqdual::casimir_checks(cfg.max_j),
        "confluence" => confluence_checks(cfg),
        "projectors" => projector_checks(),
        _ => return None,
    })
}

pub fn run_suite(name: &str, cfg: &Config) -> Option<SuiteReport> {
    let t = Instant::now();
    let checks = checks(name, cfg)?;
    Some(SuiteReport { suite: name.to_string(), checks, ms: t.elapsed().as_millis() })
}

/// Run suites concurrently on `jobs` threads; the result follows the input order.
pub fn run(names: &[String], cfg: &Config, jobs: usize) -> Vec<SuiteReport> {
    par::with_threads(jobs, || {
        par::map(names, |n| run_suite(n, cfg).unwrap_or_else(|| panic!("unknown suite {n}")))
    })
}

fn confluence_row(rs: &RewriteSystem, degree: usize) -> Check {
    let amb = rs.ambiguities(degree).len();
    let bad = rs.check_confluence(degree);
    if bad.is_empty() {
        Check::pass(format!("critical-pairs[{}]", rs.name()), format!("{amb} ambiguities resolve"))
    } else {
        let text: Vec<String> = bad.iter().take(4).map(|c| c.describe(rs.alphabet())).collect();
        Check::fail(format!("critical-pairs[{}]", rs.name()), format!("{} of {amb} fail", bad.len()), text.join("; "), bad.len())
    }
}

/// Critical pairs of every built-in system, a negative control, and the sampled laws.
pub fn confluence_checks(cfg: &Config) -> Vec<Check> {
    let mut out: Vec<Check> = [sl(), c3(), lambda(), uq(), so2()].iter().map(|rs| confluence_row(rs, 4)).collect();
    let broken = c3()
        .with_rule_rhs(2, parse_poly("x1*x3 + x1*x2", x_alphabet()).expect("rule text"))
        .expect("order-decreasing");
    let bad = broken.check_confluence(4);
    out.push(Check::expect(
        "negative-control[C3q, x3*x1 -> x1*x3 + x1*x2]",
        !bad.is_empty(),
        bad.first().map(|c| c.describe(x_alphabet())).unwrap_or_else(|| "confluent".into()),
    ));
    out.extend(props::all(cfg.seed, cfg.cases));
    out
}

/// Nonzero entries of the displayed N = 2 matrix.
pub fn displayed_r2() -> ScalarMatrix {
    let (q, qi) = (Scalar::q(), Scalar::q_pow(-1));
    ScalarMatrix::from_fn(4, 4, |i, j| match (i, j) {
        (0, 0) | (3, 3) => q.clone(),
        (1, 1) | (2, 2) => qi.clone(),
        _ => Scalar::zero(),
    })
}

fn matrix_check(id: &str, m: &ScalarMatrix) -> Check {
    if m.is_zero() {
        Check::pass(id, "")
    } else {
        Check::fail(id, "nonzero matrix", format!("{} nonzero entries", m.nonzero_count()), m.nonzero_count())
    }
}

/// R-matrix fidelity, Yang-Baxter, the spectral decomposition, the relations
/// it generates and the epsilon tensor.
pub fn projector_checks() -> Vec<Check> {
    let mut out = Vec::new();
    let r3 = rmatrix::build_r(3).expect("N = 3");
    for (row, col, got, want) in rmatrix::compare_displayed_r3(&r3) {
        out.push(Check::fail(format!("R3-display[{row},{col}]"), format!("displayed {want}"), format!("built {got}"), 1));
    }
    let shown = rmatrix::displayed_r3();
    for (row, col, v) in &shown {
        if r3.get(row - 1, col - 1) == v {
            out.push(Check::pass(format!("R3-display[{row},{col}]"), v.to_string()));
        }
    }
    let r2 = rmatrix::build_r(2).expect("N = 2");
    out.push(matrix_check("R2-display", &r2.sub(&displayed_r2())));
    for n in 2..=4 {
        match rmatrix::build_r(n) {
            Ok(r) => out.push(matrix_check(&format!("ybe[N={n}]"), &rmatrix::ybe_residual(&r, n))),
            Err(e) => out.push(Check::fail(format!("ybe[N={n}]"), "build failed", e.to_string(), 1)),
        }
    }

    let rhat = rmatrix::r_hat(&r3, 3);
    let id = ScalarMatrix::identity(9);
    match rmatrix::spectral_projectors(&rhat, 3) {
        Ok(p) => {
            let ev = rmatrix::eigenvalues(3);
            let named = [("P+", &p.plus), ("P-", &p.minus), ("P0", &p.zero)];
            out.push(matrix_check("decr[sum=I]", &p.plus.add(&p.minus).add(&p.zero).sub(&id)));
            for (a, pa) in named {
                out.push(matrix_check(&format!("decr[{a}^2={a}]"), &pa.mul(pa).sub(pa)));
                for (b, pb) in named {
                    if a < b {
                        out.push(matrix_check(&format!("decr[{a}{b}=0]"), &pa.mul(pb)));
                    }
                }
            }
            let rebuilt = p.plus.scale(&ev[0]).add(&p.minus.scale(&ev[1])).add(&p.zero.scale(&ev[2]));
            out.push(matrix_check("decr[R-hat]", &rebuilt.sub(&rhat)));
            out.push(matrix_check("decr[cubic]", &rmatrix::cubic(&rhat, 3)));
            let ranks = [p.plus.rank(), p.minus.rank(), p.zero.rank()];
            out.push(Check::equal("decr[ranks]", &format!("{ranks:?}"), &"[5, 3, 1]".to_string()));

            let c3_rel = rmatrix::relations_from_projector(&p.minus, x_alphabet());
            let c3_want = rmatrix::rule_relations(&systems::C3_RULES, x_alphabet());
            out.push(Check::expect(
                "span[P- = C3q relations]",
                c3_rel.len() == 3 && rmatrix::same_span(&c3_rel, &c3_want),
                format!("rank {}", c3_rel.len()),
            ));
            let mut ext = rmatrix::projector_rows(&p.plus, e_alphabet());
            ext.extend(rmatrix::projector_rows(&p.zero, e_alphabet()));
            let ext_want = rmatrix::rule_relations(&systems::LAMBDA_RULES, e_alphabet());
            out.push(Check::expect(
                "span[P+ u P0 = exterior relations]",
                rmatrix::same_span(&ext, &ext_want),
                format!("rank {}", rmatrix::span_rank(&ext)),
            ));
        }
        Err(e) => out.push(Check::fail("decr[projectors]", "degenerate spectrum", e.to_string(), 1)),
    }

    match rmatrix::extract_epsilon() {
        Ok(eps) => {
            let shown = Epsilon::displayed();
            for i in 1..=3 {
                for j in 1..=3 {
                    for k in 1..=3 {
                        let (got, want) = (eps.get(i, j, k), shown.get(i, j, k));
                        if !want.is_zero() || !got.is_zero() {
                            out.push(Check::equal(format!("epsilon[{i}{j}{k}]"), &got, &want));
                        }
                    }
                }
            }
            out.push(Check::equal("epsilon[nonzero count]", &eps.0.values().filter(|v| !v.is_zero()).count(), &7));
            let pre = rmatrix::preregular_checks(&eps);
            out.push(Check::expect(
                "epsilon[T-cyclic, 27 triples]",
                pre.cyclicity_failures.is_empty(),
                format!("{:?}", pre.cyclicity_failures),
            ));
            out.push(Check::equal("epsilon[rank]", &pre.rank, &3));
            out.push(Check::expect("epsilon[relations = C3q]", pre.spans_c3, ""));
        }
        Err(e) => out.push(Check::fail("epsilon[extract]", "", e.to_string(), 1)),
    }
    out
}
