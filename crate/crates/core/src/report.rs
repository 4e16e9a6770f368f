//! Check results and the versioned JSON report.

use serde::Serialize;

use crate::freealg::{NcPoly, Tensor2};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub check_id: String,
    pub status: Status,
    pub detail: String,
    /// Canonical text of what failed to vanish; empty on pass.
    pub residual: String,
    pub residual_terms: usize,
}

impl Check {
    pub fn pass(id: impl Into<String>, detail: impl Into<String>) -> Check {
        Check { check_id: id.into(), status: Status::Pass, detail: detail.into(), residual: String::new(), residual_terms: 0 }
    }

    /// `residual` must describe the failure and is forced nonempty.
    pub fn fail(id: impl Into<String>, detail: impl Into<String>, residual: impl Into<String>, terms: usize) -> Check {
        let mut residual = residual.into();
        if residual.is_empty() {
            residual = "mismatch".into();
        }
        Check { check_id: id.into(), status: Status::Fail, detail: detail.into(), residual, residual_terms: terms.max(1) }
    }

    pub fn inconclusive(id: impl Into<String>, detail: impl Into<String>) -> Check {
        Check {
            check_id: id.into(),
            status: Status::Inconclusive,
            detail: detail.into(),
            residual: String::new(),
            residual_terms: 0,
        }
    }

    /// Pass iff the residual is zero.
    pub fn zero(id: impl Into<String>, residual: &NcPoly) -> Check {
        if residual.is_zero() {
            Check::pass(id, "")
        } else {
            Check::fail(id, "nonzero residual", residual.render(), residual.len())
        }
    }

    pub fn zero_tensor(id: impl Into<String>, residual: &Tensor2) -> Check {
        if residual.is_zero() {
            Check::pass(id, "")
        } else {
            Check::fail(id, "nonzero residual", residual.render(), residual.terms().len())
        }
    }

    pub fn expect(id: impl Into<String>, ok: bool, detail: impl Into<String>) -> Check {
        let detail = detail.into();
        if ok {
            Check::pass(id, detail)
        } else {
            Check::fail(id, "", detail, 1)
        }
    }

    pub fn equal<T: PartialEq + std::fmt::Display>(id: impl Into<String>, got: &T, want: &T) -> Check {
        if got == want {
            Check::pass(id, format!("{got}"))
        } else {
            Check::fail(id, format!("expected {want}"), format!("{got}"), 1)
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
    /// Wall time; kept out of the JSON unless timings are requested.
    #[serde(skip)]
    pub ms: u128,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
}

impl Counts {
    pub fn ok(&self) -> bool {
        self.fail == 0 && self.inconclusive == 0
    }
}

impl SuiteReport {
    pub fn counts(&self) -> Counts {
        let mut c = Counts::default();
        for k in &self.checks {
            match k.status {
                Status::Pass => c.pass += 1,
                Status::Fail => c.fail += 1,
                Status::Inconclusive => c.inconclusive += 1,
            }
        }
        c
    }
}

#[derive(Serialize)]
struct Row<'a> {
    suite: &'a str,
    check_id: &'a str,
    status: Status,
    residual_terms: usize,
    ms: Option<u128>,
    detail: &'a str,
    residual: &'a str,
}

#[derive(Serialize)]
struct SuiteSummary<'a> {
    suite: &'a str,
    #[serde(flatten)]
    counts: Counts,
    ms: Option<u128>,
}

#[derive(Serialize)]
struct Document<'a> {
    schema: u32,
    config: &'a serde_json::Value,
    suites: Vec<SuiteSummary<'a>>,
    rows: Vec<Row<'a>>,
    summary: Counts,
}

pub fn total(reports: &[SuiteReport]) -> Counts {
    let mut t = Counts::default();
    for r in reports {
        let c = r.counts();
        t.pass += c.pass;
        t.fail += c.fail;
        t.inconclusive += c.inconclusive;
    }
    t
}

/// Without `timings` every `ms` is null, so equal inputs give equal bytes.
pub fn to_json(reports: &[SuiteReport], config: &serde_json::Value, timings: bool) -> String {
    let ms = |m: u128| timings.then_some(m);
    let doc = Document {
        schema: SCHEMA,
        config,
        suites: reports.iter().map(|r| SuiteSummary { suite: &r.suite, counts: r.counts(), ms: ms(r.ms) }).collect(),
        rows: reports
            .iter()
            .flat_map(|r| {
                r.checks.iter().map(move |c| Row {
                    suite: &r.suite,
                    check_id: &c.check_id,
                    status: c.status,
                    residual_terms: c.residual_terms,
                    ms: None,
                    detail: &c.detail,
                    residual: &c.residual,
                })
            })
            .collect(),
        summary: total(reports),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
    s.push('\n');
    s
}
