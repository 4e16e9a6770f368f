//! Alphabets and rewrite systems shared by the whole engine.

use std::sync::{Arc, OnceLock};

use crate::freealg::Alphabet;
use crate::parse::Context;
use crate::rewrite::{Order, RewriteSystem};

pub fn u_alphabet() -> &'static Arc<Alphabet> {
    static A: OnceLock<Arc<Alphabet>> = OnceLock::new();
    A.get_or_init(|| Alphabet::new("u", &["u11", "u12", "u13", "u21", "u22", "u23", "u31", "u32", "u33"]))
}

pub fn v_alphabet() -> &'static Arc<Alphabet> {
    static A: OnceLock<Arc<Alphabet>> = OnceLock::new();
    A.get_or_init(|| Alphabet::new("v", &["v11", "v12", "v21", "v22"]))
}

/// Parser context over the u-alphabet with `y_k = u_k2`.
pub fn u_context() -> Context {
    let a = u_alphabet();
    Context::over(a)
        .alias("y1", crate::NcPoly::named(a, "u12"))
        .alias("y2", crate::NcPoly::named(a, "u22"))
        .alias("y3", crate::NcPoly::named(a, "u32"))
}

pub fn x_alphabet() -> &'static Arc<Alphabet> {
    static A: OnceLock<Arc<Alphabet>> = OnceLock::new();
    A.get_or_init(|| Alphabet::new("x", &["x1", "x2", "x3"]))
}

pub fn e_alphabet() -> &'static Arc<Alphabet> {
    static A: OnceLock<Arc<Alphabet>> = OnceLock::new();
    A.get_or_init(|| Alphabet::new("e", &["e1", "e2", "e3"]))
}

/// Letter order b < a < d < c.
pub fn sl_alphabet() -> &'static Arc<Alphabet> {
    static A: OnceLock<Arc<Alphabet>> = OnceLock::new();
    A.get_or_init(|| Alphabet::new("sl2", &["b", "a", "d", "c"]))
}

/// Letter order F < K < Kinv < E.
pub fn uq_alphabet() -> &'static Arc<Alphabet> {
    static A: OnceLock<Arc<Alphabet>> = OnceLock::new();
    A.get_or_init(|| Alphabet::new("uq", &["F", "K", "Kinv", "E"]))
}

pub fn z_alphabet() -> &'static Arc<Alphabet> {
    static A: OnceLock<Arc<Alphabet>> = OnceLock::new();
    A.get_or_init(|| Alphabet::new("so2", &["z", "zinv"]))
}

pub const C3_RULES: [(&str, &str); 3] =
    [("x2*x1", "q^-1*x1*x2"), ("x3*x2", "q^-1*x2*x3"), ("x3*x1", "x1*x3 + (s - s^-1)*x2^2")];

pub const LAMBDA_RULES: [(&str, &str); 6] = [
    ("e1*e1", "0"),
    ("e3*e3", "0"),
    ("e2*e2", "(s - s^-1)*e1*e3"),
    ("e3*e2", "-q*e2*e3"),
    ("e3*e1", "-e1*e3"),
    ("e2*e1", "-q*e1*e2"),
];

/// a/d-weights make the two eliminations of `ad` and `da` order-decreasing.
pub const SL_WEIGHTS: [u32; 4] = [0, 1, 1, 0];

pub const SL_RULES: [(&str, &str); 7] = [
    ("a*b", "s*b*a"),
    ("c*a", "s^-1*a*c"),
    ("c*b", "b*c"),
    ("d*b", "s^-1*b*d"),
    ("c*d", "s*d*c"),
    ("a*d", "1 + s*b*c"),
    ("d*a", "1 + s^-1*b*c"),
];

pub const UQ_RULES: [(&str, &str); 7] = [
    ("E*F", "F*E + (K - Kinv)/(s - s^-1)"),
    ("E*K", "q^-1*K*E"),
    ("E*Kinv", "q*Kinv*E"),
    ("K*F", "q^-1*F*K"),
    ("Kinv*F", "q*F*Kinv"),
    ("K*Kinv", "1"),
    ("Kinv*K", "1"),
];

pub const Z_RULES: [(&str, &str); 2] = [("z*zinv", "1"), ("zinv*z", "1")];

fn build(name: &str, alpha: &Arc<Alphabet>, order: Order, rules: &[(&str, &str)]) -> RewriteSystem {
    RewriteSystem::from_text(name, alpha, order, rules).unwrap_or_else(|e| panic!("built-in system {name}: {e}"))
}

pub fn c3() -> &'static RewriteSystem {
    static S: OnceLock<RewriteSystem> = OnceLock::new();
    S.get_or_init(|| build("C3q", x_alphabet(), Order::DegLex, &C3_RULES))
}

pub fn lambda() -> &'static RewriteSystem {
    static S: OnceLock<RewriteSystem> = OnceLock::new();
    S.get_or_init(|| build("Lambda", e_alphabet(), Order::DegLex, &LAMBDA_RULES))
}

pub fn sl() -> &'static RewriteSystem {
    static S: OnceLock<RewriteSystem> = OnceLock::new();
    S.get_or_init(|| build("SL", sl_alphabet(), Order::Weighted(SL_WEIGHTS.to_vec()), &SL_RULES))
}

pub fn uq() -> &'static RewriteSystem {
    static S: OnceLock<RewriteSystem> = OnceLock::new();
    S.get_or_init(|| build("Uq", uq_alphabet(), Order::DegLex, &UQ_RULES))
}

pub fn so2() -> &'static RewriteSystem {
    static S: OnceLock<RewriteSystem> = OnceLock::new();
    S.get_or_init(|| build("SO2", z_alphabet(), Order::DegLex, &Z_RULES))
}

/// Look up a system by its CLI name.
pub fn by_name(name: &str) -> Option<&'static RewriteSystem> {
    match name {
        "sl2" | "sl" => Some(sl()),
        "c3" | "c3q" | "qvector" => Some(c3()),
        "lambda" | "exterior" => Some(lambda()),
        "uq" | "uqsl2" => Some(uq()),
        "so2" => Some(so2()),
        _ => None,
    }
}
