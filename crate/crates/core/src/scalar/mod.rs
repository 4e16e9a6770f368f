//! The coefficient field K = Q(i)(r)[w] / (w^2 - 1 - r^4), with r = q^{1/4}.

mod gauss;
mod poly;
mod rat;
mod ratfunc;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

pub use gauss::Gauss;
pub use poly::Poly;
pub use rat::Rat;
pub use ratfunc::RatFunc;

use serde::{Deserialize, Serialize};

/// Which coefficient conjugation a star structure uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Regime {
    /// q real: i -> -i, r -> r, w -> w.
    QReal,
    /// |q| = 1: i -> -i, r -> 1/r, w -> w r^-2.
    Unimodular,
}

/// `part0 + part1 * w`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    p0: RatFunc,
    p1: RatFunc,
}

impl Scalar {
    pub fn new(p0: RatFunc, p1: RatFunc) -> Scalar {
        Scalar { p0, p1 }
    }

    pub fn zero() -> Scalar {
        Scalar::default()
    }

    pub fn one() -> Scalar {
        Scalar::from_rf(RatFunc::one())
    }

    pub fn from_rf(p0: RatFunc) -> Scalar {
        Scalar { p0, p1: RatFunc::zero() }
    }

    pub fn int(n: i64) -> Scalar {
        Scalar::from_rf(RatFunc::constant(Gauss::int(n)))
    }

    pub fn rational(n: i64, d: i64) -> Scalar {
        Scalar::from_rf(RatFunc::constant(Gauss::real(Rat::new(n, d))))
    }

    pub fn gauss(c: Gauss) -> Scalar {
        Scalar::from_rf(RatFunc::constant(c))
    }

    pub fn i() -> Scalar {
        Scalar::gauss(Gauss::I)
    }

    /// r^k
    pub fn r_pow(k: i32) -> Scalar {
        Scalar::from_rf(RatFunc::monomial(Gauss::ONE, k))
    }

    pub fn r() -> Scalar {
        Scalar::r_pow(1)
    }

    /// s^k = q^{k/2} = r^{2k}
    pub fn s_pow(k: i32) -> Scalar {
        Scalar::r_pow(2 * k)
    }

    /// q^k = r^{4k}
    pub fn q_pow(k: i32) -> Scalar {
        Scalar::r_pow(4 * k)
    }

    pub fn q() -> Scalar {
        Scalar::q_pow(1)
    }

    pub fn w() -> Scalar {
        Scalar { p0: RatFunc::zero(), p1: RatFunc::one() }
    }

    /// lambda = q - q^-1
    pub fn lambda() -> Scalar {
        Scalar::q_pow(1) - Scalar::q_pow(-1)
    }

    /// s - s^-1 = q^{1/2} - q^{-1/2}
    pub fn s_minus() -> Scalar {
        Scalar::s_pow(1) - Scalar::s_pow(-1)
    }

    /// eta = w / r, so eta^2 = q^{1/2} + q^{-1/2}
    pub fn eta() -> Scalar {
        Scalar::w() * Scalar::r_pow(-1)
    }

    /// The q-integer [n] = (r^{2n} - r^{-2n}) / (r^2 - r^-2).
    pub fn qint(n: i64) -> Scalar {
        let n = i32::try_from(n).expect("q-integer index out of range");
        (Scalar::r_pow(2 * n) - Scalar::r_pow(-2 * n)) / (Scalar::r_pow(2) - Scalar::r_pow(-2))
    }

    pub fn part0(&self) -> &RatFunc {
        &self.p0
    }

    pub fn part1(&self) -> &RatFunc {
        &self.p1
    }

    pub fn is_zero(&self) -> bool {
        self.p0.is_zero() && self.p1.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.p0.is_one() && self.p1.is_zero()
    }

    pub fn is_minus_one(&self) -> bool {
        self.p1.is_zero() && self.p0.neg().is_one()
    }

    /// Constant value in Q(i), if any.
    pub fn as_gauss(&self) -> Option<Gauss> {
        if self.p1.is_zero() {
            self.p0.as_constant()
        } else {
            None
        }
    }

    /// Value at r = 1 when it is rational in Q(i): the w-part must vanish
    /// (w(1) = sqrt 2) and the denominator must not vanish at 1.
    pub fn eval_at_one(&self) -> Option<Gauss> {
        if !self.p1.is_zero() {
            return None;
        }
        self.p0.eval_at_one()
    }

    fn w2() -> RatFunc {
        RatFunc::laurent(0, Poly::from_coeffs(vec![Gauss::ONE, Gauss::ZERO, Gauss::ZERO, Gauss::ZERO, Gauss::ONE]))
    }

    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero scalar");
        if self.p1.is_zero() {
            return Scalar::from_rf(self.p0.inv());
        }
        let norm = self.p0.mul(&self.p0).sub(&Scalar::w2().mul(&self.p1.mul(&self.p1)));
        let ni = norm.inv();
        Scalar { p0: self.p0.mul(&ni), p1: self.p1.neg().mul(&ni) }
    }

    pub fn conjugate(&self, regime: Regime) -> Scalar {
        match regime {
            Regime::QReal => Scalar { p0: self.p0.conj_coeffs(), p1: self.p1.conj_coeffs() },
            Regime::Unimodular => Scalar {
                p0: self.p0.conj_coeffs().invert_r(),
                p1: self.p1.conj_coeffs().invert_r().shift_by(-2),
            },
        }
    }

    pub fn pow(&self, k: i64) -> Scalar {
        if k < 0 {
            return self.inv().pow(-k);
        }
        let mut acc = Scalar::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Single product of atoms such as `3*r^2`, `i*w` or `(1/2)*r^-2`; these
    /// print without surrounding parentheses.
    fn is_atomic(&self) -> bool {
        match (self.p0.is_zero(), self.p1.is_zero()) {
            (_, true) => self.p0.is_single_term(),
            (true, false) => self.p1.is_single_term(),
            _ => false,
        }
    }

    fn looks_negative(&self) -> bool {
        let rf = if self.p1.is_zero() { &self.p0 } else { &self.p1 };
        rf.as_monomial().is_some_and(|(c, _)| c.looks_negative())
    }

    /// Rendering as a left factor of a monomial: `(neg, Some(text))`, or
    /// `(neg, None)` when the factor is 1.
    pub fn as_factor(&self) -> (bool, Option<String>) {
        if self.is_atomic() {
            let neg = self.looks_negative();
            let m = if neg { -self } else { self.clone() };
            if m.is_one() {
                return (neg, None);
            }
            return (neg, Some(m.to_string()));
        }
        (false, Some(format!("({self})")))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        if !self.p0.is_zero() || self.p1.is_zero() {
            out.push_str(&self.p0.render());
        }
        if !self.p1.is_zero() {
            let wpart = if self.p1.is_one() {
                "w".to_string()
            } else if self.p1.neg().is_one() {
                "-w".to_string()
            } else if self.p1.is_single_term() {
                format!("{}*w", self.p1.render())
            } else if self.p1.is_laurent() {
                format!("({})*w", self.p1.render())
            } else {
                format!("{}*w", self.p1.render())
            };
            if out.is_empty() {
                out = wpart;
            } else if let Some(rest) = wpart.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&wpart);
            }
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = crate::parse::ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        crate::parse::parse_scalar(s)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        Scalar { p0: self.p0.add(&o.p0), p1: self.p1.add(&o.p1) }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        Scalar { p0: self.p0.sub(&o.p0), p1: self.p1.sub(&o.p1) }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        if self.p1.is_zero() && o.p1.is_zero() {
            return Scalar::from_rf(self.p0.mul(&o.p0));
        }
        let p0 = self.p0.mul(&o.p0).add(&Scalar::w2().mul(&self.p1.mul(&o.p1)));
        let p1 = self.p0.mul(&o.p1).add(&self.p1.mul(&o.p0));
        Scalar { p0, p1 }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, o: &Scalar) -> Scalar {
        if o.p1.is_zero() {
            return Scalar { p0: self.p0.div(&o.p0), p1: self.p1.div(&o.p0) };
        }
        self * &o.inv()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { p0: self.p0.neg(), p1: self.p1.neg() }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$m(&o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);
owned_ops!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qint_small_values() {
        assert!(Scalar::qint(0).is_zero());
        assert!(Scalar::qint(1).is_one());
        assert_eq!(Scalar::qint(2), Scalar::r_pow(2) + Scalar::r_pow(-2));
        assert_eq!(Scalar::qint(-3), -Scalar::qint(3));
    }

    #[test]
    fn qint_recursion() {
        for n in 2..=8 {
            assert_eq!(Scalar::qint(n), Scalar::qint(2) * Scalar::qint(n - 1) - Scalar::qint(n - 2));
        }
    }

    #[test]
    fn w_relation_and_eta() {
        let w = Scalar::w();
        assert!((&w * &w - Scalar::one() - Scalar::r_pow(4)).is_zero());
        let eta = Scalar::eta();
        assert_eq!(&eta * &eta, Scalar::r_pow(2) + Scalar::r_pow(-2));
    }

    #[test]
    fn conjugations() {
        assert_eq!(Scalar::i().conjugate(Regime::QReal), -Scalar::i());
        let w = Scalar::w();
        let cw = w.conjugate(Regime::Unimodular);
        assert_eq!(cw, &w * &Scalar::r_pow(-2));
        assert_eq!(cw.conjugate(Regime::Unimodular), w);
        for n in 0..=8 {
            assert_eq!(Scalar::qint(n).conjugate(Regime::Unimodular), Scalar::qint(n));
        }
        assert_eq!(Scalar::eta().conjugate(Regime::Unimodular), Scalar::eta());
    }

    #[test]
    fn display_examples() {
        let x = Scalar::rational(1, 2) * Scalar::r_pow(-2) + Scalar::i() * Scalar::w();
        assert_eq!(x.to_string(), "(1/2)*r^-2 + i*w");
        assert_eq!(Scalar::qint(3).to_string(), "r^4 + 1 + r^-4");
        let f = Scalar::one() / (Scalar::one() + Scalar::q());
        assert_eq!(f.to_string(), "(1)/(r^4 + 1)");
        assert_eq!(Scalar::int(-1).to_string(), "-1");
        assert_eq!(Scalar::zero().to_string(), "0");
    }

    #[test]
    fn inverse_with_w_part() {
        let x = Scalar::r() + Scalar::w() * Scalar::int(3);
        assert!((&x * &x.inv()).is_one());
    }

    #[test]
    fn eval_at_one() {
        let c = (Scalar::one() - Scalar::q()).pow(2) / (Scalar::one() + Scalar::q().pow(2));
        assert!(c.eval_at_one().unwrap().is_zero());
        let bad = Scalar::one() / (Scalar::q() - Scalar::one());
        assert!(bad.eval_at_one().is_none());
        assert!(Scalar::w().eval_at_one().is_none());
    }
}
