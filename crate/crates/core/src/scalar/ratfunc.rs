use super::gauss::Gauss;
use super::poly::Poly;

/// Rational function `r^shift * num / den` over Q(i).
///
/// Canonical form: zero is `(0, 0, 1)`; otherwise `num(0) != 0`, `den(0) != 0`,
/// `den` monic and coprime to `num`. Laurent polynomials have `den == 1`, so
/// the common case never touches a polynomial gcd.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    shift: i32,
    num: Poly,
    den: Poly,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl RatFunc {
    pub fn zero() -> RatFunc {
        RatFunc { shift: 0, num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> RatFunc {
        RatFunc::constant(Gauss::ONE)
    }

    pub fn constant(c: Gauss) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { shift: 0, num: Poly(vec![c]), den: Poly::one() }
    }

    /// `c * r^k`
    pub fn monomial(c: Gauss, k: i32) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { shift: k, num: Poly(vec![c]), den: Poly::one() }
    }

    /// `r^shift * p` for an arbitrary polynomial `p`.
    pub fn laurent(shift: i32, p: Poly) -> RatFunc {
        RatFunc::normalize(shift, p, Poly::one())
    }

    pub fn from_parts(shift: i32, num: Poly, den: Poly) -> RatFunc {
        assert!(!den.is_zero(), "zero denominator");
        RatFunc::normalize(shift, num, den)
    }

    fn normalize(mut shift: i32, mut num: Poly, mut den: Poly) -> RatFunc {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let v = num.valuation();
        if v > 0 {
            num = num.shift_down(v);
            shift += v as i32;
        }
        let vd = den.valuation();
        if vd > 0 {
            den = den.shift_down(vd);
            shift -= vd as i32;
        }
        if den.degree() > 0 {
            let g = num.gcd(&den);
            if !g.is_one() {
                num = num.exact_div(&g);
                den = den.exact_div(&g);
            }
        }
        if !den.lead().is_one() {
            let c = den.lead().inv();
            num = num.scale(&c);
            den = den.scale(&c);
        }
        RatFunc { shift, num, den }
    }

    pub fn shift(&self) -> i32 {
        self.shift
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.num.is_one() && self.den.is_one()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// `Some((c, k))` when the value is `c * r^k`.
    pub fn as_monomial(&self) -> Option<(&Gauss, i32)> {
        if self.den.is_one() && self.num.0.len() == 1 {
            Some((&self.num.0[0], self.shift))
        } else {
            None
        }
    }

    /// `Some(c)` when the value is a constant in Q(i).
    pub fn as_constant(&self) -> Option<Gauss> {
        if self.is_zero() {
            return Some(Gauss::ZERO);
        }
        match self.as_monomial() {
            Some((c, 0)) => Some(c.clone()),
            _ => None,
        }
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { shift: self.shift, num: self.num.neg(), den: self.den.clone() }
    }

    pub fn scale(&self, c: &Gauss) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { shift: self.shift, num: self.num.scale(c), den: self.den.clone() }
    }

    /// Multiply by `r^k`.
    pub fn shift_by(&self, k: i32) -> RatFunc {
        if self.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { shift: self.shift + k, num: self.num.clone(), den: self.den.clone() }
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let m = self.shift.min(o.shift);
        let a = (self.shift - m) as usize;
        let b = (o.shift - m) as usize;
        if self.den == o.den {
            let num = self.num.shift_up(a).add_shifted(&o.num, b);
            return RatFunc::normalize(m, num, self.den.clone());
        }
        let g = self.den.gcd(&o.den);
        let d1 = self.den.exact_div(&g);
        let d2 = o.den.exact_div(&g);
        let num = self.num.mul(&d2).shift_up(a).add_shifted(&o.num.mul(&d1), b);
        RatFunc::normalize(m, num, d1.mul(&o.den))
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        let shift = self.shift + o.shift;
        if self.den.is_one() && o.den.is_one() {
            return RatFunc { shift, num: self.num.mul(&o.num), den: Poly::one() };
        }
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let num = self.num.exact_div(&g1).mul(&o.num.exact_div(&g2));
        let den = self.den.exact_div(&g2).mul(&o.den.exact_div(&g1));
        RatFunc { shift, num, den }
    }

    pub fn inv(&self) -> RatFunc {
        assert!(!self.is_zero(), "inverse of zero rational function");
        let c = self.num.lead().inv();
        RatFunc { shift: -self.shift, num: self.den.scale(&c), den: self.num.scale(&c) }
    }

    pub fn div(&self, o: &RatFunc) -> RatFunc {
        self.mul(&o.inv())
    }

    /// Conjugate the Q(i) coefficients.
    pub fn conj_coeffs(&self) -> RatFunc {
        RatFunc {
            shift: self.shift,
            num: self.num.map_coeffs(Gauss::conj),
            den: self.den.map_coeffs(Gauss::conj),
        }
    }

    /// Substitute `r -> 1/r`.
    pub fn invert_r(&self) -> RatFunc {
        if self.is_zero() {
            return RatFunc::zero();
        }
        let shift = -self.shift - self.num.degree() as i32 + self.den.degree() as i32;
        let num = self.num.reverse();
        let den = self.den.reverse();
        let c = den.lead().inv();
        RatFunc { shift, num: num.scale(&c), den: den.scale(&c) }
    }

    /// Exact value at `r = 1`, when the denominator does not vanish there.
    pub fn eval_at_one(&self) -> Option<Gauss> {
        let one = Gauss::ONE;
        let d = self.den.eval(&one);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(&one).div(&d))
    }

    fn render_laurent(shift: i32, p: &Poly) -> String {
        let mut out = String::new();
        for (i, c) in p.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let e = shift + i as i32;
            let neg = c.looks_negative();
            let c = if neg { c.neg() } else { c.clone() };
            let body = match (e, c.is_one()) {
                (0, _) => c.atom(),
                (_, true) => rpow(e),
                (_, false) => format!("{}*{}", c.atom(), rpow(e)),
            };
            match (out.is_empty(), neg) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    pub fn is_single_term(&self) -> bool {
        self.den.is_one() && self.num.0.iter().filter(|c| !c.is_zero()).count() == 1
    }

    pub fn render(&self) -> String {
        if self.den.is_one() {
            RatFunc::render_laurent(self.shift, &self.num)
        } else {
            format!(
                "({})/({})",
                RatFunc::render_laurent(self.shift, &self.num),
                RatFunc::render_laurent(0, &self.den)
            )
        }
    }
}

fn rpow(e: i32) -> String {
    if e == 1 {
        "r".into()
    } else {
        format!("r^{e}")
    }
}
