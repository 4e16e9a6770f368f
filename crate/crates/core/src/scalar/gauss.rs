use std::fmt;

use super::rat::Rat;

/// Element of Q(i).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gauss {
    pub re: Rat,
    pub im: Rat,
}

impl Gauss {
    pub const ZERO: Gauss = Gauss { re: Rat::ZERO, im: Rat::ZERO };
    pub const ONE: Gauss = Gauss { re: Rat::ONE, im: Rat::ZERO };
    pub const I: Gauss = Gauss { re: Rat::ZERO, im: Rat::ONE };

    pub fn new(re: Rat, im: Rat) -> Gauss {
        Gauss { re, im }
    }

    pub fn real(re: Rat) -> Gauss {
        Gauss { re, im: Rat::ZERO }
    }

    pub fn int(n: i64) -> Gauss {
        Gauss::real(Rat::int(n))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn neg(&self) -> Gauss {
        Gauss { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn conj(&self) -> Gauss {
        Gauss { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn add(&self, o: &Gauss) -> Gauss {
        Gauss { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn sub(&self, o: &Gauss) -> Gauss {
        Gauss { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    pub fn mul(&self, o: &Gauss) -> Gauss {
        if self.im.is_zero() && o.im.is_zero() {
            return Gauss::real(self.re.mul(&o.re));
        }
        Gauss {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn inv(&self) -> Gauss {
        if self.im.is_zero() {
            return Gauss::real(self.re.inv());
        }
        let n = self.re.mul(&self.re).add(&self.im.mul(&self.im)).inv();
        Gauss { re: self.re.mul(&n), im: self.im.neg().mul(&n) }
    }

    pub fn div(&self, o: &Gauss) -> Gauss {
        self.mul(&o.inv())
    }

    /// Sign used by the printer to pull a leading minus out of a term.
    pub fn looks_negative(&self) -> bool {
        if self.re.is_zero() {
            self.im.is_negative()
        } else {
            self.im.is_zero() && self.re.is_negative()
        }
    }

    /// Text of a coefficient as a multiplicative atom, e.g. `3`, `(1/2)`, `i`,
    /// `2*i`, `(1 + 2*i)`. Assumes a non-negative appearance; callers strip
    /// signs with [`Gauss::looks_negative`].
    pub fn atom(&self) -> String {
        fn rat_atom(r: &Rat) -> String {
            if r.is_integer() {
                r.to_string()
            } else {
                format!("({r})")
            }
        }
        if self.im.is_zero() {
            return rat_atom(&self.re);
        }
        if self.re.is_zero() {
            return if self.im.is_one() { "i".into() } else { format!("{}*i", rat_atom(&self.im)) };
        }
        let im = if self.im.is_one() {
            " + i".to_string()
        } else if self.im.neg().is_one() {
            " - i".to_string()
        } else if self.im.is_negative() {
            format!(" - {}*i", rat_atom(&self.im.neg()))
        } else {
            format!(" + {}*i", rat_atom(&self.im))
        };
        format!("({}{})", self.re, im)
    }
}

impl fmt::Debug for Gauss {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.looks_negative() {
            write!(f, "-{}", self.neg().atom())
        } else {
            write!(f, "{}", self.atom())
        }
    }
}
