use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

/// Exact rational number. Values that fit in `i64/i64` stay on the stack;
/// everything else spills to a `BigRational`. The representation is canonical,
/// so derived equality and hashing are value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Rat {
    Small(i64, i64),
    Big(BigRational),
}

impl Rat {
    pub const ZERO: Rat = Rat::Small(0, 1);
    pub const ONE: Rat = Rat::Small(1, 1);

    pub fn int(n: i64) -> Rat {
        Rat::Small(n, 1)
    }

    pub fn new(n: i64, d: i64) -> Rat {
        assert!(d != 0, "zero denominator");
        Rat::from_i128(n as i128, d as i128)
    }

    fn from_i128(mut n: i128, mut d: i128) -> Rat {
        if n == 0 {
            return Rat::ZERO;
        }
        if d < 0 {
            n = -n;
            d = -d;
        }
        let g = n.gcd(&d);
        if g != 1 {
            n /= g;
            d /= g;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(a), Ok(b)) => Rat::Small(a, b),
            _ => Rat::Big(BigRational::new_raw(BigInt::from(n), BigInt::from(d))),
        }
    }

    pub fn from_big(r: BigRational) -> Rat {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(a), Some(b)) => Rat::Small(a, b),
            _ => Rat::Big(r),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rat::Small(a, b) => BigRational::new_raw(BigInt::from(*a), BigInt::from(*b)),
            Rat::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rat::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rat::Small(1, 1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Rat::Small(a, _) => *a < 0,
            Rat::Big(r) => r.is_negative(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rat::Small(_, b) => *b == 1,
            Rat::Big(r) => r.is_integer(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Rat::Small(a, _) => BigInt::from(*a),
            Rat::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Rat::Small(_, b) => BigInt::from(*b),
            Rat::Big(r) => r.denom().clone(),
        }
    }

    pub fn neg(&self) -> Rat {
        match self {
            Rat::Small(a, b) => match a.checked_neg() {
                Some(n) => Rat::Small(n, *b),
                None => Rat::from_big(-self.to_big()),
            },
            Rat::Big(r) => Rat::from_big(-r.clone()),
        }
    }

    pub fn add(&self, o: &Rat) -> Rat {
        match (self, o) {
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    return match a.checked_add(*c) {
                        Some(s) => Rat::Small(s, 1),
                        None => Rat::from_i128(*a as i128 + *c as i128, 1),
                    };
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Rat::from_i128(a * d + c * b, b * d)
            }
            _ => Rat::from_big(self.to_big() + o.to_big()),
        }
    }

    pub fn sub(&self, o: &Rat) -> Rat {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Rat) -> Rat {
        match (self, o) {
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    return match a.checked_mul(*c) {
                        Some(p) => Rat::Small(p, 1),
                        None => Rat::from_i128(*a as i128 * *c as i128, 1),
                    };
                }
                Rat::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rat::from_big(self.to_big() * o.to_big()),
        }
    }

    pub fn inv(&self) -> Rat {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Rat::Small(a, b) => Rat::from_i128(*b as i128, *a as i128),
            Rat::Big(r) => Rat::from_big(r.recip()),
        }
    }

    pub fn div(&self, o: &Rat) -> Rat {
        self.mul(&o.inv())
    }

    pub fn abs(&self) -> Rat {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }
}

impl Default for Rat {
    fn default() -> Self {
        Rat::ZERO
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::int(n)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::Small(a, 1) => write!(f, "{a}"),
            Rat::Small(a, b) => write!(f, "{a}/{b}"),
            Rat::Big(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Rat::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
