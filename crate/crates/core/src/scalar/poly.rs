use super::gauss::Gauss;

/// Dense univariate polynomial in r over Q(i), low degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Poly(pub Vec<Gauss>);

impl Poly {
    pub fn zero() -> Poly {
        Poly(Vec::new())
    }

    pub fn one() -> Poly {
        Poly(vec![Gauss::ONE])
    }

    pub fn constant(c: Gauss) -> Poly {
        let mut p = Poly(vec![c]);
        p.trim();
        p
    }

    pub fn from_coeffs(v: Vec<Gauss>) -> Poly {
        let mut p = Poly(v);
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(Gauss::is_zero) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn lead(&self) -> &Gauss {
        self.0.last().expect("lead of zero polynomial")
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> usize {
        self.0.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn shift_down(&self, k: usize) -> Poly {
        Poly(self.0[k..].to_vec())
    }

    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut v = vec![Gauss::ZERO; k];
        v.extend(self.0.iter().cloned());
        Poly(v)
    }

    pub fn neg(&self) -> Poly {
        Poly(self.0.iter().map(Gauss::neg).collect())
    }

    pub fn scale(&self, c: &Gauss) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Poly(self.0.iter().map(|x| x.mul(c)).collect())
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let (long, short) = if self.0.len() >= o.0.len() { (self, o) } else { (o, self) };
        let mut v = long.0.clone();
        for (i, c) in short.0.iter().enumerate() {
            v[i] = v[i].add(c);
        }
        Poly::from_coeffs(v)
    }

    /// self + o * r^k
    pub fn add_shifted(&self, o: &Poly, k: usize) -> Poly {
        let n = self.0.len().max(o.0.len() + k);
        let mut v = self.0.clone();
        v.resize(n, Gauss::ZERO);
        for (i, c) in o.0.iter().enumerate() {
            v[i + k] = v[i + k].add(c);
        }
        Poly::from_coeffs(v)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        let mut v = vec![Gauss::ZERO; self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                v[i + j] = v[i + j].add(&a.mul(b));
            }
        }
        Poly::from_coeffs(v)
    }

    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        if self.0.len() < d.0.len() {
            return (Poly::zero(), self.clone());
        }
        let inv_lead = d.lead().inv();
        let mut rem = self.0.clone();
        let dn = d.0.len();
        let mut quot = vec![Gauss::ZERO; rem.len() - dn + 1];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dn - 1].mul(&inv_lead);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.0.iter().enumerate() {
                rem[k + j] = rem[k + j].sub(&c.mul(dc));
            }
            quot[k] = c;
        }
        rem.truncate(dn - 1);
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn exact_div(&self, d: &Poly) -> Poly {
        if d.is_one() {
            return self.clone();
        }
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() || self.lead().is_one() {
            return self.clone();
        }
        self.scale(&self.lead().inv())
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, o: &Poly) -> Poly {
        if self.is_one() || o.is_one() {
            return Poly::one();
        }
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            if b.0.len() == 1 {
                return Poly::one();
            }
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn reverse(&self) -> Poly {
        let mut v = self.0.clone();
        v.reverse();
        Poly::from_coeffs(v)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Gauss) -> Gauss) -> Poly {
        Poly::from_coeffs(self.0.iter().map(f).collect())
    }

    pub fn eval(&self, x: &Gauss) -> Gauss {
        let mut acc = Gauss::ZERO;
        for c in self.0.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }
}
