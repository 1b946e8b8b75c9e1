use crate::{PolyError, Q};
use num_traits::{One, Zero};

/// Dense univariate polynomial over Q, low degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    c: Vec<Q>,
}

impl UPoly {
    pub fn new(mut c: Vec<Q>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly { c }
    }

    pub fn zero() -> Self {
        UPoly { c: vec![] }
    }

    pub fn one() -> Self {
        UPoly { c: vec![Q::one()] }
    }

    pub fn constant(x: Q) -> Self {
        UPoly::new(vec![x])
    }

    /// `x^k`
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![Q::zero(); k + 1];
        c[k] = Q::one();
        UPoly { c }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        UPoly::new(c.iter().map(|&x| crate::q(x)).collect())
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.c.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> Q {
        self.c.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        UPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        UPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn neg(&self) -> UPoly {
        UPoly { c: self.c.iter().map(|x| -x).collect() }
    }

    pub fn scale(&self, k: &Q) -> UPoly {
        if k.is_zero() {
            return UPoly::zero();
        }
        UPoly { c: self.c.iter().map(|x| x * k).collect() }
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![Q::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        UPoly::new(c)
    }

    pub fn divrem(&self, d: &UPoly) -> Result<(UPoly, UPoly), PolyError> {
        let dd = d.degree().ok_or(PolyError::DivZero)?;
        let mut r = self.c.clone();
        if r.len() <= dd {
            return Ok((UPoly::zero(), self.clone()));
        }
        let lead = d.lead();
        let mut quo = vec![Q::zero(); r.len() - dd];
        for k in (0..quo.len()).rev() {
            let t = &r[k + dd] / &lead;
            if t.is_zero() {
                continue;
            }
            for (j, b) in d.c.iter().enumerate() {
                r[k + j] -= &t * b;
            }
            quo[k] = t;
        }
        r.truncate(dd);
        Ok((UPoly::new(quo), UPoly::new(r)))
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let l = self.lead();
        self.scale(&(Q::one() / l))
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*o = g` and `g` monic.
    pub fn ext_gcd(&self, o: &UPoly) -> (UPoly, UPoly, UPoly) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (UPoly::one(), UPoly::zero());
        let (mut t0, mut t1) = (UPoly::zero(), UPoly::one());
        while !r1.is_zero() {
            let (qq, r) = r0.divrem(&r1).expect("nonzero divisor");
            let s2 = s0.sub(&qq.mul(&s1));
            let t2 = t0.sub(&qq.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = Q::one() / r0.lead();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    /// Substitutes `x -> x^k`.
    pub fn inflate(&self, k: usize) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![Q::zero(); (self.c.len() - 1) * k + 1];
        for (i, a) in self.c.iter().enumerate() {
            c[i * k] = a.clone();
        }
        UPoly { c }
    }

    /// Lowest index with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero())
    }

    pub fn shift_down(&self, k: usize) -> UPoly {
        UPoly::new(self.c.iter().skip(k).cloned().collect())
    }

    pub fn is_integral(&self) -> bool {
        self.c.iter().all(|x| x.is_integer())
    }
}
