use crate::upoly::UPoly;
use crate::{fmt_q, parse_q, sqrt_q, PolyError, Q};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Laurent polynomial in `u^{1/2}`. Keys are doubled exponents, so `u^{3/2}`
/// lives under key 3 and `u^2` under key 4.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Q>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        LaurentPoly::monomial(c, 0)
    }

    pub fn from_int(n: i64) -> Self {
        LaurentPoly::constant(crate::q(n))
    }

    /// `c * u^{e2/2}`
    pub fn monomial(c: Q, e2: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e2, c);
        }
        LaurentPoly { terms }
    }

    /// `u^k`
    pub fn u_pow(k: i64) -> Self {
        LaurentPoly::monomial(Q::one(), 2 * k)
    }

    /// Builds `sum c_i u^i` from integer coefficients, lowest first.
    pub fn from_coeffs(c: &[i64]) -> Self {
        let mut p = LaurentPoly::zero();
        for (i, &x) in c.iter().enumerate() {
            p.add_term(2 * i as i64, crate::q(x));
        }
        p
    }

    pub fn terms(&self) -> &BTreeMap<i64, Q> {
        &self.terms
    }

    pub fn coeff2(&self, e2: i64) -> Q {
        self.terms.get(&e2).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, e2: i64, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(e2).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&e2);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn as_constant(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn min_exp2(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp2(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn has_half_exponents(&self) -> bool {
        self.terms.keys().any(|e| e % 2 != 0)
    }

    /// True when only non-negative integer powers of `u` occur.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|&e| e >= 0 && e % 2 == 0)
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn scale(&self, k: &Q) -> Self {
        if k.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect() }
    }

    /// Multiplies by `u^{e2/2}`.
    pub fn shift2(&self, e2: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + e2, c.clone())).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Splits as `v^shift * P(v)` with `v = u^{1/2}` and `P(0) != 0`.
    pub fn to_upoly(&self) -> (i64, UPoly) {
        let Some(lo) = self.min_exp2() else {
            return (0, UPoly::zero());
        };
        let hi = self.max_exp2().unwrap();
        let mut c = vec![Q::zero(); (hi - lo + 1) as usize];
        for (e, x) in &self.terms {
            c[(e - lo) as usize] = x.clone();
        }
        (lo, UPoly::new(c))
    }

    pub fn from_upoly(shift: i64, p: &UPoly) -> Self {
        let mut terms = BTreeMap::new();
        for (i, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                terms.insert(shift + i as i64, c.clone());
            }
        }
        LaurentPoly { terms }
    }

    /// Coefficients of an honest polynomial in `u`, lowest first.
    pub fn to_u_coeffs(&self) -> Option<Vec<Q>> {
        if !self.is_polynomial() {
            return None;
        }
        let hi = self.max_exp2().unwrap_or(0) / 2;
        let mut out = vec![Q::zero(); hi as usize + 1];
        for (e, c) in &self.terms {
            out[(*e / 2) as usize] = c.clone();
        }
        Some(out)
    }

    pub fn divide_exact(&self, g: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
        if g.is_zero() {
            return Err(PolyError::DivZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let (sf, pf) = self.to_upoly();
        let (sg, pg) = g.to_upoly();
        let (qq, r) = pf.divrem(&pg)?;
        if !r.is_zero() {
            return Err(PolyError::NotDivisible);
        }
        Ok(LaurentPoly::from_upoly(sf - sg, &qq))
    }

    pub fn evaluate(&self, x: &Q) -> Result<Q, PolyError> {
        if self.is_zero() {
            return Ok(Q::zero());
        }
        let root = if self.has_half_exponents() {
            Some(sqrt_q(x).ok_or_else(|| PolyError::NonSquareSpecialization(fmt_q(x)))?)
        } else {
            None
        };
        if x.is_zero() && self.min_exp2().unwrap() < 0 {
            return Err(PolyError::PoleAtPoint(fmt_q(x)));
        }
        let mut acc = Q::zero();
        for (e, c) in &self.terms {
            let v = match &root {
                Some(r) => pow_q(r, *e),
                None => pow_q(x, e / 2),
            };
            acc += c * v;
        }
        Ok(acc)
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if neg {
                s.push('-');
            } else if i > 0 {
                s.push('+');
            }
            let a = c.abs();
            if *e == 0 {
                s.push_str(&fmt_q(&a));
                continue;
            }
            if !a.is_one() {
                s.push_str(&fmt_q(&a));
            }
            s.push_str(var);
            if *e != 2 {
                s.push('^');
                if e % 2 == 0 {
                    s.push_str(&(e / 2).to_string());
                } else {
                    s.push_str(&format!("{e}/2"));
                }
            }
        }
        s
    }

    /// Inverse of [`LaurentPoly::display_in`].
    pub fn parse_in(src: &str, var: &str) -> Result<LaurentPoly, PolyError> {
        let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || PolyError::Parse(format!("bad polynomial {src:?}"));
        if s.is_empty() {
            return Err(err());
        }
        let b = s.as_bytes();
        let mut i = 0;
        let mut out = LaurentPoly::zero();
        let take_num = |i: &mut usize| -> String {
            let st = *i;
            while *i < b.len() && b[*i].is_ascii_digit() {
                *i += 1;
            }
            if *i < b.len() && b[*i] == b'/' && *i + 1 < b.len() && b[*i + 1].is_ascii_digit() {
                *i += 1;
                while *i < b.len() && b[*i].is_ascii_digit() {
                    *i += 1;
                }
            }
            s[st..*i].to_string()
        };
        while i < b.len() {
            let mut sign = Q::one();
            if b[i] == b'+' || b[i] == b'-' {
                if b[i] == b'-' {
                    sign = -sign;
                }
                i += 1;
            } else if i > 0 {
                return Err(err());
            }
            let cs = take_num(&mut i);
            let coef = if cs.is_empty() { Q::one() } else { parse_q(&cs)? };
            let mut e2 = 0i64;
            if s[i..].starts_with(var) {
                i += var.len();
                e2 = 2;
                if i < b.len() && b[i] == b'^' {
                    i += 1;
                    let mut neg = false;
                    if i < b.len() && b[i] == b'-' {
                        neg = true;
                        i += 1;
                    }
                    let es = take_num(&mut i);
                    if es.is_empty() {
                        return Err(err());
                    }
                    let ex = parse_q(&es)? * crate::q(2);
                    if !ex.is_integer() {
                        return Err(err());
                    }
                    e2 = ex.to_integer().try_into().map_err(|_| err())?;
                    if neg {
                        e2 = -e2;
                    }
                }
            } else if cs.is_empty() {
                return Err(err());
            }
            out.add_term(e2, sign * coef);
        }
        Ok(out)
    }
}

/// `x^k` for possibly negative `k` (caller guarantees `x != 0` when `k < 0`).
pub fn pow_q(x: &Q, k: i64) -> Q {
    let mut acc = Q::one();
    for _ in 0..k.unsigned_abs() {
        acc *= x;
    }
    if k < 0 {
        Q::one() / acc
    } else {
        acc
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("u"))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, c.clone());
        }
        r
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, -c.clone());
        }
        r
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        let mut r = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                r.add_term(e1 + e2, c1 * c2);
            }
        }
        r
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

macro_rules! owned_ops {
    ($t:ty) => {
        impl std::ops::Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                &self + &o
            }
        }
        impl std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                &self - &o
            }
        }
        impl std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                &self * &o
            }
        }
        impl std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}
pub(crate) use owned_ops;
owned_ops!(LaurentPoly);
