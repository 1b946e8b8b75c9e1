use crate::laurent::{owned_ops, LaurentPoly};
use crate::upoly::UPoly;
use crate::{PolyError, Q};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Quotient of Laurent polynomials in `u^{1/2}`.
///
/// Canonical form: the denominator is a monic polynomial in `v = u^{1/2}`
/// with nonzero constant term and coprime to the numerator; every power of
/// `v` lives in the numerator. Equality is therefore structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFun {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RatFun {
    fn default() -> Self {
        RatFun::zero()
    }
}

impl From<LaurentPoly> for RatFun {
    fn from(p: LaurentPoly) -> Self {
        RatFun { num: p, den: LaurentPoly::one() }
    }
}

impl RatFun {
    pub fn zero() -> Self {
        LaurentPoly::zero().into()
    }

    pub fn one() -> Self {
        LaurentPoly::one().into()
    }

    pub fn from_int(n: i64) -> Self {
        LaurentPoly::from_int(n).into()
    }

    pub fn constant(c: Q) -> Self {
        LaurentPoly::constant(c).into()
    }

    pub fn u_pow(k: i64) -> Self {
        LaurentPoly::u_pow(k).into()
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<RatFun, PolyError> {
        if den.is_zero() {
            return Err(PolyError::DivZero);
        }
        if num.is_zero() {
            return Ok(RatFun::zero());
        }
        let (sn, pn) = num.to_upoly();
        let (sd, pd) = den.to_upoly();
        let (pn, pd) = if pd.degree() == Some(0) {
            (pn, pd)
        } else {
            let g = pn.gcd(&pd);
            (pn.divrem(&g)?.0, pd.divrem(&g)?.0)
        };
        let inv = Q::one() / pd.lead();
        Ok(RatFun {
            num: LaurentPoly::from_upoly(sn - sd, &pn.scale(&inv)),
            den: LaurentPoly::from_upoly(0, &pd.scale(&inv)),
        })
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The Laurent polynomial this equals, if any.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<RatFun, PolyError> {
        RatFun::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &RatFun) -> Result<RatFun, PolyError> {
        Ok(self * &o.inv()?)
    }

    pub fn scale(&self, k: &Q) -> RatFun {
        if k.is_zero() {
            return RatFun::zero();
        }
        RatFun { num: self.num.scale(k), den: self.den.clone() }
    }

    pub fn shift2(&self, e2: i64) -> RatFun {
        RatFun { num: self.num.shift2(e2), den: self.den.clone() }
    }

    pub fn evaluate(&self, x: &Q) -> Result<Q, PolyError> {
        let d = self.den.evaluate(x)?;
        if d.is_zero() {
            return Err(PolyError::PoleAtPoint(crate::fmt_q(x)));
        }
        Ok(self.num.evaluate(x)? / d)
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.den.is_one() {
            self.num.display_in(var)
        } else {
            format!("({})/({})", self.num.display_in(var), self.den.display_in(var))
        }
    }

    pub fn parse_in(s: &str, var: &str) -> Result<RatFun, PolyError> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('(') {
            if let Some((a, b)) = rest.split_once(")/(") {
                let b = b.strip_suffix(')').ok_or_else(|| PolyError::Parse(s.into()))?;
                return RatFun::new(LaurentPoly::parse_in(a, var)?, LaurentPoly::parse_in(b, var)?);
            }
        }
        Ok(LaurentPoly::parse_in(s, var)?.into())
    }

    fn den_upoly(&self) -> UPoly {
        self.den.to_upoly().1
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("u"))
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, o: &RatFun) -> RatFun {
        if self.den == o.den {
            if self.den.is_one() {
                return (&self.num + &o.num).into();
            }
            return RatFun::new(&self.num + &o.num, self.den.clone()).unwrap();
        }
        let (a, b) = (self.den_upoly(), o.den_upoly());
        let g = a.gcd(&b);
        let a1 = LaurentPoly::from_upoly(0, &a.divrem(&g).unwrap().0);
        let b1 = LaurentPoly::from_upoly(0, &b.divrem(&g).unwrap().0);
        let num = &(&self.num * &b1) + &(&o.num * &a1);
        RatFun::new(num, &self.den * &b1).unwrap()
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, o: &RatFun) -> RatFun {
        self + &(-o)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, o: &RatFun) -> RatFun {
        if self.den.is_one() && o.den.is_one() {
            return (&self.num * &o.num).into();
        }
        RatFun::new(&self.num * &o.num, &self.den * &o.den).unwrap()
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

owned_ops!(RatFun);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;

    fn l(s: &str) -> LaurentPoly {
        LaurentPoly::parse_in(s, "u").unwrap()
    }

    #[test]
    fn reductions() {
        assert_eq!(RatFun::new(l("u^2-1"), l("u-1")).unwrap(), RatFun::from(l("u+1")));
        assert_eq!(RatFun::new(l("0"), l("u^3")).unwrap(), RatFun::zero());
        assert_eq!(RatFun::new(l("u^5-u"), l("u^4-1")).unwrap(), RatFun::from(l("u")));
        assert_eq!(RatFun::new(l("1"), l("0")), Err(PolyError::DivZero));
    }

    #[test]
    fn canonical_is_structural() {
        let a = RatFun::new(l("2u+2"), l("4u^2-4")).unwrap();
        let b = RatFun::new(l("1"), l("2u-2")).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.den(), &l("u-1"));
        let c = RatFun::new(l("u^3"), l("u^5+u^4")).unwrap();
        assert_eq!(c.num(), &l("u^-1"));
    }

    #[test]
    fn field_ops() {
        let a = RatFun::new(l("1"), l("u-1")).unwrap();
        let b = RatFun::new(l("1"), l("u+1")).unwrap();
        assert_eq!(&a + &b, RatFun::new(l("2u"), l("u^2-1")).unwrap());
        assert_eq!(&(&a * &b) * &RatFun::from(l("u^2-1")), RatFun::one());
        assert_eq!(a.evaluate(&q(3)).unwrap(), crate::qf(1, 2));
        assert!(matches!(a.evaluate(&q(1)), Err(PolyError::PoleAtPoint(_))));
    }

    #[test]
    fn display_round_trip() {
        let a = RatFun::new(l("u^2+1"), l("3u-1")).unwrap();
        assert_eq!(RatFun::parse_in(&a.to_string(), "u").unwrap(), a);
    }
}
