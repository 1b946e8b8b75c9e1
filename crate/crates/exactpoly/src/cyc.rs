use crate::laurent::{owned_ops, LaurentPoly};
use crate::upoly::UPoly;
use crate::{fmt_q, Q};
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

/// Element of the cyclotomic field `Q(zeta_n)`, stored as a polynomial in
/// `zeta_n` reduced modulo the n-th cyclotomic polynomial. Rational values
/// are always kept with `n = 1`.
#[derive(Clone, Debug)]
pub struct Cyc {
    n: u32,
    c: UPoly,
}

/// The n-th cyclotomic polynomial.
pub fn cyclotomic(n: u32) -> UPoly {
    static CACHE: OnceLock<Mutex<HashMap<u32, UPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut p = UPoly::monomial(n as usize).sub(&UPoly::one());
    for d in 1..n {
        if n % d == 0 {
            p = p.divrem(&cyclotomic(d)).unwrap().0;
        }
    }
    cache.lock().unwrap().insert(n, p.clone());
    p
}

impl Cyc {
    pub fn zero() -> Self {
        Cyc { n: 1, c: UPoly::zero() }
    }

    pub fn one() -> Self {
        Cyc::rational(Q::one())
    }

    pub fn rational(x: Q) -> Self {
        Cyc { n: 1, c: UPoly::constant(x) }
    }

    pub fn from_int(k: i64) -> Self {
        Cyc::rational(crate::q(k))
    }

    /// `zeta_n^k`
    pub fn zeta(n: u32, k: i64) -> Self {
        let k = k.rem_euclid(n as i64) as usize;
        Cyc { n, c: UPoly::monomial(k) }.reduced()
    }

    /// `zeta_n^k + zeta_n^{-k}`, i.e. `2 cos(2 pi k / n)`.
    pub fn two_cos(n: u32, k: i64) -> Self {
        &Cyc::zeta(n, k) + &Cyc::zeta(n, -k)
    }

    /// The golden ratio `(1 + sqrt 5) / 2 = 1 + zeta_5 + zeta_5^4`.
    pub fn phi() -> Self {
        &Cyc::one() + &Cyc::two_cos(5, 1)
    }

    /// `a + b * phi`
    pub fn from_zphi(a: i64, b: i64) -> Self {
        &Cyc::from_int(a) + &(&Cyc::from_int(b) * &Cyc::phi())
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    fn reduced(self) -> Self {
        let c = if self.n == 1 { self.c } else { self.c.divrem(&cyclotomic(self.n)).unwrap().1 };
        if c.degree().unwrap_or(0) == 0 {
            return Cyc { n: 1, c };
        }
        Cyc { n: self.n, c }
    }

    fn lift(&self, m: u32) -> UPoly {
        if self.n == m {
            return self.c.clone();
        }
        self.c.inflate((m / self.n) as usize)
    }

    fn common(&self, o: &Cyc) -> (u32, UPoly, UPoly) {
        let m = self.n.lcm(&o.n);
        (m, self.lift(m), o.lift(m))
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.n == 1
    }

    pub fn to_rational(&self) -> Option<Q> {
        self.is_rational().then(|| self.c.coeff(0))
    }

    pub fn inv(&self) -> Option<Cyc> {
        if self.is_zero() {
            return None;
        }
        if self.n == 1 {
            return Some(Cyc::rational(Q::one() / self.c.coeff(0)));
        }
        let (g, s, _) = self.c.ext_gcd(&cyclotomic(self.n));
        debug_assert!(g.degree() == Some(0));
        Some(Cyc { n: self.n, c: s }.reduced())
    }

    /// Image under `zeta_n -> zeta_n^k` for `k` coprime to `n`.
    pub fn galois(&self, k: i64) -> Cyc {
        if self.n == 1 {
            return self.clone();
        }
        let mut acc = Cyc::zero();
        for (i, a) in self.c.coeffs().iter().enumerate() {
            if !a.is_zero() {
                acc = &acc + &(&Cyc::zeta(self.n, k * i as i64) * &Cyc::rational(a.clone()));
            }
        }
        acc
    }

    pub fn conj(&self) -> Cyc {
        self.galois(-1)
    }

    /// Floating point value under `zeta_n -> exp(2 pi i k / n)`, as (re, im).
    pub fn embed(&self, k: i64) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let (mut re, mut im) = (0.0, 0.0);
        for (i, a) in self.c.coeffs().iter().enumerate() {
            let a = a.to_f64().unwrap_or(f64::NAN);
            let t = std::f64::consts::TAU * (k * i as i64) as f64 / self.n as f64;
            re += a * t.cos();
            im += a * t.sin();
        }
        (re, im)
    }
}

impl PartialEq for Cyc {
    fn eq(&self, o: &Cyc) -> bool {
        if self.n == o.n {
            return self.c == o.c;
        }
        (self - o).is_zero()
    }
}

impl Eq for Cyc {}

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(x) = self.to_rational() {
            return f.write_str(&fmt_q(&x));
        }
        let var = format!("E{}", self.n);
        let p = LaurentPoly::from_upoly(0, &self.c.inflate(2));
        f.write_str(&p.display_in(&var))
    }
}

impl Add for &Cyc {
    type Output = Cyc;
    fn add(self, o: &Cyc) -> Cyc {
        if self.n == 1 && o.n == 1 {
            return Cyc { n: 1, c: self.c.add(&o.c) };
        }
        let (m, a, b) = self.common(o);
        Cyc { n: m, c: a.add(&b) }.reduced()
    }
}

impl Sub for &Cyc {
    type Output = Cyc;
    fn sub(self, o: &Cyc) -> Cyc {
        if self.n == 1 && o.n == 1 {
            return Cyc { n: 1, c: self.c.sub(&o.c) };
        }
        let (m, a, b) = self.common(o);
        Cyc { n: m, c: a.sub(&b) }.reduced()
    }
}

impl Mul for &Cyc {
    type Output = Cyc;
    fn mul(self, o: &Cyc) -> Cyc {
        if self.n == 1 {
            return Cyc { n: o.n, c: o.c.scale(&self.c.coeff(0)) }.reduced();
        }
        if o.n == 1 {
            return Cyc { n: self.n, c: self.c.scale(&o.c.coeff(0)) }.reduced();
        }
        let (m, a, b) = self.common(o);
        Cyc { n: m, c: a.mul(&b) }.reduced()
    }
}

impl Neg for &Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        Cyc { n: self.n, c: self.c.neg() }
    }
}

owned_ops!(Cyc);

/// Polynomial in `u` with cyclotomic coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycPoly {
    c: Vec<Cyc>,
}

impl CycPoly {
    pub fn new(mut c: Vec<Cyc>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        CycPoly { c }
    }

    pub fn zero() -> Self {
        CycPoly { c: vec![] }
    }

    pub fn constant(x: Cyc) -> Self {
        CycPoly::new(vec![x])
    }

    pub fn from_laurent(p: &LaurentPoly) -> Option<Self> {
        let c = p.to_u_coeffs()?;
        Some(CycPoly::new(c.into_iter().map(Cyc::rational).collect()))
    }

    pub fn coeffs(&self) -> &[Cyc] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn add(&self, o: &CycPoly) -> CycPoly {
        let n = self.c.len().max(o.c.len());
        let z = Cyc::zero();
        CycPoly::new(
            (0..n).map(|i| self.c.get(i).unwrap_or(&z) + o.c.get(i).unwrap_or(&z)).collect(),
        )
    }

    pub fn scale(&self, k: &Cyc) -> CycPoly {
        CycPoly::new(self.c.iter().map(|x| x * k).collect())
    }

    pub fn mul(&self, o: &CycPoly) -> CycPoly {
        if self.is_zero() || o.is_zero() {
            return CycPoly::zero();
        }
        let mut c = vec![Cyc::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] = &c[i + j] + &(a * b);
            }
        }
        CycPoly::new(c)
    }

    /// Exact quotient, or `None` when `d` does not divide `self`.
    pub fn divide_exact(&self, d: &CycPoly) -> Option<CycPoly> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(CycPoly::zero());
        }
        let mut r = self.c.clone();
        if r.len() <= dd {
            return None;
        }
        let lead_inv = d.c[dd].inv()?;
        let mut quo = vec![Cyc::zero(); r.len() - dd];
        for k in (0..quo.len()).rev() {
            let t = &r[k + dd] * &lead_inv;
            if t.is_zero() {
                continue;
            }
            for (j, b) in d.c.iter().enumerate() {
                r[k + j] = &r[k + j] - &(&t * b);
            }
            quo[k] = t;
        }
        r.iter().all(|x| x.is_zero()).then(|| CycPoly::new(quo))
    }

    pub fn eval(&self, x: &Cyc) -> Cyc {
        let mut acc = Cyc::zero();
        for a in self.c.iter().rev() {
            acc = &(&acc * x) + a;
        }
        acc
    }

    /// Back to a rational polynomial when every coefficient is rational.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        let mut p = LaurentPoly::zero();
        for (i, a) in self.c.iter().enumerate() {
            p.add_term(2 * i as i64, a.to_rational()?);
        }
        Some(p)
    }
}
