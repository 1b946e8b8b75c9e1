//! Exact arithmetic for the rest of the workspace: rationals, Laurent
//! polynomials in `u^{1/2}`, rational functions, cyclotomic numbers and
//! dense matrices over any of them.

pub mod cyc;
pub mod field;
pub mod laurent;
pub mod linalg;
pub mod matrix;
pub mod ratfun;
pub mod upoly;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub use cyc::{Cyc, CycPoly};
pub use field::Field;
pub use laurent::LaurentPoly;
pub use matrix::PolyMatrix;
pub use ratfun::RatFun;
pub use upoly::UPoly;

pub type Q = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by zero")]
    DivZero,
    #[error("not divisible")]
    NotDivisible,
    #[error("pole at u = {0}")]
    PoleAtPoint(String),
    #[error("{0} is not the square of a rational")]
    NonSquareSpecialization(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `a` or `a/b`.
pub fn parse_q(s: &str) -> Result<Q, PolyError> {
    let s = s.trim();
    let bad = || PolyError::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().map_err(|_| bad())?;
            let b: BigInt = b.trim().parse().map_err(|_| bad())?;
            if b == BigInt::from(0) {
                return Err(bad());
            }
            Ok(Q::new(a, b))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Exact square root of a non-negative rational, if it is a square.
pub fn sqrt_q(x: &Q) -> Option<Q> {
    use num_traits::Signed;
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Q::new(n, d))
    } else {
        None
    }
}
