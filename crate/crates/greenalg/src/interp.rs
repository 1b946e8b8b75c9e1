//! Specialise `u` at the integers `2, 3, ...`, factorise each specialised
//! matrix over `Q` or over `F_p`, interpolate, and recombine primes by CRT.

use crate::modp::{Fp, PRIMES};
use crate::{factor_core, BlockPlan, Factorization, GreenError, Mat, OmegaMatrix};
use exactpoly::{Field, LaurentPoly, PolyMatrix, RatFun, Q};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

pub(crate) fn eval_q(c: &[Q], x: &Q) -> Q {
    c.iter().rev().fold(<Q as Zero>::zero(), |acc, a| acc * x + a)
}

/// `1 / (xs[i] - xs[i - k])`, shared by all entries.
fn inverse_differences<F: Field>(xs: &[F]) -> Vec<Vec<F>> {
    let n = xs.len();
    (0..n)
        .map(|k| (0..n).map(|i| if i >= k && k > 0 { xs[i].sub(&xs[i - k]).inv().expect("distinct points") } else { F::zero() }).collect())
        .collect()
}

/// Coefficients (lowest first) of the polynomial through `(xs[i], ys[i])`.
fn interpolate<F: Field>(xs: &[F], inv: &[Vec<F>], ys: &[F]) -> Vec<F> {
    let n = xs.len();
    let mut d = ys.to_vec();
    for k in 1..n {
        for i in (k..n).rev() {
            d[i] = d[i].sub(&d[i - 1]).mul(&inv[k][i]);
        }
    }
    let mut c = vec![F::zero(); n];
    for k in (0..n).rev() {
        // c = c * (x - xs[k]) + d[k]
        for i in (0..n).rev() {
            let lower = if i > 0 { c[i - 1].clone() } else { F::zero() };
            c[i] = lower.sub(&c[i].mul(&xs[k]));
        }
        c[0] = c[0].add(&d[k]);
    }
    c
}

/// Conservative degree bound: `2 deg D_W + 2 max |b_i|`.
pub fn default_points(omega: &OmegaMatrix, plan: &BlockPlan) -> usize {
    let dw = omega.d_w.as_ref().and_then(LaurentPoly::max_exp2).map_or(omega.max_degree(), |e| (e / 2) as usize);
    let b = plan.b.iter().map(|x| x.unsigned_abs() as usize).max().unwrap_or(0);
    2 * dw + 2 * b + 1
}

/// Values of `P` and `Λ` at the points where no block is singular.
fn sample<F: Field>(
    coeffs: &Mat<Vec<Q>>,
    plan: &BlockPlan,
    count: usize,
    conv: &dyn Fn(&Q) -> F,
) -> Result<(Vec<F>, Vec<(Mat<F>, Mat<F>)>), GreenError> {
    let coeffs: Mat<Vec<F>> = coeffs.iter().map(|r| r.iter().map(|c| c.iter().map(conv).collect()).collect()).collect();
    let mut xs = vec![];
    let mut vals = vec![];
    let mut x = 2i64;
    while xs.len() < count {
        if x > 2 + 4 * count as i64 + 16 {
            return Err(GreenError::ReconstructionMismatch("too many singular specialisations".into()));
        }
        let xf = F::from_i64(x);
        let m: Mat<F> = coeffs
            .iter()
            .map(|r| r.iter().map(|c| c.iter().rev().fold(F::zero(), |acc, a| acc.mul(&xf).add(a))).collect())
            .collect();
        let upow = |k: i64| {
            let mut acc = F::one();
            for _ in 0..k.abs() {
                acc = acc.mul(&xf);
            }
            if k < 0 {
                acc.inv().expect("nonzero point")
            } else {
                acc
            }
        };
        match factor_core(&m, &plan.sizes(), &plan.b, &upow) {
            Ok(v) => {
                xs.push(xf);
                vals.push(v);
            }
            Err(GreenError::SingularBlock(_)) => {}
            Err(e) => return Err(e),
        }
        x += 1;
    }
    Ok((xs, vals))
}

fn interpolate_all<F: Field>(xs: &[F], vals: &[(Mat<F>, Mat<F>)]) -> [Mat<Vec<F>>; 2] {
    let n = vals[0].0.len();
    let inv = inverse_differences(xs);
    let one = |which: usize| -> Mat<Vec<F>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let ys: Vec<F> =
                            vals.iter().map(|v| if which == 0 { v.0[i][j].clone() } else { v.1[i][j].clone() }).collect();
                        interpolate(xs, &inv, &ys)
                    })
                    .collect()
            })
            .collect()
    };
    [one(0), one(1)]
}

fn to_ratfun(c: &[Q]) -> RatFun {
    let mut p = LaurentPoly::zero();
    for (k, x) in c.iter().enumerate() {
        if !Zero::is_zero(x) {
            p.add_term(2 * k as i64, x.clone());
        }
    }
    p.into()
}

fn modular<const P: u64>(coeffs: &Mat<Vec<Q>>, plan: &BlockPlan, count: usize) -> Result<[Mat<Vec<u64>>; 2], GreenError> {
    let conv = |a: &Q| {
        let n = Fp::<P>::from_big(a.numer());
        let d = Fp::<P>::from_big(a.denom());
        n.div(&d).expect("denominator prime to p")
    };
    let (xs, vals) = sample::<Fp<P>>(coeffs, plan, count, &conv)?;
    let [a, b] = interpolate_all(&xs, &vals);
    let strip = |m: Mat<Vec<Fp<P>>>| m.into_iter().map(|r| r.into_iter().map(|c| c.into_iter().map(|x| x.0).collect()).collect()).collect();
    Ok([strip(a), strip(b)])
}

fn run_prime(k: usize, coeffs: &Mat<Vec<Q>>, plan: &BlockPlan, count: usize) -> Result<[Mat<Vec<u64>>; 2], GreenError> {
    match k {
        0 => modular::<{ PRIMES[0] }>(coeffs, plan, count),
        1 => modular::<{ PRIMES[1] }>(coeffs, plan, count),
        2 => modular::<{ PRIMES[2] }>(coeffs, plan, count),
        3 => modular::<{ PRIMES[3] }>(coeffs, plan, count),
        4 => modular::<{ PRIMES[4] }>(coeffs, plan, count),
        5 => modular::<{ PRIMES[5] }>(coeffs, plan, count),
        6 => modular::<{ PRIMES[6] }>(coeffs, plan, count),
        _ => modular::<{ PRIMES[7] }>(coeffs, plan, count),
    }
}

/// Symmetric CRT lift of residues modulo `PRIMES[..k]`.
fn crt(residues: &[u64]) -> Q {
    let mut x = BigInt::zero();
    let mut m = BigInt::one();
    for (r, p) in residues.iter().zip(PRIMES) {
        let p = BigInt::from(p);
        // x + m t = r (mod p)
        let inv = m.modpow(&(&p - 2), &p);
        let t = ((BigInt::from(*r) - &x).mod_floor(&p) * inv).mod_floor(&p);
        x += &m * t;
        m *= p;
    }
    if &x * 2 > m {
        x -= &m;
    }
    Q::from_integer(x)
}

/// Same output as [`crate::block_factorize`], by specialisation at
/// `point_count` integers and interpolation. With `prime_budget > 0` the
/// specialised systems are solved modulo that many primes (at most 8) and
/// the coefficients are recovered as integers by CRT. The result is checked
/// against `Ω` exactly.
pub fn factorize_interpolated(
    omega: &OmegaMatrix,
    plan: &BlockPlan,
    point_count: usize,
    prime_budget: usize,
) -> Result<Factorization, GreenError> {
    plan.check_against(omega.labels())?;
    let need = omega.max_degree() + 1;
    if point_count < need {
        return Err(GreenError::InsufficientPoints { need, got: point_count });
    }
    let order = plan.order();
    let o = omega.reindex(&order)?;
    let coeffs = o.coefficients();
    let [p, lam]: [Mat<Vec<Q>>; 2] = if prime_budget == 0 {
        let (xs, vals) = sample::<Q>(&coeffs, plan, point_count, &|a| a.clone())?;
        interpolate_all(&xs, &vals)
    } else {
        let per_prime = (0..prime_budget.min(PRIMES.len()))
            .into_par_iter()
            .map(|k| run_prime(k, &coeffs, plan, point_count))
            .collect::<Result<Vec<_>, _>>()?;
        let n = order.len();
        let lift = |which: usize| -> Mat<Vec<Q>> {
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            (0..point_count)
                                .map(|d| crt(&per_prime.iter().map(|r| r[which][i][j][d]).collect::<Vec<_>>()))
                                .collect()
                        })
                        .collect()
                })
                .collect()
        };
        [lift(0), lift(1)]
    };
    let build = |m: &Mat<Vec<Q>>| -> Mat<RatFun> { m.iter().map(|r| r.iter().map(|c| to_ratfun(c)).collect()).collect() };
    let f = Factorization {
        p: PolyMatrix::new(order.clone(), order.clone(), build(&p))?,
        lambda: PolyMatrix::new(order.clone(), order, build(&lam))?,
        plan: plan.clone(),
    };
    if f.reconstruct() != o.matrix {
        return Err(GreenError::ReconstructionMismatch(format!("{point_count} points, {prime_budget} primes")));
    }
    Ok(f)
}
