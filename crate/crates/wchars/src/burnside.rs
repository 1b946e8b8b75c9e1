//! Character tables from the class algebra: the central characters
//! `omega_E(C) = |C| chi_E(g_C) / chi_E(1)` are the common eigenvectors of the
//! class multiplication matrices, and their eigenvalues are algebraic
//! integers of the character field. Eigenvalues are found by testing all
//! algebraic integers within the trivial bound `|omega| <= |C|`.

use crate::CharError;
use conjclasses::Classes;
use coxeter::CoxeterGroup;
use exactpoly::{linalg, q, sqrt_q, Cyc, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Ring {
    Integers,
    /// `Z[(1 + sqrt 5) / 2]`
    Golden,
}

fn ring_of(w: &CoxeterGroup) -> Result<Ring, CharError> {
    let m: Vec<u32> = w.datum.coxeter.iter().flatten().copied().collect();
    if m.iter().all(|x| matches!(x, 1 | 2 | 3 | 4 | 6)) {
        Ok(Ring::Integers)
    } else if m.iter().all(|x| matches!(x, 1 | 2 | 3 | 5)) {
        Ok(Ring::Golden)
    } else {
        Err(CharError::UnsupportedType(format!("no class-algebra method for {}", w.datum.name())))
    }
}

/// Algebraic integers of the ring with every real embedding in `[-b, b]`,
/// together with those embeddings.
fn candidates(ring: Ring, b: i64) -> Vec<(Cyc, [f64; 2])> {
    match ring {
        Ring::Integers => (-b..=b).map(|a| (Cyc::from_int(a), [a as f64, a as f64])).collect(),
        Ring::Golden => {
            let (p1, p2) = ((1.0 + 5f64.sqrt()) / 2.0, (1.0 - 5f64.sqrt()) / 2.0);
            let bb = (2.0 * b as f64 / 5f64.sqrt()).floor() as i64;
            let mut out = vec![];
            for y in -bb..=bb {
                let lo = (-(b as f64) - y as f64 * p1).max(-(b as f64) - y as f64 * p2).ceil() as i64;
                let hi = (b as f64 - y as f64 * p1).min(b as f64 - y as f64 * p2).floor() as i64;
                for x in lo..=hi {
                    let e = [x as f64 + y as f64 * p1, x as f64 + y as f64 * p2];
                    out.push((Cyc::from_zphi(x, y), e));
                }
            }
            out
        }
    }
}

fn near_root(coeffs: &[[f64; 2]], x: &[f64; 2]) -> bool {
    (0..2).all(|k| {
        let (mut v, mut scale, mut p) = (0.0f64, 0.0f64, 1.0f64);
        for c in coeffs {
            v += c[k] * p;
            scale += c[k].abs() * p.abs();
            p *= x[k];
        }
        v.abs() <= 1e-7 * scale.max(1.0)
    })
}

fn embed2(ring: Ring, c: &Cyc) -> [f64; 2] {
    match ring {
        Ring::Integers => {
            let v = c.embed(1).0;
            [v, v]
        }
        Ring::Golden => [c.embed(1).0, c.embed(2).0],
    }
}

/// `a[i][j][l]` = number of `x` in `C_i` with `x^{-1} g_l` in `C_j`.
fn structure_constants(w: &CoxeterGroup, classes: &Classes) -> Vec<Vec<Vec<i64>>> {
    let k = classes.len();
    let mut a = vec![vec![vec![0i64; k]; k]; k];
    for l in 0..k {
        let z = classes.get(l).rep;
        for x in w.elements() {
            let i = classes.class_of(x);
            let j = classes.class_of(w.mul(w.inverse(x), z));
            a[i][j][l] += 1;
        }
    }
    a
}

/// Splits the subspace spanned by `basis` (column vectors) into eigenspaces
/// of `m`.
fn split(
    m: &linalg::Mat<Cyc>,
    basis: &[Vec<Cyc>],
    ring: Ring,
    bound: i64,
) -> Result<Vec<Vec<Vec<Cyc>>>, CharError> {
    let d = basis.len();
    let k = basis[0].len();
    let mut bt: linalg::Mat<Cyc> = basis.to_vec();
    let pivots = linalg::rref(&mut bt);
    let sub = |v: &[Cyc]| -> Vec<Cyc> { pivots.iter().map(|&p| v[p].clone()).collect() };
    let bp: linalg::Mat<Cyc> = (0..d).map(|r| (0..d).map(|c| basis[c][pivots[r]].clone()).collect()).collect();
    let bp_inv = linalg::inverse(&bp).expect("basis is independent");
    let images: Vec<Vec<Cyc>> = basis
        .iter()
        .map(|v| (0..k).map(|i| (0..k).fold(Cyc::zero(), |acc, j| &acc + &(&m[i][j] * &v[j]))).collect())
        .collect();
    // r[.][c] = coordinates of m * basis[c]
    let cols: Vec<Vec<Cyc>> = images.iter().map(|v| linalg::mul(&bp_inv, &sub(v).into_iter().map(|x| vec![x]).collect()).into_iter().map(|r| r[0].clone()).collect()).collect();
    let r: linalg::Mat<Cyc> = (0..d).map(|i| (0..d).map(|c| cols[c][i].clone()).collect()).collect();
    let cp = linalg::charpoly(&r);
    let cpf: Vec<[f64; 2]> = cp.iter().map(|c| embed2(ring, c)).collect();
    let mut out = vec![];
    let mut found = 0;
    for (x, e) in candidates(ring, bound) {
        if found == d {
            break;
        }
        if !near_root(&cpf, &e) || !linalg::eval_poly(&cp, &x).is_zero() {
            continue;
        }
        let shifted: linalg::Mat<Cyc> =
            (0..d).map(|i| (0..d).map(|j| if i == j { &r[i][j] - &x } else { r[i][j].clone() }).collect()).collect();
        let ns = linalg::nullspace(&shifted);
        found += ns.len();
        let space: Vec<Vec<Cyc>> = ns
            .iter()
            .map(|c| (0..k).map(|i| (0..d).fold(Cyc::zero(), |acc, j| &acc + &(&c[j] * &basis[j][i]))).collect())
            .collect();
        out.push(space);
    }
    if found != d {
        return Err(CharError::MissingEigenvalues(format!("found {found} of {d} eigenvalues")));
    }
    Ok(out)
}

/// Irreducible characters as rows of values on `classes` (in class order),
/// unsorted and unlabelled.
pub fn burnside_values(w: &CoxeterGroup, classes: &Classes) -> Result<Vec<Vec<Cyc>>, CharError> {
    let ring = ring_of(w)?;
    let k = classes.len();
    let sizes: Vec<i64> = classes.sizes().iter().map(|&s| s as i64).collect();
    let a = structure_constants(w, classes);
    let unit: Vec<Vec<Cyc>> = (0..k).map(|i| (0..k).map(|j| Cyc::from_int((i == j) as i64)).collect()).collect();
    let mut spaces = vec![unit];
    for (i, ai) in a.iter().enumerate().skip(1) {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let m: linalg::Mat<Cyc> = ai.iter().map(|row| row.iter().map(|&x| Cyc::from_int(x)).collect()).collect();
        let mut next = vec![];
        for s in spaces {
            if s.len() == 1 {
                next.push(s);
            } else {
                next.extend(split(&m, &s, ring, sizes[i])?);
            }
        }
        spaces = next;
    }
    if spaces.len() != k {
        return Err(CharError::MissingEigenvalues("class algebra did not split".into()));
    }
    let order = Cyc::from_int(w.order() as i64);
    spaces
        .into_iter()
        .map(|s| {
            let v = &s[0];
            let v0 = v[0].inv().expect("central character is nonzero at 1");
            let omega: Vec<Cyc> = v.iter().map(|x| x * &v0).collect();
            let norm = (0..k).fold(Cyc::zero(), |acc, l| &acc + &(&(&omega[l] * &omega[l]) * &Cyc::rational(Q::new(1.into(), sizes[l].into()))));
            let d2 = (&order * &norm.inv().expect("nonzero norm"))
                .to_rational()
                .ok_or_else(|| CharError::Data("irrational degree".into()))?;
            let d = sqrt_q(&d2).ok_or_else(|| CharError::Data("degree is not a square root".into()))?;
            Ok((0..k).map(|l| &omega[l] * &Cyc::rational(d.clone() / q(sizes[l]))).collect())
        })
        .collect()
}
