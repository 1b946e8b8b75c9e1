//! Dense linear algebra over any [`Field`]. Matrices are row-major `Vec<Vec<F>>`.

use crate::Field;

pub type Mat<F> = Vec<Vec<F>>;

pub fn identity<F: Field>(n: usize) -> Mat<F> {
    (0..n).map(|i| (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect()).collect()
}

pub fn mul<F: Field>(a: &Mat<F>, b: &Mat<F>) -> Mat<F> {
    let m = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..m)
                .map(|j| {
                    let mut acc = F::zero();
                    for (k, x) in row.iter().enumerate() {
                        if !x.is_zero() && !b[k][j].is_zero() {
                            acc = acc.add(&x.mul(&b[k][j]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn transpose<F: Field>(a: &Mat<F>) -> Mat<F> {
    let m = a.first().map_or(0, |r| r.len());
    (0..m).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn sub<F: Field>(a: &Mat<F>, b: &Mat<F>) -> Mat<F> {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x.sub(y)).collect()).collect()
}

pub fn add<F: Field>(a: &Mat<F>, b: &Mat<F>) -> Mat<F> {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x.add(y)).collect()).collect()
}

pub fn scale<F: Field>(a: &Mat<F>, k: &F) -> Mat<F> {
    a.iter().map(|r| r.iter().map(|x| x.mul(k)).collect()).collect()
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref<F: Field>(a: &mut Mat<F>) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = vec![];
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv().unwrap();
        for x in a[r].iter_mut() {
            *x = x.mul(&inv);
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    if !a[r][j].is_zero() {
                        let t = a[r][j].mul(&f);
                        a[i][j] = a[i][j].sub(&t);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(a: &Mat<F>) -> usize {
    rref(&mut a.clone()).len()
}

/// Basis of `{x : A x = 0}` as column vectors.
pub fn nullspace<F: Field>(a: &Mat<F>) -> Vec<Vec<F>> {
    let cols = a.first().map_or(0, |r| r.len());
    let mut m = a.clone();
    let piv = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); cols];
            v[f] = F::one();
            for (r, &p) in piv.iter().enumerate() {
                v[p] = m[r][f].neg();
            }
            v
        })
        .collect()
}

pub fn inverse<F: Field>(a: &Mat<F>) -> Option<Mat<F>> {
    let n = a.len();
    let mut m: Mat<F> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut r = r.clone();
            r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            r
        })
        .collect();
    let piv = rref(&mut m);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn det<F: Field>(a: &Mat<F>) -> F {
    let n = a.len();
    let mut m = a.clone();
    let mut d = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return F::zero();
        };
        if p != c {
            m.swap(p, c);
            d = d.neg();
        }
        d = d.mul(&m[c][c]);
        let inv = m[c][c].inv().unwrap();
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].mul(&inv);
            for j in c..n {
                let t = m[c][j].mul(&f);
                m[i][j] = m[i][j].sub(&t);
            }
        }
    }
    d
}

/// Characteristic polynomial `det(x I - A)`, lowest coefficient first,
/// by the Faddeev-LeVerrier recursion.
pub fn charpoly<F: Field>(a: &Mat<F>) -> Vec<F> {
    let n = a.len();
    let mut c = vec![F::zero(); n + 1];
    c[n] = F::one();
    let mut m: Mat<F> = vec![vec![F::zero(); n]; n];
    for k in 1..=n {
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = row[i].add(&c[n - k + 1]);
        }
        m = mul(a, &m);
        let mut tr = F::zero();
        for (i, row) in m.iter().enumerate() {
            tr = tr.add(&row[i]);
        }
        c[n - k] = tr.neg().div(&F::from_i64(k as i64)).unwrap();
    }
    c
}

pub fn eval_poly<F: Field>(c: &[F], x: &F) -> F {
    let mut acc = F::zero();
    for a in c.iter().rev() {
        acc = acc.mul(x).add(a);
    }
    acc
}
