use coxeter::Element;
use exactpoly::{linalg, Cyc, CycPoly, LaurentPoly, RatFun};
use wchars::Group;

/// `n` for `A_n`, `n <= 3`.
pub(crate) fn type_a_rank(g: &Group) -> Option<usize> {
    let n: usize = g.name().strip_prefix('A')?.parse().ok()?;
    (n <= 3).then_some(n)
}

fn u_poly(k: usize, c: Cyc) -> CycPoly {
    let mut v = vec![Cyc::zero(); k + 1];
    v[k] = c;
    CycPoly::new(v)
}

/// Rank two: a linear character sends `T_s` to `u` or `-1` by its value
/// on `s`; a two-dimensional one has trace `u - 1` on `T_s` and
/// `u^k chi((st)^k)` on `T_{(st)^k}`.
pub(crate) fn rank_two_trace(g: &Group, i: usize, w: Element) -> CycPoly {
    let t = &g.table;
    let word = g.w.word(w);
    let chi = |x: Element| t.values[i][g.classes.class_of(x)].clone();
    if t.dim(i) == 1 {
        let mut acc = CycPoly::constant(Cyc::one());
        for &s in word {
            let f = if chi(g.w.gen(s as usize)) == Cyc::one() {
                u_poly(1, Cyc::one())
            } else {
                CycPoly::constant(Cyc::from_int(-1))
            };
            acc = acc.mul(&f);
        }
        return acc;
    }
    match word.len() {
        0 => CycPoly::constant(chi(w)),
        1 => CycPoly::new(vec![Cyc::from_int(-1), Cyc::one()]),
        l if l % 2 == 0 => u_poly(l / 2, chi(w)),
        _ => panic!("odd length element above 1 is not of minimal length"),
    }
}

/// Seminormal matrices for `H(S_{n+1})`: basis the standard tableaux, and
/// `T_k` acts through the axial distance `r` between `k` and `k+1`.
pub(crate) struct TypeA {
    gens: Vec<Vec<linalg::Mat<RatFun>>>,
}

type Tableau = Vec<Vec<usize>>;

fn standard_tableaux(shape: &[usize]) -> Vec<Tableau> {
    fn go(shape: &[usize], t: &mut Tableau, next: usize, n: usize, out: &mut Vec<Tableau>) {
        if next == n {
            out.push(t.clone());
            return;
        }
        for r in 0..shape.len() {
            let ok = t[r].len() < shape[r] && (r == 0 || t[r - 1].len() > t[r].len());
            if ok {
                t[r].push(next);
                go(shape, t, next + 1, n, out);
                t[r].pop();
            }
        }
    }
    let n = shape.iter().sum();
    let mut out = vec![];
    go(shape, &mut vec![vec![]; shape.len()], 0, n, &mut out);
    out
}

fn position(t: &Tableau, k: usize) -> (i64, i64) {
    for (r, row) in t.iter().enumerate() {
        if let Some(c) = row.iter().position(|&x| x == k) {
            return (r as i64, c as i64);
        }
    }
    unreachable!()
}

fn swap(t: &Tableau, k: usize) -> Tableau {
    t.iter().map(|r| r.iter().map(|&x| if x == k { k + 1 } else if x == k + 1 { k } else { x }).collect()).collect()
}

/// `(u-1) u^r / (u^r - 1)`.
fn diagonal(r: i64) -> RatFun {
    let u = RatFun::u_pow(1);
    let ur = RatFun::u_pow(r);
    (&(&u - &RatFun::one()) * &ur).div(&(&ur - &RatFun::one())).expect("r != 0")
}

fn parse_partition(label: &str) -> Option<Vec<usize>> {
    label.strip_prefix('[')?.strip_suffix(']')?.split(',').map(|x| x.trim().parse().ok()).collect()
}

impl TypeA {
    pub(crate) fn new(g: &Group, n: usize) -> Option<TypeA> {
        let mut gens = vec![];
        for label in &g.table.labels {
            let shape = parse_partition(label)?;
            let tabs = standard_tableaux(&shape);
            let d = tabs.len();
            let mut mats = vec![];
            for k in 0..n {
                let mut m = vec![vec![RatFun::zero(); d]; d];
                for (j, t) in tabs.iter().enumerate() {
                    let (r0, c0) = position(t, k);
                    let (r1, c1) = position(t, k + 1);
                    let r = (c1 - r1) - (c0 - r0);
                    if r0 == r1 {
                        m[j][j] = RatFun::u_pow(1);
                    } else if c0 == c1 {
                        m[j][j] = RatFun::from_int(-1);
                    } else {
                        let i = tabs.iter().position(|x| *x == swap(t, k))?;
                        m[j][j] = diagonal(r);
                        // row i, column j: coefficient of v_i in T_k v_j
                        m[i][j] = if r0 < r1 {
                            RatFun::one()
                        } else {
                            &(&diagonal(r) * &diagonal(-r)) + &RatFun::u_pow(1)
                        };
                    }
                }
                mats.push(m);
            }
            gens.push(mats);
        }
        Some(TypeA { gens })
    }

    pub(crate) fn matrix(&self, i: usize, word: &[u8]) -> linalg::Mat<RatFun> {
        let d = self.gens[i][0].len();
        let mut m: linalg::Mat<RatFun> =
            (0..d).map(|a| (0..d).map(|b| if a == b { RatFun::one() } else { RatFun::zero() }).collect()).collect();
        for &s in word {
            m = linalg::mul(&m, &self.gens[i][s as usize]);
        }
        m
    }

    pub(crate) fn trace(&self, i: usize, w: &Group, x: Element) -> CycPoly {
        let m = self.matrix(i, w.w.word(x));
        let mut tr = RatFun::zero();
        for (k, row) in m.iter().enumerate() {
            tr = &tr + &row[k];
        }
        let p: &LaurentPoly = tr.as_laurent().expect("trace of T_w is a polynomial");
        CycPoly::from_laurent(p).expect("integral exponents")
    }
}
