//! The matrix `Ω` of a finite Coxeter group and its block factorisation
//! `Ω = Pᵗ Λ P`, computed directly over `Q(u)` or by specialising `u` at
//! integers (optionally modulo primes) and interpolating.

mod interp;
pub mod modp;

pub use interp::{default_points, factorize_interpolated};

use exactpoly::{linalg, Cyc, CycPoly, Field, LaurentPoly, PolyError, PolyMatrix, RatFun, Q};
use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;
use wchars::{CharError, Group};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GreenError {
    #[error("entry ({0}) is not a polynomial with integer coefficients")]
    NonPolynomialEntry(String),
    #[error("block {0} of Λ is singular")]
    SingularBlock(usize),
    #[error("need at least {need} points, got {got}")]
    InsufficientPoints { need: usize, got: usize },
    #[error("interpolation does not reproduce Ω: {0}")]
    ReconstructionMismatch(String),
    #[error("bad plan: {0}")]
    BadPlan(String),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

pub type Mat<F> = Vec<Vec<F>>;

/// `Ω` with rows and columns labelled by `Irr(W)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaMatrix {
    pub matrix: PolyMatrix,
    /// `u^{l(w0)} (u-1)^{|S|} sum_w u^{l(w)}`, when `Ω` comes from a group.
    pub d_w: Option<LaurentPoly>,
}

/// `D_W = u^N prod (u^{d_i} - 1)`.
pub fn d_w(g: &Group) -> LaurentPoly {
    let mut p = LaurentPoly::u_pow(g.w.num_pos_roots() as i64);
    for d in g.w.datum.degrees() {
        p = &p * &(&LaurentPoly::u_pow(d as i64) - &LaurentPoly::one());
    }
    p
}

fn cycpoly_to_laurent(p: &CycPoly, shift: i64, what: &str) -> Result<LaurentPoly, GreenError> {
    let mut out = LaurentPoly::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        let c = c.to_rational().ok_or_else(|| GreenError::NonPolynomialEntry(what.into()))?;
        out.add_term(2 * (k as i64 + shift), c);
    }
    Ok(out)
}

/// `ω_{E,E'} = D_W/|W| sum_w trace(w,E) trace(w,E') / det(u - w)`, using
/// `D_W / det(u - w) = u^N prod(u^{d_i} - 1) / det(u - w)`.
pub fn omega_matrix(g: &Group) -> Result<OmegaMatrix, GreenError> {
    let t = &g.table;
    let n = t.len();
    let polys = g.class_polys();
    let inv_order = Cyc::rational(Q::new(1.into(), (g.w.order() as i64).into()));
    let shift = g.w.num_pos_roots() as i64;
    let mut entries = vec![vec![RatFun::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let mut acc = CycPoly::zero();
            for (c, p) in polys.iter().enumerate() {
                let k = &(&t.values[i][c] * &t.values[j][c]) * &Cyc::from_int(t.class_sizes[c] as i64);
                if !k.is_zero() {
                    acc = acc.add(&p.scale(&k));
                }
            }
            let what = format!("{}, {}", t.labels[i], t.labels[j]);
            let e = cycpoly_to_laurent(&acc.scale(&inv_order), shift, &what)?;
            if !e.has_integer_coeffs() || !e.is_polynomial() {
                return Err(GreenError::NonPolynomialEntry(what));
            }
            entries[i][j] = e.clone().into();
            entries[j][i] = e.into();
        }
    }
    let matrix = PolyMatrix::new(t.labels.clone(), t.labels.clone(), entries)?;
    Ok(OmegaMatrix { matrix, d_w: Some(d_w(g)) })
}

impl OmegaMatrix {
    /// Wraps an explicit matrix, which must be symmetric with entries in `Z[u]`.
    pub fn from_matrix(matrix: PolyMatrix) -> Result<OmegaMatrix, GreenError> {
        let m = OmegaMatrix { matrix, d_w: None };
        if m.matrix.rows != m.matrix.cols || !m.is_symmetric() {
            return Err(GreenError::BadPlan("Ω must be square and symmetric".into()));
        }
        for (i, r) in m.matrix.entries.iter().enumerate() {
            for x in r {
                let ok = x.as_laurent().is_some_and(|p| p.is_polynomial() && p.has_integer_coeffs());
                if !ok {
                    return Err(GreenError::NonPolynomialEntry(m.matrix.rows[i].clone()));
                }
            }
        }
        Ok(m)
    }

    pub fn labels(&self) -> &[String] {
        &self.matrix.rows
    }

    pub fn is_symmetric(&self) -> bool {
        self.matrix.transpose() == self.matrix
    }

    pub fn reindex(&self, order: &[String]) -> Result<OmegaMatrix, GreenError> {
        Ok(OmegaMatrix { matrix: self.matrix.reindex(order, order)?, d_w: self.d_w.clone() })
    }

    pub fn get(&self, r: &str, c: &str) -> Option<&LaurentPoly> {
        self.matrix.get(r, c)?.as_laurent()
    }

    pub fn max_degree(&self) -> usize {
        self.matrix
            .entries
            .iter()
            .flatten()
            .filter_map(|x| x.as_laurent()?.max_exp2())
            .max()
            .map_or(0, |e| (e / 2) as usize)
    }

    /// Integer coefficients of each entry, lowest degree first.
    pub fn coefficients(&self) -> Mat<Vec<Q>> {
        self.matrix
            .entries
            .iter()
            .map(|r| r.iter().map(|x| x.as_laurent().and_then(|p| p.to_u_coeffs()).expect("polynomial")).collect())
            .collect()
    }

    /// Principal minors at `u = x`: all of them for at most 12 labels,
    /// otherwise the leading ones in the given and in the reversed order.
    pub fn principal_minors_nonzero_at(&self, x: i64) -> bool {
        let v: Mat<Q> = self
            .coefficients()
            .iter()
            .map(|r| r.iter().map(|c| interp::eval_q(c, &exactpoly::q(x))).collect())
            .collect();
        let n = v.len();
        let minor = |idx: &[usize]| -> bool {
            let m: Mat<Q> = idx.iter().map(|&i| idx.iter().map(|&j| v[i][j].clone()).collect()).collect();
            !Zero::is_zero(&linalg::det(&m))
        };
        if n <= 12 {
            (1u32..1 << n).all(|mask| minor(&(0..n).filter(|i| mask >> i & 1 == 1).collect::<Vec<_>>()))
        } else {
            (1..=n).all(|k| minor(&(0..k).collect::<Vec<_>>()) && minor(&(n - k..n).collect::<Vec<_>>()))
        }
    }
}

/// An ordered partition `I_1, ..., I_r` of `Irr(W)` with `b_1 >= ... >= b_r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockPlan {
    pub blocks: Vec<Vec<String>>,
    pub b: Vec<i64>,
}

impl BlockPlan {
    pub fn new(blocks: Vec<Vec<String>>, b: Vec<i64>) -> Result<BlockPlan, GreenError> {
        if blocks.len() != b.len() || blocks.iter().any(|x| x.is_empty()) {
            return Err(GreenError::BadPlan("one nonempty block per b value".into()));
        }
        if b.windows(2).any(|w| w[0] < w[1]) {
            return Err(GreenError::BadPlan(format!("b sequence {b:?} is not decreasing")));
        }
        Ok(BlockPlan { blocks, b })
    }

    pub fn from_strs(blocks: &[&[&str]], b: &[i64]) -> Result<BlockPlan, GreenError> {
        BlockPlan::new(blocks.iter().map(|x| x.iter().map(|s| s.to_string()).collect()).collect(), b.to_vec())
    }

    /// The labels in block order.
    pub fn order(&self) -> Vec<String> {
        self.blocks.concat()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn check_against(&self, labels: &[String]) -> Result<(), GreenError> {
        let mut a = self.order();
        let mut b = labels.to_vec();
        a.sort();
        b.sort();
        if a != b {
            return Err(GreenError::BadPlan("blocks do not partition Irr(W)".into()));
        }
        Ok(())
    }
}

/// `Ω = Pᵗ Λ P`; rows and columns of `P` and `Λ` follow the plan order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub p: PolyMatrix,
    pub lambda: PolyMatrix,
    pub plan: BlockPlan,
}

impl Factorization {
    pub fn reconstruct(&self) -> PolyMatrix {
        self.p.transpose().mat_mul(&self.lambda).and_then(|x| x.mat_mul(&self.p)).expect("square")
    }

    pub fn reproduces(&self, omega: &OmegaMatrix) -> bool {
        omega.reindex(&self.plan.order()).is_ok_and(|o| o.matrix == self.reconstruct())
    }

    fn entries(&self) -> impl Iterator<Item = &RatFun> {
        self.p.entries.iter().chain(&self.lambda.entries).flatten()
    }

    /// All entries of `P` and `Λ` lie in `Z[u]`.
    pub fn is_integral_polynomial(&self) -> bool {
        self.entries().all(|x| x.as_laurent().is_some_and(|p| p.is_polynomial() && p.has_integer_coeffs()))
    }

    pub fn p_nonnegative(&self) -> bool {
        self.p
            .entries
            .iter()
            .flatten()
            .all(|x| x.as_laurent().is_some_and(|p| p.terms().values().all(|c| !c.is_negative())))
    }
}

/// The block recursion over any field; `omega` is in plan order and
/// `upow(k)` is `u^k`.
pub(crate) fn factor_core<F: Field>(
    omega: &Mat<F>,
    sizes: &[usize],
    b: &[i64],
    upow: &dyn Fn(i64) -> F,
) -> Result<(Mat<F>, Mat<F>), GreenError> {
    let n = omega.len();
    let mut starts = vec![0];
    for s in sizes {
        starts.push(starts.last().unwrap() + s);
    }
    let range = |k: usize| starts[k]..starts[k + 1];
    let block = |m: &Mat<F>, i: usize, j: usize| -> Mat<F> {
        range(i).map(|r| range(j).map(|c| m[r][c].clone()).collect()).collect()
    };
    let mut p: Mat<F> = vec![vec![F::zero(); n]; n];
    let mut lam: Mat<F> = vec![vec![F::zero(); n]; n];
    let r = sizes.len();
    // `cross(i, j) = sum_{k<j} P_kiᵗ Λ_k P_kj`
    let cross = |p: &Mat<F>, lam: &Mat<F>, i: usize, j: usize| -> Mat<F> {
        let mut acc: Mat<F> = vec![vec![F::zero(); sizes[j]]; sizes[i]];
        for k in 0..j {
            let t = linalg::mul(&linalg::transpose(&block(p, k, i)), &block(lam, k, k));
            acc = linalg::add(&acc, &linalg::mul(&t, &block(p, k, j)));
        }
        acc
    };
    for j in 0..r {
        let lj = linalg::scale(&linalg::sub(&block(omega, j, j), &cross(&p, &lam, j, j)), &upow(-2 * b[j]));
        let inv = linalg::inverse(&lj).ok_or(GreenError::SingularBlock(j))?;
        for (a, row) in range(j).zip(&lj) {
            for (c, x) in range(j).zip(row) {
                lam[a][c] = x.clone();
            }
            p[a][a] = upow(b[j]);
        }
        for i in j + 1..r {
            let t = linalg::sub(&block(omega, i, j), &cross(&p, &lam, i, j));
            let pt = linalg::scale(&linalg::mul(&t, &inv), &upow(-b[j]));
            for (c, row) in range(i).zip(&pt) {
                for (a, x) in range(j).zip(row) {
                    p[a][c] = x.clone();
                }
            }
        }
    }
    Ok((p, lam))
}

/// The unique factorisation for `plan`, computed over `Q(u)`.
pub fn block_factorize(omega: &OmegaMatrix, plan: &BlockPlan) -> Result<Factorization, GreenError> {
    plan.check_against(omega.labels())?;
    let order = plan.order();
    let o = omega.reindex(&order)?;
    let (p, lam) = factor_core(&o.matrix.entries, &plan.sizes(), &plan.b, &RatFun::u_pow)?;
    Ok(Factorization {
        p: PolyMatrix::new(order.clone(), order.clone(), p)?,
        lambda: PolyMatrix::new(order.clone(), order, lam)?,
        plan: plan.clone(),
    })
}

/// Families for equal parameters, with `b_i` the constant value of ã,
/// in order of decreasing ã.
pub fn family_plan(g: &Group) -> Result<BlockPlan, GreenError> {
    let f = afun::families(g, &g.equal_parameters())?;
    BlockPlan::new(f.blocks, f.a_values)
}

/// What the family factorisation looks like: polynomiality, integrality and
/// the signs of the coefficients of `P`.
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub group: String,
    pub plan: BlockPlan,
    pub polynomial: bool,
    pub p_nonnegative: bool,
    pub reconstructs: bool,
    /// `λ_{E,E}` for the first member of each family.
    pub lambda_diagonal: Vec<(String, String)>,
    #[serde(skip)]
    pub factorization: Factorization,
}

impl ConjectureReport {
    pub fn holds(&self) -> bool {
        self.polynomial && self.p_nonnegative && self.reconstructs
    }
}

/// Factorises `Ω` along the equal-parameter families.
pub fn check_family_conjecture(g: &Group) -> Result<ConjectureReport, GreenError> {
    let omega = omega_matrix(g)?;
    let plan = family_plan(g)?;
    let f = block_factorize(&omega, &plan)?;
    let lambda_diagonal = plan
        .blocks
        .iter()
        .map(|b| (b[0].clone(), f.lambda.get(&b[0], &b[0]).expect("label").display_in("u")))
        .collect();
    Ok(ConjectureReport {
        group: g.name(),
        polynomial: f.is_integral_polynomial(),
        p_nonnegative: f.p_nonnegative(),
        reconstructs: f.reproduces(&omega),
        lambda_diagonal,
        plan,
        factorization: f,
    })
}
