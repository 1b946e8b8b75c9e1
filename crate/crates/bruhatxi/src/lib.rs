//! `Ξ* = Λ*·P*·Υ_W·X(H)` and what it says about unipotent classes meeting
//! Bruhat cells: the numbers `β_E^w`, the map `C -> O_C`, divisibility by
//! `D_W`, and the analogous map from classes to families.

use exactpoly::{LaurentPoly, PolyMatrix, RatFun, Q};
use greenalg::{BlockPlan, Factorization};
use hecke::HeckeCharTable;
use num_traits::{One, Zero};
use serde::Serialize;
use springerdata::{Characteristic, FourierMatrix, GroupOverFq, SpringerData};
use thiserror::Error;
use wchars::Group;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum XiError {
    #[error("missing data: {0}")]
    MissingData(String),
    #[error("{0} is not an integer >= 2")]
    BadQ(i64),
    #[error("entry ({0}) keeps a half-integral power of q")]
    ResidualHalfPower(String),
    #[error("count for ({0}) is not a polynomial")]
    NonPolynomialCount(String),
    #[error("class {0}: no unipotent class with a nonzero entry")]
    NoCandidate(String),
    #[error("class {class}: nonzero entry at {other}, which does not contain {chosen} in its closure")]
    ConditionBViolated { class: String, chosen: String, other: String },
    #[error("class {0}: the minimal family is not unique")]
    NotUnique(String),
}

type Result<T> = std::result::Result<T, XiError>;

fn missing(e: impl std::fmt::Display) -> XiError {
    XiError::MissingData(e.to_string())
}

/// `Ξ*` with its factors; rows in the plan order, columns the classes of
/// the Hecke table.
#[derive(Clone, Debug)]
pub struct XiMatrix {
    pub matrix: PolyMatrix,
    pub factorization: Factorization,
    pub fourier: FourierMatrix,
    pub hecke: HeckeCharTable,
    /// `|G^F/B^F| = sum_w u^{l(w)}`.
    pub poincare: LaurentPoly,
}

pub fn poincare(g: &Group) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for w in g.w.elements() {
        p.add_term(2 * g.w.length(w) as i64, Q::one());
    }
    p
}

fn hecke_matrix(h: &HeckeCharTable, order: &[String]) -> Result<PolyMatrix> {
    let entries = order
        .iter()
        .map(|l| {
            let i = h.row(l).ok_or_else(|| missing(format!("Hecke row {l}")))?;
            (0..h.classes.len())
                .map(|j| h.laurent(i, j).map(RatFun::from).ok_or_else(|| missing(format!("rational Hecke entry {l}"))))
                .collect()
        })
        .collect::<Result<Vec<Vec<RatFun>>>>()?;
    PolyMatrix::new(order.to_vec(), h.classes.clone(), entries).map_err(missing)
}

fn fourier_matrix(f: &FourierMatrix, order: &[String]) -> Result<PolyMatrix> {
    let f = f.reindex(order).map_err(missing)?;
    Ok(PolyMatrix::from_fn(order, order, |i, j| RatFun::constant(f.matrix[i][j].clone())))
}

/// `Λ·P·Υ·X(H)` for any plan.
pub fn xi_for_plan(g: &Group, plan: &BlockPlan) -> Result<XiMatrix> {
    let omega = greenalg::omega_matrix(g).map_err(missing)?;
    let f = greenalg::block_factorize(&omega, plan).map_err(missing)?;
    let fourier = springerdata::load_fourier(g).map_err(missing)?;
    let hecke = hecke::hecke_char_table(g).map_err(missing)?;
    let order = plan.order();
    let upsilon = fourier_matrix(&fourier, &order)?;
    let prod = f.lambda.mat_mul(&f.p).and_then(|m| m.mat_mul(&upsilon)).map_err(missing)?;
    let matrix = prod.mat_mul(&hecke_matrix(&hecke, &order)?).map_err(missing)?;
    Ok(XiMatrix { matrix, factorization: f, fourier, hecke, poincare: poincare(g) })
}

/// `Ξ*` for the Springer plan of the bundled data.
pub fn xi_matrix(g: &Group, ch: Characteristic) -> Result<(XiMatrix, SpringerData)> {
    let data = springerdata::load_springer(&g.name(), ch).map_err(missing)?;
    let plan = data.plan().map_err(missing)?;
    Ok((xi_for_plan(g, &plan)?, data))
}

impl XiMatrix {
    pub fn entry(&self, e: &str, class: &str) -> Option<&RatFun> {
        self.matrix.get(e, class)
    }

    fn laurent(&self, e: &str, class: &str) -> Result<LaurentPoly> {
        self.entry(e, class)
            .and_then(|x| x.as_laurent())
            .cloned()
            .ok_or_else(|| missing(format!("polynomial entry ({e}, {class})")))
    }

    /// `|G^F/B^F|^{-1} Ξ*_{E,C}` as a polynomial in `q`.
    pub fn normalized(&self, e: &str, class: &str) -> Result<LaurentPoly> {
        let x = self.laurent(e, class)?;
        if x.has_half_exponents() {
            return Err(XiError::ResidualHalfPower(format!("{e}, {class}")));
        }
        x.divide_exact(&self.poincare).map_err(|_| XiError::NonPolynomialCount(format!("{e}, {class}")))
    }

    /// The published layout: rows the classes, columns `Irr(W)` in plan order.
    pub fn normalized_table(&self) -> Result<Vec<Vec<LaurentPoly>>> {
        self.matrix
            .cols
            .iter()
            .map(|c| self.matrix.rows.iter().map(|e| self.normalized(e, c)).collect())
            .collect()
    }
}

/// `β_E^w` at an integer `q >= 2`, for `w` in `C_min`.
pub fn beta(xi: &XiMatrix, e: &str, class: &str, q: i64) -> Result<Q> {
    if q < 2 {
        return Err(XiError::BadQ(q));
    }
    let x = xi.laurent(e, class)?;
    if x.has_half_exponents() {
        return Err(XiError::ResidualHalfPower(format!("{e}, {class}")));
    }
    x.evaluate(&exactpoly::q(q)).map_err(missing)
}

/// Rows the classes of the Hecke table, columns the `G^F`-classes.
#[derive(Clone, Debug)]
pub struct CellCounts {
    pub classes: Vec<String>,
    pub fq_classes: Vec<String>,
    /// `sum_V trace(u, rho_V) trace(T_w, V)`.
    pub prefactor: Vec<Vec<LaurentPoly>>,
    /// `|B^F|/|C(u)|` times the above: `|O_u ∩ B w B|`.
    pub counts: Vec<Vec<LaurentPoly>>,
}

pub fn cell_counts_from_gfq(gfq: &GroupOverFq, h: &HeckeCharTable) -> Result<CellCounts> {
    let mut prefactor = vec![];
    let mut counts = vec![];
    for (j, class) in h.classes.iter().enumerate() {
        let mut pre_row = vec![];
        let mut row = vec![];
        for (k, c) in gfq.classes.iter().enumerate() {
            let mut acc = LaurentPoly::zero();
            for (v, label) in gfq.characters.iter().enumerate() {
                let i = h.row(label).ok_or_else(|| missing(format!("Hecke row {label}")))?;
                let t = h.laurent(i, j).ok_or_else(|| missing("rational Hecke entry"))?;
                acc = &acc + &(&gfq.values[v][k] * &t);
            }
            let count = (&acc * &gfq.order_b)
                .divide_exact(&c.centralizer)
                .map_err(|_| XiError::NonPolynomialCount(format!("{class}, {}", c.name)))?;
            if !count.is_polynomial() {
                return Err(XiError::NonPolynomialCount(format!("{class}, {}", c.name)));
            }
            pre_row.push(acc);
            row.push(count);
        }
        prefactor.push(pre_row);
        counts.push(row);
    }
    Ok(CellCounts {
        classes: h.classes.clone(),
        fq_classes: gfq.classes.iter().map(|c| c.name.clone()).collect(),
        prefactor,
        counts,
    })
}

/// One comparison of the two routes to `|G^F/B^F|^{-1} β_E^w`.
#[derive(Clone, Debug, Serialize)]
pub struct RouteComparison {
    pub character: String,
    pub class: String,
    pub xi_route: String,
    pub count_route: String,
    pub equal: bool,
}

/// For every `E` and class: `|G^F/B^F|^{-1} Ξ*_{E,C}` against
/// `sum_i Y_{ι_E}(u_i) |O_{u_i} ∩ B w B|`.
pub fn two_route_check(xi: &XiMatrix, data: &SpringerData, gfq: &GroupOverFq) -> Result<Vec<RouteComparison>> {
    let counts = cell_counts_from_gfq(gfq, &xi.hecke)?;
    let mut out = vec![];
    for e in &xi.matrix.rows {
        for (j, class) in counts.classes.iter().enumerate() {
            let mut acc = LaurentPoly::zero();
            for k in 0..gfq.classes.len() {
                let y = gfq.y(data, e, k);
                if !y.is_zero() {
                    acc = &acc + &counts.counts[j][k].scale(&y);
                }
            }
            let via_xi = xi.normalized(e, class)?;
            out.push(RouteComparison {
                character: e.clone(),
                class: class.clone(),
                xi_route: via_xi.display_in("q"),
                count_route: acc.display_in("q"),
                equal: via_xi == acc,
            });
        }
    }
    Ok(out)
}

/// `C -> O_C` with the unipotent classes meeting each column.
#[derive(Clone, Debug, Serialize)]
pub struct ClassUnipotentMap {
    pub map: Vec<(String, String)>,
    pub witnesses: Vec<(String, Vec<String>)>,
    pub surjective: bool,
}

/// For each class, the closure-minimal unipotent class among those with
/// nonzero trivial-system entry, checking that every such class contains it
/// in its closure.
pub fn verify_class_map(xi: &XiMatrix, data: &SpringerData) -> Result<ClassUnipotentMap> {
    let mut map = vec![];
    let mut witnesses = vec![];
    for class in &xi.matrix.cols {
        let cands: Vec<String> = data
            .classes
            .iter()
            .filter(|o| {
                data.trivial_character(&o.name)
                    .and_then(|e| xi.entry(e, class))
                    .is_some_and(|x| !x.is_zero())
            })
            .map(|o| o.name.clone())
            .collect();
        let minimal: Vec<&String> =
            cands.iter().filter(|o| !cands.iter().any(|p| p != *o && data.in_closure(p, o))).collect();
        let chosen = match minimal.as_slice() {
            [] => return Err(XiError::NoCandidate(class.clone())),
            [m] => (*m).clone(),
            [a, b, ..] => {
                return Err(XiError::ConditionBViolated {
                    class: class.clone(),
                    chosen: (*a).clone(),
                    other: (*b).clone(),
                })
            }
        };
        if let Some(o) = cands.iter().find(|o| !data.in_closure(&chosen, o)) {
            return Err(XiError::ConditionBViolated { class: class.clone(), chosen, other: o.clone() });
        }
        map.push((class.clone(), chosen));
        witnesses.push((class.clone(), cands));
    }
    let surjective = data.classes.iter().all(|o| map.iter().any(|(_, m)| *m == o.name));
    Ok(ClassUnipotentMap { map, witnesses, surjective })
}

#[derive(Clone, Debug, Serialize)]
pub struct DivisibilityEntry {
    pub class: String,
    pub character: String,
    pub unipotent: String,
    pub divisible: bool,
    pub constant_term: Option<String>,
    /// Constant term 1 when the class is `O_C`, 0 otherwise.
    pub pattern_ok: bool,
}

/// For each cuspidal class and each `E` with trivial local system:
/// `D_W | Ξ*_{E,C}` and the constant term of the quotient.
pub fn divisibility_checks(g: &Group, xi: &XiMatrix, data: &SpringerData) -> Result<Vec<DivisibilityEntry>> {
    let map = verify_class_map(xi, data)?;
    let dw = greenalg::d_w(g);
    let mut out = vec![];
    for (j, class) in xi.matrix.cols.iter().enumerate() {
        let x = xi.hecke.reps[j];
        if !g.classes.classes[g.classes.class_of(x)].cuspidal {
            continue;
        }
        let oc = &map.map.iter().find(|(c, _)| c == class).expect("every column mapped").1;
        for e in data.entries.iter().filter(|e| e.trivial) {
            let v = xi.laurent(&e.character, class)?;
            let quotient = v.divide_exact(&dw).ok().filter(LaurentPoly::is_polynomial);
            let constant = quotient.as_ref().map(|p| p.coeff2(0));
            let expected = if e.class == *oc { Q::one() } else { Q::zero() };
            out.push(DivisibilityEntry {
                class: class.clone(),
                character: e.character.clone(),
                unipotent: e.class.clone(),
                divisible: quotient.is_some(),
                pattern_ok: constant.as_ref() == Some(&expected),
                constant_term: constant.map(|c| exactpoly::fmt_q(&c)),
            });
        }
    }
    Ok(out)
}

/// `C -> F_C` from the family plan.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyMap {
    pub families: Vec<Vec<String>>,
    pub map: Vec<FamilyMapEntry>,
    pub surjective: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyMapEntry {
    pub class: String,
    /// The label of the class in `conjclasses` (a cycle type in type A).
    pub label: String,
    /// Index into `families`.
    pub family: usize,
}

pub fn family_map(g: &Group) -> Result<FamilyMap> {
    let fam = afun::families(g, &g.equal_parameters()).map_err(missing)?;
    if g.table.len() == 1 && g.w.rank() == 0 {
        return Ok(FamilyMap { families: fam.blocks, map: vec![], surjective: true });
    }
    let plan = greenalg::family_plan(g).map_err(missing)?;
    let xi = xi_for_plan(g, &plan)?;
    let mut map = vec![];
    for (j, class) in xi.matrix.cols.iter().enumerate() {
        let cands: Vec<usize> = (0..fam.blocks.len())
            .filter(|&f| fam.blocks[f].iter().any(|e| xi.entry(e, class).is_some_and(|x| !x.is_zero())))
            .collect();
        let minimal: Vec<usize> =
            cands.iter().copied().filter(|&f| cands.iter().all(|&h| fam.order[f][h])).collect();
        let chosen = match minimal.as_slice() {
            [] if cands.is_empty() => return Err(XiError::NoCandidate(class.clone())),
            [f] => *f,
            _ => return Err(XiError::NotUnique(class.clone())),
        };
        let label = g.classes.classes[g.classes.class_of(xi.hecke.reps[j])].label.clone();
        map.push(FamilyMapEntry { class: class.clone(), label, family: chosen });
    }
    let surjective = (0..fam.blocks.len()).all(|f| map.iter().any(|m| m.family == f));
    Ok(FamilyMap { families: fam.blocks, map, surjective })
}
