//! The generic Iwahori-Hecke algebra in the `T`-basis, its regular trace,
//! and character tables `trace(T_{w_C}, E_u)` for a few types.

mod models;

use coxeter::{CoxeterGroup, Element};
use exactpoly::{Cyc, CycPoly, LaurentPoly, PolyMatrix};
use std::collections::BTreeMap;
use thiserror::Error;
use wchars::Group;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HeckeError {
    #[error("no Hecke character table for type {0}")]
    UnsupportedType(String),
    #[error("bad Hecke data: {0}")]
    Data(String),
}

/// `sum_w c_w T_w` with no zero coefficients stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HeckeElement {
    terms: BTreeMap<Element, LaurentPoly>,
}

impl HeckeElement {
    pub fn zero() -> Self {
        HeckeElement::default()
    }

    pub fn t(w: Element) -> Self {
        HeckeElement { terms: BTreeMap::from([(w, LaurentPoly::one())]) }
    }

    pub fn one() -> Self {
        HeckeElement::t(Element::ID)
    }

    pub fn terms(&self) -> &BTreeMap<Element, LaurentPoly> {
        &self.terms
    }

    pub fn coeff(&self, w: Element) -> LaurentPoly {
        self.terms.get(&w).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn add_term(&mut self, w: Element, c: &LaurentPoly) {
        let e = self.terms.entry(w).or_insert_with(LaurentPoly::zero);
        *e = &*e + c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, o: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(*w, c);
        }
        out
    }

    pub fn scale(&self, k: &LaurentPoly) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (w, c) in &self.terms {
            out.add_term(*w, &(c * k));
        }
        out
    }
}

/// `a T_s`: `T_w T_s = T_{ws}` if `l(ws) > l(w)`, else `u T_{ws} + (u-1) T_w`.
pub fn mul_gen(w: &CoxeterGroup, a: &HeckeElement, s: usize) -> HeckeElement {
    let u = LaurentPoly::u_pow(1);
    let u1 = &u - &LaurentPoly::one();
    let mut out = HeckeElement::zero();
    for (x, c) in &a.terms {
        let xs = w.mul_gen(*x, s);
        if w.length(xs) > w.length(*x) {
            out.add_term(xs, c);
        } else {
            out.add_term(xs, &(c * &u));
            out.add_term(*x, &(c * &u1));
        }
    }
    out
}

pub fn hecke_mul(w: &CoxeterGroup, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
    let mut out = HeckeElement::zero();
    for (y, c) in &b.terms {
        let mut p = a.clone();
        for &s in w.word(*y) {
            p = mul_gen(w, &p, s as usize);
        }
        out = out.add(&p.scale(c));
    }
    out
}

/// Largest group for which [`regular_trace`] is offered.
pub const REGULAR_TRACE_MAX: usize = 1152;

/// Trace of right multiplication by `T_w` on the `T`-basis.
pub fn regular_trace(w: &CoxeterGroup, x: Element) -> LaurentPoly {
    assert!(w.order() <= REGULAR_TRACE_MAX, "group too large for the regular trace");
    let tw = HeckeElement::t(x);
    let mut acc = LaurentPoly::zero();
    for y in w.elements() {
        acc = &acc + &hecke_mul(w, &HeckeElement::t(y), &tw).coeff(y);
    }
    acc
}

/// `trace(T_{w_C}, E_u)`, rows `Irr(W)`, columns the classes `C` with a
/// chosen `w_C` of minimal length. Entries are polynomials in `u` whose
/// coefficients lie in the character field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeCharTable {
    pub labels: Vec<String>,
    pub classes: Vec<String>,
    pub reps: Vec<Element>,
    pub values: Vec<Vec<CycPoly>>,
}

fn cyc_poly_string(p: &CycPoly) -> String {
    if let Some(l) = p.to_laurent() {
        return l.display_in("u");
    }
    let terms: Vec<String> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| match k {
            0 => format!("({c})"),
            1 => format!("({c})u"),
            _ => format!("({c})u^{k}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

impl HeckeCharTable {
    pub fn row(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn column(&self, class: &str) -> Option<usize> {
        self.classes.iter().position(|c| c == class)
    }

    pub fn get(&self, label: &str, class: &str) -> Option<&CycPoly> {
        Some(&self.values[self.row(label)?][self.column(class)?])
    }

    /// The entry as a Laurent polynomial, when its coefficients are rational.
    pub fn laurent(&self, i: usize, j: usize) -> Option<LaurentPoly> {
        self.values[i][j].to_laurent()
    }

    /// Values at `u = 1`.
    pub fn specialize_at_one(&self) -> Vec<Vec<Cyc>> {
        self.values.iter().map(|r| r.iter().map(|p| p.eval(&Cyc::one())).collect()).collect()
    }

    pub fn to_tsv(&self) -> String {
        let mut s: String = self.classes.iter().map(|c| format!("\tT_{c}")).collect();
        s.push('\n');
        for (l, r) in self.labels.iter().zip(&self.values) {
            s.push_str(l);
            for p in r {
                s.push('\t');
                s.push_str(&cyc_poly_string(p));
            }
            s.push('\n');
        }
        s
    }
}

fn from_bundled(g: &Group, file: &str) -> Result<HeckeCharTable, HeckeError> {
    let path = wchars::data_dir().join("hecke").join(file);
    let src = std::fs::read_to_string(&path).map_err(|e| HeckeError::Data(format!("{}: {e}", path.display())))?;
    let m = PolyMatrix::from_tsv(&src, "u").map_err(|e| HeckeError::Data(e.to_string()))?;
    let mut classes = vec![];
    let mut reps = vec![];
    for c in &m.cols {
        let word = c.strip_prefix("T_").ok_or_else(|| HeckeError::Data(format!("column {c}")))?;
        let x = g.w.word_to_element(word).map_err(|e| HeckeError::Data(e.to_string()))?;
        let k = g.classes.class_of(x);
        if g.classes.classes[k].cmin.binary_search(&x).is_err() {
            return Err(HeckeError::Data(format!("{word} is not of minimal length in its class")));
        }
        classes.push(g.classes.classes[k].name.clone());
        reps.push(x);
    }
    let values = m
        .entries
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    x.as_laurent()
                        .and_then(CycPoly::from_laurent)
                        .ok_or_else(|| HeckeError::Data(format!("entry {x} is not a polynomial in u")))
                })
                .collect()
        })
        .collect::<Result<_, _>>()?;
    for l in &m.rows {
        if g.table.index(l).is_none() {
            return Err(HeckeError::Data(format!("unknown character {l}")));
        }
    }
    Ok(HeckeCharTable { labels: m.rows, classes, reps, values })
}

/// A model computing `trace(T_w, E_u)` for any `w`, when one is available.
pub fn trace_model(g: &Group) -> Option<Box<dyn Fn(usize, Element) -> CycPoly + '_>> {
    if let Some(n) = models::type_a_rank(g) {
        let m = models::TypeA::new(g, n)?;
        return Some(Box::new(move |i, w| m.trace(i, g, w)));
    }
    if g.w.rank() == 2 {
        return Some(Box::new(move |i, w| models::rank_two_trace(g, i, w)));
    }
    None
}

/// Bundled table for B2, closed forms for rank two, matrix models for
/// type `A_n`, `n <= 3`.
pub fn hecke_char_table(g: &Group) -> Result<HeckeCharTable, HeckeError> {
    if g.name() == "B2" {
        return from_bundled(g, "B2.tsv");
    }
    let model = trace_model(g).ok_or_else(|| HeckeError::UnsupportedType(g.name()))?;
    let reps: Vec<Element> = g.classes.classes.iter().map(|c| c.rep).collect();
    Ok(HeckeCharTable {
        labels: g.table.labels.clone(),
        classes: g.classes.classes.iter().map(|c| c.name.clone()).collect(),
        values: (0..g.table.len()).map(|i| reps.iter().map(|&w| model(i, w)).collect()).collect(),
        reps,
    })
}
