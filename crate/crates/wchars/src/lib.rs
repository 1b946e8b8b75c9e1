//! Ordinary character tables of finite Coxeter groups, tensoring with the
//! sign, induction from parabolic subgroups, fake degrees and the integers
//! `omega_L(E)` attached to weight functions.

mod burnside;
pub mod bundled;
mod dihedral;
pub mod mn;

pub use burnside::burnside_values;

use conjclasses::Classes;
use coxeter::{CoxeterGroup, Element, Kind};
use exactpoly::{Cyc, CycPoly, Q};
use num_traits::{ToPrimitive, Zero};
use std::path::PathBuf;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharError {
    #[error("unsupported type {0}")]
    UnsupportedType(String),
    #[error("non-integral quotient {0}")]
    NonIntegralQuotient(String),
    #[error("eigenvalue search failed: {0}")]
    MissingEigenvalues(String),
    #[error("bad table data: {0}")]
    Data(String),
    #[error("bad weight function: {0}")]
    BadWeights(String),
    #[error(transparent)]
    Coxeter(#[from] coxeter::CoxeterError),
}

/// Root of the bundled data files; `WEYLKIT_DATA` overrides it.
pub fn data_dir() -> PathBuf {
    match std::env::var_os("WEYLKIT_DATA") {
        Some(d) => PathBuf::from(d),
        None => PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data")),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharTable {
    pub labels: Vec<String>,
    pub class_names: Vec<String>,
    pub class_labels: Vec<String>,
    pub class_sizes: Vec<usize>,
    /// `d_C`, whose parity gives the sign character.
    pub class_lengths: Vec<usize>,
    /// `values[E][C]`
    pub values: Vec<Vec<Cyc>>,
}

impl CharTable {
    pub fn new(classes: &Classes, labels: Vec<String>, values: Vec<Vec<Cyc>>) -> CharTable {
        CharTable {
            labels,
            class_names: classes.classes.iter().map(|c| c.name.clone()).collect(),
            class_labels: classes.classes.iter().map(|c| c.label.clone()).collect(),
            class_sizes: classes.sizes(),
            class_lengths: classes.classes.iter().map(|c| c.d).collect(),
            values,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn order(&self) -> usize {
        self.class_sizes.iter().sum()
    }

    pub fn index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn dim(&self, e: usize) -> i64 {
        self.values[e][0].to_rational().and_then(|d| d.to_integer().to_i64()).expect("integral degree")
    }

    pub fn sign_values(&self) -> Vec<Cyc> {
        self.class_lengths.iter().map(|&d| Cyc::from_int(if d % 2 == 0 { 1 } else { -1 })).collect()
    }

    /// `(1/|W|) sum |C| a(C) b(C)`; all characters here are real.
    pub fn inner(&self, a: &[Cyc], b: &[Cyc]) -> Cyc {
        let mut acc = Cyc::zero();
        for (c, &s) in self.class_sizes.iter().enumerate() {
            acc = &acc + &(&(&a[c] * &b[c]) * &Cyc::from_int(s as i64));
        }
        &acc * &Cyc::rational(Q::new(1.into(), (self.order() as i64).into()))
    }

    /// Multiplicities of the irreducibles in a virtual character.
    pub fn decompose(&self, chi: &[Cyc]) -> Result<Vec<i64>, CharError> {
        self.values
            .iter()
            .map(|e| {
                let m = self.inner(chi, e);
                m.to_rational()
                    .filter(|x| x.is_integer())
                    .and_then(|x| x.to_integer().to_i64())
                    .ok_or_else(|| CharError::NonIntegralQuotient(format!("multiplicity {m}")))
            })
            .collect()
    }

    pub fn tensor_sign_index(&self, e: usize) -> usize {
        let target: Vec<Cyc> = self.values[e].iter().zip(self.sign_values()).map(|(a, s)| a * &s).collect();
        self.values.iter().position(|v| *v == target).expect("tensor with sign is irreducible")
    }

    pub fn tensor_sign(&self, label: &str) -> Option<&str> {
        let e = self.index(label)?;
        Some(&self.labels[self.tensor_sign_index(e)])
    }

    /// Row orthogonality with class-size weights.
    pub fn is_orthonormal(&self) -> bool {
        (0..self.len()).all(|i| {
            (0..self.len()).all(|j| self.inner(&self.values[i], &self.values[j]) == Cyc::from_int((i == j) as i64))
        })
    }
}

/// Map from the classes of `W_J` to the classes of `W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFusion {
    pub map: Vec<usize>,
}

/// A group together with its classes and character table.
#[derive(Clone, Debug)]
pub struct Group {
    pub w: CoxeterGroup,
    pub classes: Classes,
    pub table: CharTable,
    class_polys: OnceLock<Vec<CycPoly>>,
}

impl Group {
    pub fn new(name: &str) -> Result<Group, CharError> {
        Group::from_coxeter(CoxeterGroup::from_name(name)?)
    }

    pub fn from_coxeter(w: CoxeterGroup) -> Result<Group, CharError> {
        let classes = Classes::compute(&w);
        let table = character_table(&w, &classes)?;
        Ok(Group { w, classes, table, class_polys: OnceLock::new() })
    }

    pub fn name(&self) -> String {
        self.w.datum.name()
    }

    pub fn fusion(&self, sub: &Group, emb: &[Element]) -> ClassFusion {
        ClassFusion { map: sub.classes.classes.iter().map(|c| self.classes.class_of(emb[c.rep.idx()])).collect() }
    }

    /// `W_J` with its fusion into `W`; `j` lists generator indices.
    pub fn parabolic(&self, j: &[usize]) -> Result<(Group, ClassFusion), CharError> {
        let (sub, emb) = self.w.parabolic(j);
        let sub = Group::from_coxeter(sub)?;
        let f = self.fusion(&sub, &emb);
        Ok((sub, f))
    }

    pub fn induce(&self, sub: &Group, fusion: &ClassFusion, chi: &[Cyc]) -> Vec<Cyc> {
        let mut acc = vec![Cyc::zero(); self.classes.len()];
        for (d, &c) in fusion.map.iter().enumerate() {
            acc[c] = &acc[c] + &(&chi[d] * &Cyc::from_int(sub.table.class_sizes[d] as i64));
        }
        let (gw, gj) = (self.w.order() as i64, sub.w.order() as i64);
        acc.iter()
            .enumerate()
            .map(|(c, x)| x * &Cyc::rational(Q::new(gw.into(), (gj * self.table.class_sizes[c] as i64).into())))
            .collect()
    }

    pub fn restrict(&self, fusion: &ClassFusion, chi: &[Cyc]) -> Vec<Cyc> {
        fusion.map.iter().map(|&c| chi[c].clone()).collect()
    }

    /// `prod (u^{d_i} - 1) / det(u - w_C)` for every class.
    pub fn class_polys(&self) -> &[CycPoly] {
        self.class_polys.get_or_init(|| {
            let mut num = CycPoly::constant(Cyc::one());
            for d in self.w.datum.degrees() {
                let mut c = vec![Cyc::zero(); d as usize + 1];
                c[0] = Cyc::from_int(-1);
                c[d as usize] = Cyc::one();
                num = num.mul(&CycPoly::new(c));
            }
            self.classes
                .classes
                .iter()
                .map(|c| num.divide_exact(&self.w.charpoly(c.rep)).expect("det(u - w) divides the degree product"))
                .collect()
        })
    }

    /// Graded multiplicity of `chi` in the coinvariant algebra, lowest
    /// degree first.
    pub fn fake_degree(&self, chi: &[Cyc]) -> Vec<Q> {
        let mut acc = CycPoly::zero();
        for (c, p) in self.class_polys().iter().enumerate() {
            let sign = if self.table.class_lengths[c] % 2 == 0 { 1 } else { -1 };
            let k = &chi[c] * &Cyc::from_int(sign * self.table.class_sizes[c] as i64);
            acc = acc.add(&p.scale(&k));
        }
        let acc = acc.scale(&Cyc::rational(Q::new(1.into(), (self.w.order() as i64).into())));
        acc.coeffs().iter().map(|c| c.to_rational().expect("rational fake degree")).collect()
    }

    /// The b-invariant: lowest degree of the fake degree.
    pub fn b_value(&self, e: usize) -> usize {
        self.fake_degree(&self.table.values[e]).iter().position(|c| !c.is_zero()).expect("nonzero fake degree")
    }

    pub fn b_values(&self) -> Vec<usize> {
        (0..self.table.len()).map(|e| self.b_value(e)).collect()
    }

    /// `omega_L(E) = sum over classes of generators of N_s trace(s, E) / dim E * L(s)`.
    pub fn omega_l(&self, e: usize, l: &WeightFunction) -> Result<i64, CharError> {
        let mut seen = vec![];
        let mut total = 0i64;
        for s in 0..self.w.rank() {
            let c = self.classes.class_of(self.w.gen(s));
            if seen.contains(&c) {
                continue;
            }
            seen.push(c);
            let x = &(&self.table.values[e][c] * &Cyc::from_int(self.table.class_sizes[c] as i64))
                * &Cyc::rational(Q::new(1.into(), self.table.dim(e).into()));
            let x = x
                .to_rational()
                .filter(|x| x.is_integer())
                .ok_or_else(|| CharError::NonIntegralQuotient(format!("{} at {}", self.table.labels[e], s)))?;
            total += x.to_integer().to_i64().expect("small") * l.values[s];
        }
        Ok(total)
    }

    pub fn equal_parameters(&self) -> WeightFunction {
        WeightFunction { values: vec![1; self.w.rank()] }
    }
}

/// Values `L(s) >= 0` per generator, constant on conjugate generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightFunction {
    pub values: Vec<i64>,
}

impl WeightFunction {
    pub fn new(g: &Group, values: Vec<i64>) -> Result<WeightFunction, CharError> {
        if values.len() != g.w.rank() {
            return Err(CharError::BadWeights(format!("expected {} values", g.w.rank())));
        }
        if values.iter().any(|&v| v < 0) {
            return Err(CharError::BadWeights("negative value".into()));
        }
        for s in 0..values.len() {
            for t in 0..s {
                let same = g.classes.class_of(g.w.gen(s)) == g.classes.class_of(g.w.gen(t));
                if same && values[s] != values[t] {
                    return Err(CharError::BadWeights(format!(
                        "{} and {} are conjugate",
                        g.w.datum.labels[s], g.w.datum.labels[t]
                    )));
                }
            }
        }
        Ok(WeightFunction { values })
    }

    pub fn restrict(&self, j: &[usize]) -> WeightFunction {
        WeightFunction { values: j.iter().map(|&s| self.values[s]).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }
}

fn int_row(v: Vec<i64>) -> Vec<Cyc> {
    v.into_iter().map(Cyc::from_int).collect()
}

/// Labels `phi{d},{b}` with primes separating equal pairs.
pub fn generic_labels(dims: &[i64], bs: &[usize]) -> Vec<String> {
    let mut out: Vec<String> = vec![];
    for (d, b) in dims.iter().zip(bs) {
        let base = format!("phi{d},{b}");
        let k = out.iter().filter(|l| l.trim_end_matches('\'') == base).count();
        out.push(format!("{base}{}", "'".repeat(k)));
    }
    out
}

fn b2_name(label: &str) -> &str {
    match label {
        "2." => "1_W",
        "11." => "sgn2",
        "1.1" => "σ",
        ".2" => "sgn1",
        ".11" => "sgn",
        other => other,
    }
}

/// The character table of `W` in its standard labelling: partitions for
/// type A, bipartitions for type B (with the names `1_W, sgn1, sgn2, σ, sgn`
/// in rank 2), a closed form for dihedral groups, bundled tables for D4, H3
/// and F4, and the class-algebra method with `phi{d},{b}` labels otherwise.
pub fn character_table(w: &CoxeterGroup, classes: &Classes) -> Result<CharTable, CharError> {
    match w.datum.kind {
        Kind::A(n) => {
            let parts = mn::partitions(n + 1);
            let mus: Vec<mn::Partition> = classes
                .classes
                .iter()
                .map(|c| mn::parse_partition(&c.label).expect("cycle type label"))
                .collect();
            let values = parts.iter().map(|l| int_row(mus.iter().map(|m| mn::char_a(l, m)).collect())).collect();
            let labels = parts.iter().map(|p| mn::format_partition(p)).collect();
            Ok(CharTable::new(classes, labels, values))
        }
        Kind::B(n) => {
            let bips = mn::bipartitions(n);
            let types: Vec<(mn::Partition, mn::Partition)> = classes
                .classes
                .iter()
                .map(|c| mn::parse_bipartition(&c.label).expect("signed cycle type label"))
                .collect();
            let values = bips
                .iter()
                .map(|(a, b)| int_row(types.iter().map(|(p, m)| mn::char_b(a, b, p, m)).collect()))
                .collect();
            let labels = bips
                .iter()
                .map(|(a, b)| {
                    let l = mn::format_bipartition(a, b);
                    if n == 2 {
                        b2_name(&l).to_string()
                    } else {
                        l
                    }
                })
                .collect();
            Ok(CharTable::new(classes, labels, values))
        }
        Kind::I2(m) => Ok(dihedral::table(w, classes, m)),
        Kind::D(4) | Kind::H3 | Kind::F4 => bundled::load(&w.datum.name(), w, classes),
        Kind::H4 => Err(CharError::UnsupportedType("H4".into())),
        _ => generic_table(w, classes),
    }
}

/// Class-algebra table with generic labels, rows sorted by `(dim, b)`.
pub fn generic_table(w: &CoxeterGroup, classes: &Classes) -> Result<CharTable, CharError> {
    let values = burnside_values(w, classes)?;
    let tmp = Group {
        w: w.clone(),
        classes: classes.clone(),
        table: CharTable::new(classes, vec![String::new(); values.len()], values),
        class_polys: OnceLock::new(),
    };
    let bs = tmp.b_values();
    let mut rows: Vec<(i64, usize, Vec<Cyc>)> =
        (0..tmp.table.len()).map(|e| (tmp.table.dim(e), bs[e], tmp.table.values[e].clone())).collect();
    rows.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)).then_with(|| cmp_rows(&b.2, &a.2)));
    let dims: Vec<i64> = rows.iter().map(|r| r.0).collect();
    let b: Vec<usize> = rows.iter().map(|r| r.1).collect();
    Ok(CharTable::new(classes, generic_labels(&dims, &b), rows.into_iter().map(|r| r.2).collect()))
}

/// Lexicographic order on value rows under the first real embedding.
pub fn cmp_rows(a: &[Cyc], b: &[Cyc]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        if x != y {
            let (fx, fy) = (x.embed(1).0, y.embed(1).0);
            return fx.partial_cmp(&fy).unwrap_or(std::cmp::Ordering::Equal);
        }
    }
    std::cmp::Ordering::Equal
}

/// Exact integer value of a rational `Cyc`, if it is one.
pub fn as_int(x: &Cyc) -> Option<i64> {
    x.to_rational().filter(|r| r.is_integer()).and_then(|r| r.to_integer().to_i64())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[Cyc]) -> Vec<i64> {
        v.iter().map(|x| as_int(x).unwrap()).collect()
    }

    #[test]
    fn b2_table() {
        let g = Group::new("B2").unwrap();
        let t = &g.table;
        assert_eq!(t.class_names, ["1", "s", "t", "st", "stst"]);
        let st = 3;
        let row = |l: &str| ints(&t.values[t.index(l).unwrap()]);
        assert_eq!(row("σ"), [2, 0, 0, 0, -2]);
        assert_eq!(row("sgn1")[st], -1);
        assert_eq!(row("sgn1")[1..3], [1, -1]);
        assert_eq!(row("1_W")[st], 1);
        assert_eq!(t.tensor_sign("σ"), Some("σ"));
        assert_eq!(t.tensor_sign("1_W"), Some("sgn"));
        assert_eq!(t.tensor_sign("sgn1"), Some("sgn2"));
        assert!(t.is_orthonormal());
    }

    #[test]
    fn a2_reflection_character() {
        let g = Group::new("A2").unwrap();
        let e = g.table.index("[2,1]").unwrap();
        assert_eq!(g.table.dim(e), 2);
        let c3 = g.classes.find(&g.w, "12").unwrap();
        assert_eq!(as_int(&g.table.values[e][c3]), Some(-1));
    }

    #[test]
    fn omega_b2() {
        let g = Group::new("B2").unwrap();
        let l = g.equal_parameters();
        let om = |x: &str| g.omega_l(g.table.index(x).unwrap(), &l).unwrap();
        assert_eq!((om("1_W"), om("sgn"), om("σ")), (4, -4, 0));
        let zero = WeightFunction::new(&g, vec![0, 0]).unwrap();
        assert!((0..5).all(|e| g.omega_l(e, &zero).unwrap() == 0));
    }

    #[test]
    fn weight_functions_are_checked() {
        let g = Group::new("A2").unwrap();
        assert!(matches!(WeightFunction::new(&g, vec![1, 2]), Err(CharError::BadWeights(_))));
        assert!(matches!(WeightFunction::new(&g, vec![-1, -1]), Err(CharError::BadWeights(_))));
        assert!(WeightFunction::new(&Group::new("B2").unwrap(), vec![1, 2]).is_ok());
    }

    #[test]
    fn h4_is_unsupported() {
        let w = CoxeterGroup::from_name("A1").unwrap();
        let c = Classes::compute(&w);
        assert!(character_table(&w, &c).is_ok());
        assert_eq!(
            Group::new("H4").err(),
            Some(CharError::UnsupportedType("H4".into()))
        );
    }

    #[test]
    fn generic_label_primes() {
        assert_eq!(generic_labels(&[1, 2, 2, 2], &[0, 1, 1, 3]), ["phi1,0", "phi2,1", "phi2,1'", "phi2,3"]);
    }
}
