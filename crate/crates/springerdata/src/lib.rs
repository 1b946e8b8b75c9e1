//! Bundled geometric data: Springer correspondence, closure order, Fourier
//! matrices and unipotent classes of `G^F`. Only Sp4 (both characteristics)
//! ships; other types add files under `data/<type>/`.

use afun::FamilyPartition;
use exactpoly::{linalg, parse_q, LaurentPoly, Q};
use greenalg::BlockPlan;
use num_traits::{One, Zero};
use serde::Deserialize;
use std::collections::BTreeMap;
use std::path::PathBuf;
use thiserror::Error;
use wchars::Group;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpringerError {
    #[error("no bundled data for {0}")]
    NoData(String),
    #[error("bad data: {0}")]
    Data(String),
    #[error("family {0:?} has no unique maximal class")]
    NoUniqueMaximum(Vec<String>),
}

type Result<T> = std::result::Result<T, SpringerError>;

/// `odd` is any `p != 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Characteristic {
    Odd,
    Even,
}

impl Characteristic {
    pub fn parse(s: &str) -> Result<Characteristic> {
        match s {
            "odd" | "p!=2" | "good" => Ok(Characteristic::Odd),
            "even" | "p=2" | "2" | "bad" => Ok(Characteristic::Even),
            _ => Err(SpringerError::Data(format!("unknown characteristic {s}"))),
        }
    }

    pub fn dir(self) -> &'static str {
        match self {
            Characteristic::Odd => "odd",
            Characteristic::Even => "even",
        }
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: PathBuf, what: &str) -> Result<T> {
    let src = std::fs::read_to_string(&path).map_err(|_| SpringerError::NoData(what.to_string()))?;
    serde_json::from_str(&src).map_err(|e| SpringerError::Data(format!("{}: {e}", path.display())))
}

fn poly(c: &[String]) -> Result<LaurentPoly> {
    let mut p = LaurentPoly::zero();
    for (k, x) in c.iter().enumerate() {
        p.add_term(2 * k as i64, parse_q(x).map_err(|e| SpringerError::Data(e.to_string()))?);
    }
    Ok(p)
}

#[derive(Clone, Debug, Deserialize)]
pub struct UnipotentClass {
    pub name: String,
    pub dim: i64,
}

#[derive(Clone, Debug, Deserialize)]
pub struct SpringerEntry {
    pub character: String,
    pub class: String,
    pub trivial: bool,
    pub b_star: i64,
}

#[derive(Deserialize)]
struct SpringerFile {
    weyl: String,
    good: bool,
    dim_g: i64,
    dim_t: i64,
    classes: Vec<UnipotentClass>,
    correspondence: Vec<SpringerEntry>,
}

#[derive(Deserialize)]
struct ClosureFile {
    assumption: bool,
    covers: Vec<(String, String)>,
}

#[derive(Clone, Debug)]
pub struct SpringerData {
    pub weyl: String,
    pub characteristic: Characteristic,
    pub good: bool,
    pub dim_g: i64,
    pub dim_t: i64,
    /// Classes in increasing dimension.
    pub classes: Vec<UnipotentClass>,
    pub entries: Vec<SpringerEntry>,
    /// `leq[i][j]`: class `i` lies in the closure of class `j`.
    pub leq: Vec<Vec<bool>>,
    /// Whether the closure order is an assumption rather than known data.
    pub closure_assumed: bool,
}

impl SpringerData {
    pub fn class_index(&self, name: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.name == name)
    }

    pub fn entry(&self, character: &str) -> Option<&SpringerEntry> {
        self.entries.iter().find(|e| e.character == character)
    }

    pub fn class_of(&self, character: &str) -> Option<&str> {
        Some(&self.entry(character)?.class)
    }

    /// `a` lies in the closure of `b`.
    pub fn in_closure(&self, a: &str, b: &str) -> bool {
        match (self.class_index(a), self.class_index(b)) {
            (Some(i), Some(j)) => self.leq[i][j],
            _ => false,
        }
    }

    /// The character with `ι_E = (O, trivial)`.
    pub fn trivial_character(&self, class: &str) -> Option<&str> {
        self.entries.iter().find(|e| e.class == class && e.trivial).map(|e| e.character.as_str())
    }

    /// Blocks `I_i* = {E | O_E = O_i}` in increasing `dim O_i`, with `b_i*`.
    pub fn plan(&self) -> Result<BlockPlan> {
        let mut blocks = vec![];
        let mut b = vec![];
        for c in &self.classes {
            let block: Vec<String> =
                self.entries.iter().filter(|e| e.class == c.name).map(|e| e.character.clone()).collect();
            b.push((self.dim_g - self.dim_t - c.dim) / 2);
            blocks.push(block);
        }
        BlockPlan::new(blocks, b).map_err(|e| SpringerError::Data(e.to_string()))
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(SpringerError::Data(m));
        if self.classes.windows(2).any(|w| w[0].dim > w[1].dim) {
            return bad("classes must be listed by increasing dimension".into());
        }
        for c in &self.classes {
            let twice = self.dim_g - self.dim_t - c.dim;
            if twice < 0 || twice % 2 != 0 {
                return bad(format!("dim G - dim T - dim {} is not even", c.name));
            }
            if self.trivial_character(&c.name).is_none() {
                return bad(format!("({}, trivial) is not in the image", c.name));
            }
        }
        for e in &self.entries {
            let Some(i) = self.class_index(&e.class) else {
                return bad(format!("unknown class {}", e.class));
            };
            if 2 * e.b_star != self.dim_g - self.dim_t - self.classes[i].dim {
                return bad(format!("b* of {} does not match the class dimension", e.character));
            }
        }
        let n = self.classes.len();
        for i in 0..n {
            for j in 0..n {
                if i != j && self.leq[i][j] && self.classes[i].dim >= self.classes[j].dim {
                    return bad(format!("{} < {} against dimensions", self.classes[i].name, self.classes[j].name));
                }
            }
        }
        Ok(())
    }
}

fn type_dir(weyl: &str) -> PathBuf {
    wchars::data_dir().join(weyl)
}

pub fn load_springer(weyl: &str, ch: Characteristic) -> Result<SpringerData> {
    let dir = type_dir(weyl).join(ch.dir());
    let what = format!("{weyl}, {} characteristic", ch.dir());
    let f: SpringerFile = read_json(dir.join("springer.json"), &what)?;
    let c: ClosureFile = read_json(dir.join("closure.json"), &what)?;
    let n = f.classes.len();
    let idx = |s: &str| {
        f.classes.iter().position(|x| x.name == s).ok_or_else(|| SpringerError::Data(format!("unknown class {s}")))
    };
    let mut leq = vec![vec![false; n]; n];
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
    }
    for (a, b) in &c.covers {
        leq[idx(a)?][idx(b)?] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if leq[i][k] && leq[k][j] {
                    leq[i][j] = true;
                }
            }
        }
    }
    let d = SpringerData {
        weyl: f.weyl,
        characteristic: ch,
        good: f.good,
        dim_g: f.dim_g,
        dim_t: f.dim_t,
        classes: f.classes,
        entries: f.correspondence,
        leq,
        closure_assumed: c.assumption,
    };
    d.validate()?;
    Ok(d)
}

/// Square rational matrix indexed by `Irr(W)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourierMatrix {
    pub labels: Vec<String>,
    pub matrix: Vec<Vec<Q>>,
}

#[derive(Deserialize)]
struct FourierFile {
    labels: Vec<String>,
    matrix: Vec<Vec<String>>,
}

impl FourierMatrix {
    pub fn identity(labels: &[String]) -> FourierMatrix {
        let n = labels.len();
        let matrix = (0..n).map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect();
        FourierMatrix { labels: labels.to_vec(), matrix }
    }

    pub fn is_symmetric(&self) -> bool {
        linalg::transpose(&self.matrix) == self.matrix
    }

    pub fn is_involution(&self) -> bool {
        linalg::mul(&self.matrix, &self.matrix) == FourierMatrix::identity(&self.labels).matrix
    }

    /// `I - Υ²`; zero exactly when every family is fully indexed by `Irr(W)`.
    pub fn involution_defect(&self) -> Vec<Vec<Q>> {
        linalg::sub(&FourierMatrix::identity(&self.labels).matrix, &linalg::mul(&self.matrix, &self.matrix))
    }

    /// Nonzero entries only inside families.
    pub fn is_block_diagonal(&self, fam: &FamilyPartition) -> bool {
        let n = self.labels.len();
        (0..n).all(|i| {
            (0..n).all(|j| self.matrix[i][j].is_zero() || fam.block_of(&self.labels[i]) == fam.block_of(&self.labels[j]))
        })
    }

    pub fn reindex(&self, order: &[String]) -> Result<FourierMatrix> {
        let idx: Vec<usize> = order
            .iter()
            .map(|l| self.labels.iter().position(|x| x == l).ok_or_else(|| SpringerError::Data(format!("no label {l}"))))
            .collect::<Result<_>>()?;
        if idx.len() != self.labels.len() {
            return Err(SpringerError::Data("reindex must be a permutation".into()));
        }
        let matrix = idx.iter().map(|&i| idx.iter().map(|&j| self.matrix[i][j].clone()).collect()).collect();
        Ok(FourierMatrix { labels: order.to_vec(), matrix })
    }
}

/// Identity for type A (all families are singletons), bundled files
/// otherwise.
pub fn load_fourier(g: &Group) -> Result<FourierMatrix> {
    let name = g.name();
    if name.starts_with('A') {
        return Ok(FourierMatrix::identity(&g.table.labels));
    }
    let f: FourierFile = read_json(type_dir(&name).join("fourier.json"), &format!("Fourier matrix of {name}"))?;
    let matrix = f
        .matrix
        .iter()
        .map(|r| r.iter().map(|x| parse_q(x).map_err(|e| SpringerError::Data(e.to_string()))).collect())
        .collect::<Result<Vec<Vec<Q>>>>()?;
    let m = FourierMatrix { labels: f.labels, matrix };
    if m.matrix.len() != m.labels.len() || m.matrix.iter().any(|r| r.len() != m.labels.len()) {
        return Err(SpringerError::Data("Fourier matrix is not square".into()));
    }
    m.reindex(&g.table.labels)
}

#[derive(Clone, Debug)]
pub struct FqClass {
    pub name: String,
    pub g_class: String,
    pub centralizer: LaurentPoly,
}

#[derive(Clone, Debug)]
pub struct GroupOverFq {
    pub order_g: LaurentPoly,
    pub order_b: LaurentPoly,
    pub index_gb: LaurentPoly,
    pub classes: Vec<FqClass>,
    /// Principal series unipotent characters, labelled by `Irr(W)`.
    pub characters: Vec<String>,
    pub values: Vec<Vec<LaurentPoly>>,
    /// `Y_ι` for characters with a nontrivial local system, by class name;
    /// trivial local systems are `1` on their class.
    pub local_systems: BTreeMap<String, BTreeMap<String, Q>>,
}

#[derive(Deserialize)]
struct LocalSystemFile {
    character: String,
    values: BTreeMap<String, String>,
}

#[derive(Deserialize)]
struct GfqFile {
    order_g: Vec<String>,
    order_b: Vec<String>,
    index_gb: Vec<String>,
    classes: Vec<ClassFile>,
    characters: Vec<String>,
    values: Vec<Vec<Vec<String>>>,
    local_systems: Vec<LocalSystemFile>,
}

#[derive(Deserialize)]
struct ClassFile {
    name: String,
    g_class: String,
    centralizer: Vec<String>,
}

impl GroupOverFq {
    pub fn class_size(&self, i: usize) -> Result<LaurentPoly> {
        self.order_g
            .divide_exact(&self.classes[i].centralizer)
            .map_err(|_| SpringerError::Data(format!("|C| of {} does not divide |G|", self.classes[i].name)))
    }

    /// `sum |G^F|/|C|` over the `G^F`-classes inside `O`.
    pub fn points(&self, g_class: &str) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero();
        for (i, c) in self.classes.iter().enumerate() {
            if c.g_class == g_class {
                acc = &acc + &self.class_size(i)?;
            }
        }
        Ok(acc)
    }

    /// `Y_{ι_E}` on the `G^F`-class `i`.
    pub fn y(&self, springer: &SpringerData, character: &str, i: usize) -> Q {
        let c = &self.classes[i];
        if let Some(m) = self.local_systems.get(character) {
            return m.get(&c.name).cloned().unwrap_or_else(Q::zero);
        }
        match springer.entry(character) {
            Some(e) if e.trivial && e.class == c.g_class => Q::one(),
            _ => Q::zero(),
        }
    }

    pub fn row(&self, character: &str) -> Option<&[LaurentPoly]> {
        Some(&self.values[self.characters.iter().position(|c| c == character)?])
    }
}

pub fn load_gfq(weyl: &str, ch: Characteristic) -> Result<GroupOverFq> {
    let what = format!("{weyl} over F_q, {} characteristic", ch.dir());
    let f: GfqFile = read_json(type_dir(weyl).join(ch.dir()).join("gfq.json"), &what)?;
    let classes = f
        .classes
        .iter()
        .map(|c| Ok(FqClass { name: c.name.clone(), g_class: c.g_class.clone(), centralizer: poly(&c.centralizer)? }))
        .collect::<Result<Vec<_>>>()?;
    let values = f.values.iter().map(|r| r.iter().map(|c| poly(c)).collect()).collect::<Result<Vec<Vec<_>>>>()?;
    if values.len() != f.characters.len() || values.iter().any(|r| r.len() != classes.len()) {
        return Err(SpringerError::Data("value table has the wrong shape".into()));
    }
    let mut local_systems = BTreeMap::new();
    for l in f.local_systems {
        let m = l
            .values
            .iter()
            .map(|(k, v)| Ok((k.clone(), parse_q(v).map_err(|e| SpringerError::Data(e.to_string()))?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        local_systems.insert(l.character, m);
    }
    Ok(GroupOverFq {
        order_g: poly(&f.order_g)?,
        order_b: poly(&f.order_b)?,
        index_gb: poly(&f.index_gb)?,
        classes,
        characters: f.characters,
        values,
        local_systems,
    })
}

/// `E` is special when `a_E = b_E` (equal parameters).
pub fn special_characters(g: &Group) -> Result<Vec<String>> {
    let a = afun::a_tilde(g, &g.equal_parameters()).map_err(|e| SpringerError::Data(e.to_string()))?;
    let b = g.b_values();
    Ok(a.labels.iter().zip(&a.values).zip(b).filter(|((_, a), b)| **a == *b as i64).map(|((l, _), _)| l.clone()).collect())
}

/// For each family the maximum of `{O_E | E in F}` in the closure order.
pub fn special_classes(data: &SpringerData, fam: &FamilyPartition) -> Result<Vec<String>> {
    fam.blocks
        .iter()
        .map(|block| {
            let mut cands: Vec<&str> = block.iter().filter_map(|e| data.class_of(e)).collect();
            cands.sort();
            cands.dedup();
            let max: Vec<&str> =
                cands.iter().copied().filter(|&c| cands.iter().all(|&d| data.in_closure(d, c))).collect();
            match max.as_slice() {
                [m] => Ok(m.to_string()),
                _ => Err(SpringerError::NoUniqueMaximum(block.clone())),
            }
        })
        .collect()
}

/// Classes in the closure of the special class `O` but not in the closure
/// of any smaller special class.
pub fn special_piece(data: &SpringerData, specials: &[String], o: &str) -> Vec<String> {
    data.classes
        .iter()
        .filter(|c| {
            data.in_closure(&c.name, o)
                && !specials.iter().any(|s| s != o && data.in_closure(s, o) && data.in_closure(&c.name, s))
        })
        .map(|c| c.name.clone())
        .collect()
}

/// `λ_{E,E}` of the family factorisation against the number of rational
/// points of the special piece, for each special `E`.
#[derive(Clone, Debug)]
pub struct SpecialPieceCheck {
    pub character: String,
    pub piece: Vec<String>,
    pub lambda: LaurentPoly,
    pub points: LaurentPoly,
    /// Values of both sides at the sampled `q`.
    pub samples: Vec<(i64, Q, Q)>,
}

impl SpecialPieceCheck {
    pub fn holds(&self) -> bool {
        self.lambda == self.points && self.samples.iter().all(|(_, a, b)| a == b)
    }
}

pub fn check_special_pieces(
    g: &Group,
    data: &SpringerData,
    gfq: &GroupOverFq,
    qs: &[i64],
) -> Result<Vec<SpecialPieceCheck>> {
    let report = greenalg::check_family_conjecture(g).map_err(|e| SpringerError::Data(e.to_string()))?;
    let fam = afun::families(g, &g.equal_parameters()).map_err(|e| SpringerError::Data(e.to_string()))?;
    let specials = special_classes(data, &fam)?;
    let mut out = vec![];
    for e in special_characters(g)? {
        let o = data.class_of(&e).ok_or_else(|| SpringerError::Data(format!("{e} has no class")))?;
        let piece = special_piece(data, &specials, o);
        let mut points = LaurentPoly::zero();
        for c in &piece {
            points = &points + &gfq.points(c)?;
        }
        let lambda = report
            .factorization
            .lambda
            .get(&e, &e)
            .and_then(|x| x.as_laurent())
            .cloned()
            .ok_or_else(|| SpringerError::Data(format!("λ({e},{e}) is not a polynomial")))?;
        let samples = qs
            .iter()
            .map(|&q| {
                let x = exactpoly::q(q);
                (q, lambda.evaluate(&x).expect("polynomial"), points.evaluate(&x).expect("polynomial"))
            })
            .collect();
        out.push(SpecialPieceCheck { character: e, piece, lambda, points, samples });
    }
    Ok(out)
}
