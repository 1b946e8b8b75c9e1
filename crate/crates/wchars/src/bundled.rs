//! Bundled character tables for D4, H3 and F4. The files are produced by
//! [`generate`] (see `examples/gen_tables.rs`) and checked against fixed
//! SHA-256 digests when loaded.

use crate::{burnside_values, cmp_rows, generic_table, mn, CharError, CharTable, Group, WeightFunction};
use conjclasses::Classes;
use coxeter::CoxeterGroup;
use exactpoly::{fmt_q, parse_q, Cyc, Q};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::sync::OnceLock;

pub const DIGESTS: [(&str, &str); 3] = [
    ("D4", "815c20d0b1602c5198d73a5c5e5bc895c59af5c75bdff1b05269ac477a2f2d43"),
    ("H3", "33810725095e459332412efd1bff387ba224989b25c02f44ce42b639d87bd584"),
    ("F4", "b9a3c2387a63960d3c831a5c063870ec6ef5975a4f96e53401d08ed061dd2ac6"),
];

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TableFile {
    pub group: String,
    pub labels: Vec<String>,
    /// Class names: a word for an element, in parentheses when it is all
    /// digits, or `1` for the identity.
    pub class_words: Vec<String>,
    pub class_labels: Vec<String>,
    pub class_sizes: Vec<usize>,
    /// Rational parts.
    pub values: Vec<Vec<String>>,
    /// Coefficients of `sqrt 5`, present for H3.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sqrt5: Option<Vec<Vec<String>>>,
}

fn sqrt5() -> Cyc {
    Cyc::from_zphi(-1, 2)
}

/// `x = a + b sqrt 5`
fn split_sqrt5(x: &Cyc) -> Result<(Q, Q), CharError> {
    let y = x.galois(3);
    let half = Cyc::rational(exactpoly::qf(1, 2));
    let a = &(x + &y) * &half;
    let b = &(&(x - &y) * &half) * &(&sqrt5() * &Cyc::rational(exactpoly::qf(1, 5)));
    match (a.to_rational(), b.to_rational()) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(CharError::Data(format!("{x} is not in Q(sqrt 5)"))),
    }
}

pub fn path(name: &str) -> std::path::PathBuf {
    crate::data_dir().join("tables").join(format!("{name}.json"))
}

pub fn digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

fn read(name: &str) -> Result<TableFile, CharError> {
    let p = path(name);
    let bytes = std::fs::read(&p).map_err(|e| CharError::Data(format!("{}: {e}", p.display())))?;
    let want = DIGESTS.iter().find(|d| d.0 == name).map(|d| d.1);
    let got = digest(&bytes);
    if want != Some(got.as_str()) {
        return Err(CharError::Data(format!("checksum mismatch for {}: {got}", p.display())));
    }
    serde_json::from_slice(&bytes).map_err(|e| CharError::Data(format!("{}: {e}", p.display())))
}

/// Loads the bundled table and reorders its columns to `classes`.
pub fn load(name: &str, w: &CoxeterGroup, classes: &Classes) -> Result<CharTable, CharError> {
    static CACHE: OnceLock<std::sync::Mutex<Vec<(String, TableFile)>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let file = {
        let mut c = cache.lock().unwrap();
        match c.iter().find(|x| x.0 == name) {
            Some(x) => x.1.clone(),
            None => {
                let f = read(name)?;
                c.push((name.to_string(), f.clone()));
                f
            }
        }
    };
    from_file(&file, w, classes)
}

pub fn from_file(file: &TableFile, w: &CoxeterGroup, classes: &Classes) -> Result<CharTable, CharError> {
    let k = classes.len();
    if file.class_words.len() != k || file.labels.len() != k {
        return Err(CharError::Data(format!("{}: expected {k} classes", file.group)));
    }
    let mut col = vec![usize::MAX; k];
    for (j, word) in file.class_words.iter().enumerate() {
        let c = classes
            .find(w, word)
            .ok_or_else(|| CharError::Data(format!("{}: unknown class {word}", file.group)))?;
        if col[c] != usize::MAX || classes.get(c).size() != file.class_sizes[j] {
            return Err(CharError::Data(format!("{}: class word {word} does not match", file.group)));
        }
        col[c] = j;
    }
    let parse = |s: &str| parse_q(s).map_err(|e| CharError::Data(e.to_string()));
    let mut values = vec![];
    for (e, row) in file.values.iter().enumerate() {
        let mut out = vec![];
        for &j in &col {
            let mut v = Cyc::rational(parse(&row[j])?);
            if let Some(s) = &file.sqrt5 {
                v = &v + &(&sqrt5() * &Cyc::rational(parse(&s[e][j])?));
            }
            out.push(v);
        }
        values.push(out);
    }
    let t = CharTable::new(classes, file.labels.clone(), values);
    if !t.is_orthonormal() {
        return Err(CharError::Data(format!("{}: rows are not orthonormal", file.group)));
    }
    Ok(t)
}

/// Computes the table from the class algebra and names its rows.
pub fn generate(name: &str) -> Result<TableFile, CharError> {
    let w = CoxeterGroup::from_name(name)?;
    let classes = Classes::compute(&w);
    let table = match name {
        "D4" => label_d4(&w, &classes)?,
        "H3" => label_h3(&w, &classes)?,
        "F4" => label_f4(&w, &classes)?,
        _ => return Err(CharError::UnsupportedType(name.into())),
    };
    let mut values = vec![];
    let mut roots = vec![];
    for row in &table.values {
        let (a, b): (Vec<String>, Vec<String>) = row
            .iter()
            .map(|x| split_sqrt5(x).map(|(a, b)| (fmt_q(&a), fmt_q(&b))))
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .unzip();
        values.push(a);
        roots.push(b);
    }
    let irrational = roots.iter().flatten().any(|s| s != "0");
    Ok(TableFile {
        group: name.into(),
        labels: table.labels.clone(),
        class_words: classes.classes.iter().map(|c| c.name.clone()).collect(),
        class_labels: table.class_labels.clone(),
        class_sizes: table.class_sizes.clone(),
        values,
        sqrt5: irrational.then_some(roots),
    })
}

fn with_labels(classes: &Classes, rows: Vec<(String, Vec<Cyc>)>) -> Result<CharTable, CharError> {
    let mut seen = std::collections::HashSet::new();
    if rows.iter().any(|r| !seen.insert(r.0.clone())) {
        return Err(CharError::Data("duplicate labels".into()));
    }
    let (labels, values) = rows.into_iter().unzip();
    Ok(CharTable::new(classes, labels, values))
}

/// D4 rows come from restricting B4 along `u -> t s1 t`; a bipartition
/// `(a, a)` splits into `a.a+` and `a.a-`, `+` being the lexicographically
/// larger row.
fn label_d4(w: &CoxeterGroup, classes: &Classes) -> Result<CharTable, CharError> {
    let values = burnside_values(w, classes)?;
    let b4 = Group::new("B4")?;
    let image = [vec![0, 1, 0], vec![1], vec![2], vec![3]];
    let fusion: Vec<usize> = classes
        .classes
        .iter()
        .map(|c| {
            let word: Vec<usize> = w.min_word(c.rep).iter().flat_map(|&s| image[s as usize].clone()).collect();
            b4.classes.class_of(b4.w.from_word(&word))
        })
        .collect();
    let t = CharTable::new(classes, vec![String::new(); values.len()], values.clone());
    let mut rows = vec![];
    let mut done = vec![];
    for (a, b) in mn::bipartitions(4) {
        if done.contains(&(b.clone(), a.clone())) {
            continue;
        }
        done.push((a.clone(), b.clone()));
        let e = b4.table.index(&mn::format_bipartition(&a, &b)).expect("B4 label");
        let res: Vec<Cyc> = fusion.iter().map(|&c| b4.table.values[e][c].clone()).collect();
        let mult = t.decompose(&res)?;
        let parts: Vec<usize> = (0..mult.len()).filter(|&i| mult[i] != 0).collect();
        let label = mn::format_bipartition(&a, &b);
        match parts.as_slice() {
            [i] => rows.push((label, values[*i].clone())),
            [i, j] if a == b => {
                let (hi, lo) =
                    if cmp_rows(&values[*i], &values[*j]).is_gt() { (*i, *j) } else { (*j, *i) };
                rows.push((format!("{label}+"), values[hi].clone()));
                rows.push((format!("{label}-"), values[lo].clone()));
            }
            _ => return Err(CharError::Data(format!("unexpected restriction of {label}"))),
        }
    }
    with_labels(classes, rows)
}

fn generic_group(w: &CoxeterGroup, classes: &Classes) -> Result<Group, CharError> {
    Ok(Group {
        w: w.clone(),
        classes: classes.clone(),
        table: generic_table(w, classes)?,
        class_polys: Default::default(),
    })
}

fn dim_b(g: &Group, e: usize) -> (i64, usize) {
    (g.table.dim(e), g.b_value(e))
}

const H3_NAMES: [((i64, usize), &str); 10] = [
    ((1, 0), "1_r"),
    ((1, 15), "1_r'"),
    ((3, 1), "3_s"),
    ((3, 3), "3bar_s"),
    ((3, 6), "3_s'"),
    ((3, 8), "3bar_s'"),
    ((4, 3), "4_r"),
    ((4, 4), "4_r'"),
    ((5, 2), "5_r"),
    ((5, 5), "5_r'"),
];

fn label_h3(w: &CoxeterGroup, classes: &Classes) -> Result<CharTable, CharError> {
    let g = generic_group(w, classes)?;
    let mut rows = vec![];
    for (key, name) in H3_NAMES {
        let e = (0..g.table.len())
            .find(|&e| dim_b(&g, e) == key)
            .ok_or_else(|| CharError::Data(format!("no H3 character with (dim, b) = {key:?}")))?;
        rows.push((name.to_string(), g.table.values[e].clone()));
    }
    with_labels(classes, rows)
}

const F4_SINGLE: [((i64, usize), &str); 9] = [
    ((1, 0), "1_1"),
    ((1, 24), "1_4"),
    ((4, 1), "4_2"),
    ((4, 8), "4_1"),
    ((4, 13), "4_5"),
    ((9, 2), "9_1"),
    ((9, 10), "9_4"),
    ((12, 4), "12_1"),
    ((16, 5), "16_1"),
];

/// F4 rows. Characters determined by `(dim, b)` are named directly. Among
/// the remaining pairs: `1_2` is `-1` on the short reflections `s3, s4`;
/// `2_1` is `2` on `s1`; `6_1` is the exterior square of `4_2`; with weights
/// `(1, 1, 2, 2)` the value `omega_L` is constant on families, so `8_3` is the
/// one sharing it with `1_3`, and `4_3`, `9_2` are the members with
/// `omega_L < 0`. The rest follow by tensoring with the sign.
fn label_f4(w: &CoxeterGroup, classes: &Classes) -> Result<CharTable, CharError> {
    let g = generic_group(w, classes)?;
    let t = &g.table;
    let n = t.len();
    let find = |key: (i64, usize)| -> Vec<usize> { (0..n).filter(|&e| dim_b(&g, e) == key).collect() };
    let pair = |key: (i64, usize)| -> Result<[usize; 2], CharError> {
        let v = find(key);
        <[usize; 2]>::try_from(v).map_err(|_| CharError::Data(format!("expected a pair at {key:?}")))
    };
    let mut names: Vec<Option<String>> = vec![None; n];
    for (key, name) in F4_SINGLE {
        let v = find(key);
        if v.len() != 1 {
            return Err(CharError::Data(format!("expected one character at {key:?}")));
        }
        names[v[0]] = Some(name.into());
    }
    let c = |s: usize| classes.class_of(w.gen(s));
    let (long, short) = (c(0), c(2));
    let pick = |key, pred: &dyn Fn(usize) -> bool, first: &str, second: &str, names: &mut Vec<Option<String>>| -> Result<(), CharError> {
        let [x, y] = pair(key)?;
        let (a, b) = match (pred(x), pred(y)) {
            (true, false) => (x, y),
            (false, true) => (y, x),
            _ => return Err(CharError::Data(format!("rule does not separate {first} and {second}"))),
        };
        names[a] = Some(first.into());
        names[b] = Some(second.into());
        Ok(())
    };
    let val = |e: usize, cl: usize| t.values[e][cl].clone();
    pick((1, 12), &|e| val(e, short) == Cyc::from_int(-1), "1_2", "1_3", &mut names)?;
    pick((2, 4), &|e| val(e, long) == Cyc::from_int(2), "2_1", "2_3", &mut names)?;
    let power: Vec<usize> = classes.classes.iter().map(|cl| classes.class_of(w.mul(cl.rep, cl.rep))).collect();
    let e42 = names.iter().position(|x| x.as_deref() == Some("4_2")).unwrap();
    let wedge: Vec<Cyc> = (0..classes.len())
        .map(|k| &(&(&val(e42, k) * &val(e42, k)) - &val(e42, power[k])) * &Cyc::rational(exactpoly::qf(1, 2)))
        .collect();
    pick((6, 6), &|e| t.values[e] == wedge, "6_1", "6_2", &mut names)?;
    let l = WeightFunction { values: vec![1, 1, 2, 2] };
    let omega = |e: usize| g.omega_l(e, &l).expect("integral");
    let e13 = names.iter().position(|x| x.as_deref() == Some("1_3")).unwrap();
    pick((8, 3), &|e| omega(e) == omega(e13), "8_3", "8_1", &mut names)?;
    pick((4, 7), &|e| omega(e) < 0, "4_3", "4_4", &mut names)?;
    pick((9, 6), &|e| omega(e) < 0 && t.dim(e) == 9, "9_2", "9_3", &mut names)?;
    for (from, to) in [("2_1", "2_2"), ("2_3", "2_4"), ("8_1", "8_2"), ("8_3", "8_4")] {
        let e = names.iter().position(|x| x.as_deref() == Some(from)).unwrap();
        let f = t.tensor_sign_index(e);
        if names[f].is_some() {
            return Err(CharError::Data(format!("{from} tensored with the sign is already named")));
        }
        names[f] = Some(to.into());
    }
    let mut rows: Vec<(String, Vec<Cyc>)> = vec![];
    for (e, name) in names.into_iter().enumerate() {
        rows.push((name.ok_or_else(|| CharError::Data(format!("F4 row {e} unnamed")))?, t.values[e].clone()));
    }
    rows.sort_by_key(|r| {
        let (d, i) = r.0.split_once('_').unwrap();
        (d.parse::<u32>().unwrap(), i.parse::<u32>().unwrap())
    });
    with_labels(classes, rows)
}
