use crate::{fmt_q, parse_q, LaurentPoly, PolyError, RatFun};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::collections::HashSet;

/// Dense matrix of rational functions with labelled rows and columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub entries: Vec<Vec<RatFun>>,
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: Vec<String>,
    cols: Vec<String>,
    entries: Vec<Vec<Value>>,
}

fn unique(labels: &[String]) -> bool {
    let mut seen = HashSet::new();
    labels.iter().all(|l| seen.insert(l))
}

fn terms_json(p: &LaurentPoly) -> Value {
    Value::Array(
        p.terms()
            .iter()
            .map(|(e, c)| {
                let e = if e % 2 == 0 { (e / 2).to_string() } else { format!("{e}/2") };
                Value::Array(vec![Value::String(e), Value::String(fmt_q(c))])
            })
            .collect(),
    )
}

fn terms_from_json(v: &Value) -> Result<LaurentPoly, PolyError> {
    let bad = || PolyError::Parse(format!("bad term list {v}"));
    let mut p = LaurentPoly::zero();
    for t in v.as_array().ok_or_else(bad)? {
        let t = t.as_array().ok_or_else(bad)?;
        let (Some(e), Some(c)) = (t.first().and_then(Value::as_str), t.get(1).and_then(Value::as_str))
        else {
            return Err(bad());
        };
        let e2 = parse_q(e)? * crate::q(2);
        if !e2.is_integer() {
            return Err(bad());
        }
        let e2: i64 = e2.to_integer().try_into().map_err(|_| bad())?;
        p.add_term(e2, parse_q(c)?);
    }
    Ok(p)
}

impl PolyMatrix {
    pub fn new(rows: Vec<String>, cols: Vec<String>, entries: Vec<Vec<RatFun>>) -> Result<Self, PolyError> {
        if entries.len() != rows.len() || entries.iter().any(|r| r.len() != cols.len()) {
            return Err(PolyError::ShapeMismatch(format!(
                "{} row labels, {} column labels",
                rows.len(),
                cols.len()
            )));
        }
        if !unique(&rows) || !unique(&cols) {
            return Err(PolyError::ShapeMismatch("duplicate labels".into()));
        }
        Ok(PolyMatrix { rows, cols, entries })
    }

    pub fn from_fn(rows: &[String], cols: &[String], f: impl Fn(usize, usize) -> RatFun) -> Self {
        let entries = (0..rows.len()).map(|i| (0..cols.len()).map(|j| f(i, j)).collect()).collect();
        PolyMatrix::new(rows.to_vec(), cols.to_vec(), entries).expect("labels must be unique")
    }

    pub fn identity(labels: &[String]) -> Self {
        PolyMatrix::from_fn(labels, labels, |i, j| if i == j { RatFun::one() } else { RatFun::zero() })
    }

    pub fn get(&self, r: &str, c: &str) -> Option<&RatFun> {
        let i = self.rows.iter().position(|x| x == r)?;
        let j = self.cols.iter().position(|x| x == c)?;
        Some(&self.entries[i][j])
    }

    pub fn transpose(&self) -> Self {
        PolyMatrix::from_fn(&self.cols, &self.rows, |i, j| self.entries[j][i].clone())
    }

    pub fn mat_mul(&self, b: &PolyMatrix) -> Result<PolyMatrix, PolyError> {
        if self.cols != b.rows {
            return Err(PolyError::ShapeMismatch(format!("{:?} vs {:?}", self.cols, b.rows)));
        }
        Ok(PolyMatrix::from_fn(&self.rows, &b.cols, |i, j| {
            let mut acc = RatFun::zero();
            for k in 0..self.cols.len() {
                let (x, y) = (&self.entries[i][k], &b.entries[k][j]);
                if !x.is_zero() && !y.is_zero() {
                    acc = &acc + &(x * y);
                }
            }
            acc
        }))
    }

    pub fn map(&self, f: impl Fn(&RatFun) -> RatFun) -> PolyMatrix {
        PolyMatrix::from_fn(&self.rows, &self.cols, |i, j| f(&self.entries[i][j]))
    }

    /// Reorders rows and columns to the given label orders.
    pub fn reindex(&self, rows: &[String], cols: &[String]) -> Result<PolyMatrix, PolyError> {
        let find = |set: &[String], l: &String| {
            set.iter().position(|x| x == l).ok_or_else(|| PolyError::ShapeMismatch(format!("no label {l}")))
        };
        let ri = rows.iter().map(|l| find(&self.rows, l)).collect::<Result<Vec<_>, _>>()?;
        let ci = cols.iter().map(|l| find(&self.cols, l)).collect::<Result<Vec<_>, _>>()?;
        if ri.len() != self.rows.len() || ci.len() != self.cols.len() {
            return Err(PolyError::ShapeMismatch("reindex must be a permutation".into()));
        }
        Ok(PolyMatrix::from_fn(rows, cols, |i, j| self.entries[ri[i]][ci[j]].clone()))
    }

    pub fn to_tsv(&self, var: &str) -> String {
        let mut s = String::new();
        for c in &self.cols {
            s.push('\t');
            s.push_str(c);
        }
        s.push('\n');
        for (l, row) in self.rows.iter().zip(&self.entries) {
            s.push_str(l);
            for x in row {
                s.push('\t');
                s.push_str(&x.display_in(var));
            }
            s.push('\n');
        }
        s
    }

    pub fn from_tsv(src: &str, var: &str) -> Result<PolyMatrix, PolyError> {
        let mut lines = src.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#'));
        let head = lines.next().ok_or_else(|| PolyError::Parse("empty matrix".into()))?;
        let cols: Vec<String> = head.split('\t').skip(1).map(str::to_string).collect();
        let mut rows = vec![];
        let mut entries = vec![];
        for l in lines {
            let mut it = l.split('\t');
            rows.push(it.next().unwrap_or_default().to_string());
            entries.push(it.map(|x| RatFun::parse_in(x, var)).collect::<Result<Vec<_>, _>>()?);
        }
        PolyMatrix::new(rows, cols, entries)
    }

    pub fn to_json(&self) -> Value {
        let entries = self
            .entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| {
                        let mut o = serde_json::Map::new();
                        o.insert("num".into(), terms_json(x.num()));
                        if !x.den().is_one() {
                            o.insert("den".into(), terms_json(x.den()));
                        }
                        Value::Object(o)
                    })
                    .collect()
            })
            .collect();
        serde_json::to_value(MatrixJson { rows: self.rows.clone(), cols: self.cols.clone(), entries })
            .expect("plain data")
    }

    pub fn from_json(v: &Value) -> Result<PolyMatrix, PolyError> {
        let m: MatrixJson =
            serde_json::from_value(v.clone()).map_err(|e| PolyError::Parse(e.to_string()))?;
        let entries = m
            .entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| {
                        let num = terms_from_json(&x["num"])?;
                        let den = match x.get("den") {
                            Some(d) => terms_from_json(d)?,
                            None => LaurentPoly::one(),
                        };
                        RatFun::new(num, den)
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        PolyMatrix::new(m.rows, m.cols, entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("e{i}")).collect()
    }

    #[test]
    fn identity_is_neutral() {
        let l = labels(2);
        let a = PolyMatrix::from_fn(&l, &l, |i, j| RatFun::u_pow((i + 2 * j) as i64));
        assert_eq!(a.mat_mul(&PolyMatrix::identity(&l)).unwrap(), a);
    }

    #[test]
    fn one_by_one() {
        let l = labels(1);
        let a = PolyMatrix::from_fn(&l, &l, |_, _| RatFun::u_pow(1));
        let b = PolyMatrix::from_fn(&l, &l, |_, _| RatFun::parse_in("u+1", "u").unwrap());
        let c = a.mat_mul(&b).unwrap();
        assert_eq!(c.entries[0][0].to_string(), "u^2+u");
    }

    #[test]
    fn shape_mismatch() {
        let a = PolyMatrix::identity(&labels(2));
        let b = PolyMatrix::identity(&labels(3));
        assert!(matches!(a.mat_mul(&b), Err(PolyError::ShapeMismatch(_))));
    }

    #[test]
    fn serialization_round_trips() {
        let l = labels(2);
        let a = PolyMatrix::from_fn(&l, &l, |i, j| {
            RatFun::parse_in(["u^7+u^5", "(1)/(u-1)", "-1/2u^1/2", "0"][2 * i + j], "u").unwrap()
        });
        let tsv = a.to_tsv("u");
        assert_eq!(PolyMatrix::from_tsv(&tsv, "u").unwrap(), a);
        assert_eq!(PolyMatrix::from_tsv(&tsv, "u").unwrap().to_tsv("u"), tsv);
        let js = a.to_json();
        assert_eq!(PolyMatrix::from_json(&js).unwrap(), a);
        assert_eq!(PolyMatrix::from_json(&js).unwrap().to_json().to_string(), js.to_string());
    }
}
