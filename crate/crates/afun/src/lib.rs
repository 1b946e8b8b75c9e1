//! The recursive a-function, the preorder `⪯_L` on `Irr(W)` and its
//! families, computed over all parabolic subgroups `W_J`, `J ⊆ S`.

use coxeter::Element;
use exactpoly::Cyc;
use serde::Serialize;
use std::collections::HashMap;
use wchars::{CharError, ClassFusion, Group, WeightFunction};

/// Data for one parabolic subgroup `W_J`.
struct Level {
    mask: u32,
    group: Group,
    /// Images of the elements of `W_J` in `W`.
    emb: Vec<Element>,
    local: HashMap<Element, Element>,
    weights: WeightFunction,
    /// `ind[K]`: multiplicities `<Ind M, E>` indexed `[M][E]`, for `K ⊊ J`.
    ind: HashMap<u32, Vec<Vec<i64>>>,
    sign: Vec<usize>,
    omega: Vec<i64>,
    a: Vec<i64>,
    a_prime: Vec<i64>,
    /// `rel[E][E']` iff `E ⪯_L E'`.
    rel: Vec<Vec<bool>>,
}

/// ã and `⪯_L` for every `W_J`, with the top group at `mask = S`.
pub struct Analysis {
    levels: HashMap<u32, Level>,
    full: u32,
}

fn members(mask: u32, rank: usize) -> Vec<usize> {
    (0..rank).filter(|s| mask >> s & 1 == 1).collect()
}

fn proper_subsets(mask: u32) -> impl Iterator<Item = u32> {
    (0..mask).filter(move |k| k & !mask == 0)
}

impl Analysis {
    pub fn new(w: &Group, l: &WeightFunction) -> Result<Analysis, CharError> {
        let rank = w.w.rank();
        let full = (1u32 << rank) - 1;
        let mut masks: Vec<u32> = (0..=full).collect();
        masks.sort_by_key(|m| m.count_ones());
        let mut levels: HashMap<u32, Level> = HashMap::new();
        for &mask in &masks {
            let j = members(mask, rank);
            let (group, emb) = if mask == full {
                (w.clone(), w.w.elements().collect())
            } else {
                let (sub, emb) = w.w.parabolic(&j);
                (Group::from_coxeter(sub)?, emb)
            };
            let local = emb.iter().copied().zip(group.w.elements()).collect();
            let weights = l.restrict(&j);
            let sign = (0..group.table.len()).map(|e| group.table.tensor_sign_index(e)).collect();
            let omega = (0..group.table.len()).map(|e| group.omega_l(e, &weights)).collect::<Result<_, _>>()?;
            let mut lev = Level {
                mask,
                group,
                emb,
                local,
                weights,
                ind: HashMap::new(),
                sign,
                omega,
                a: vec![],
                a_prime: vec![],
                rel: vec![],
            };
            for k in proper_subsets(mask) {
                let m = induction_matrix(&lev, &levels[&k])?;
                lev.ind.insert(k, m);
            }
            compute_a(&mut lev, &levels);
            compute_rel(&mut lev, &levels);
            levels.insert(mask, lev);
        }
        Ok(Analysis { levels, full })
    }

    fn top(&self) -> &Level {
        &self.levels[&self.full]
    }

    pub fn labels(&self) -> &[String] {
        &self.top().group.table.labels
    }

    pub fn weights(&self) -> &WeightFunction {
        &self.top().weights
    }

    pub fn a_tilde(&self) -> AFunction {
        AFunction { labels: self.labels().to_vec(), values: self.top().a.clone(), weights: self.weights().values.clone() }
    }

    pub fn a_of(&self, label: &str) -> Option<i64> {
        Some(self.top().a[self.top().group.table.index(label)?])
    }

    pub fn preceq(&self, e: &str, f: &str) -> Option<bool> {
        let t = &self.top().group.table;
        Some(self.top().rel[t.index(e)?][t.index(f)?])
    }

    /// Blocks of `∼_L`, sorted by decreasing ã, then by first member.
    pub fn families(&self) -> FamilyPartition {
        let top = self.top();
        let labels = self.labels();
        let n = labels.len();
        let mut block_of = vec![usize::MAX; n];
        let mut blocks: Vec<Vec<usize>> = vec![];
        for e in 0..n {
            if block_of[e] != usize::MAX {
                continue;
            }
            let b: Vec<usize> = (0..n).filter(|&f| top.rel[e][f] && top.rel[f][e]).collect();
            for &f in &b {
                block_of[f] = blocks.len();
            }
            blocks.push(b);
        }
        let mut order: Vec<usize> = (0..blocks.len()).collect();
        order.sort_by_key(|&i| (-top.a[blocks[i][0]], blocks[i][0]));
        let blocks: Vec<Vec<usize>> = order.iter().map(|&i| blocks[i].clone()).collect();
        let r = blocks.len();
        let below: Vec<Vec<bool>> =
            (0..r).map(|i| (0..r).map(|j| top.rel[blocks[i][0]][blocks[j][0]]).collect()).collect();
        FamilyPartition {
            blocks: blocks.iter().map(|b| b.iter().map(|&e| labels[e].clone()).collect()).collect(),
            a_values: blocks.iter().map(|b| top.a[b[0]]).collect(),
            order: below,
        }
    }

    /// Checks (A1), (A2), (A3′) and (A4) at the top level, plus
    /// ã constant on families and monotony of ã along `⪯_L`.
    pub fn check_axioms(&self) -> AxiomReport {
        let top = self.top();
        let t = &top.group.table;
        let name = |e: usize| t.labels[e].clone();
        let mut rep = AxiomReport::default();
        let mut a3_witness = vec![false; t.len()];
        for (&k, m) in &top.ind {
            let sub = &self.levels[&k];
            for (mi, row) in m.iter().enumerate() {
                let mut a2 = false;
                for (e, &x) in row.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    if sub.a[mi] > top.a[e] {
                        rep.violations.push(format!("A1: {} of W_{k:b} has larger ã than {}", sub.group.table.labels[mi], name(e)));
                    }
                    if sub.a[mi] == top.a[e] {
                        a2 = true;
                        a3_witness[e] = true;
                    }
                }
                if !a2 {
                    rep.violations.push(format!("A2: {} of W_{k:b}", sub.group.table.labels[mi]));
                }
            }
        }
        for e in 0..t.len() {
            if top.omega[e] >= 0 && !a3_witness[e] {
                rep.violations.push(format!("A3': {}", name(e)));
            }
            if top.a[top.sign[e]] - top.a[e] != top.omega[e] {
                rep.violations.push(format!("A4: {}", name(e)));
            }
            for f in 0..t.len() {
                if top.rel[e][f] && top.a[f] > top.a[e] {
                    rep.violations.push(format!("monotony: {} ⪯ {}", name(e), name(f)));
                }
            }
        }
        if t.index_of_trivial().map(|e| top.a[e]) != Some(0) || top.a.iter().any(|&x| x < 0) {
            rep.violations.push("A0: ã(1_W) = 0 and ã ≥ 0".into());
        }
        rep.checked = vec!["A0", "A1", "A2", "A3'", "A4", "monotony"];
        rep
    }
}

trait Trivial {
    fn index_of_trivial(&self) -> Option<usize>;
}

impl Trivial for wchars::CharTable {
    fn index_of_trivial(&self) -> Option<usize> {
        self.values.iter().position(|r| r.iter().all(|x| *x == Cyc::one()))
    }
}

fn induction_matrix(big: &Level, small: &Level) -> Result<Vec<Vec<i64>>, CharError> {
    let map = small
        .group
        .classes
        .classes
        .iter()
        .map(|c| big.group.classes.class_of(big.local[&small.emb[c.rep.idx()]]))
        .collect();
    let fusion = ClassFusion { map };
    small
        .group
        .table
        .values
        .iter()
        .map(|m| big.group.table.decompose(&big.group.induce(&small.group, &fusion, m)))
        .collect()
}

fn compute_a(lev: &mut Level, levels: &HashMap<u32, Level>) {
    let n = lev.group.table.len();
    if lev.mask == 0 {
        lev.a = vec![0; n];
        lev.a_prime = vec![0; n];
        return;
    }
    let mut ap = vec![0i64; n];
    for (k, m) in &lev.ind {
        let sub = &levels[k];
        for (mi, row) in m.iter().enumerate() {
            for (e, &x) in row.iter().enumerate() {
                if x != 0 {
                    ap[e] = ap[e].max(sub.a[mi]);
                }
            }
        }
    }
    lev.a = (0..n)
        .map(|e| {
            let d = ap[lev.sign[e]] - ap[e];
            if d <= lev.omega[e] {
                ap[e]
            } else {
                ap[lev.sign[e]] - lev.omega[e]
            }
        })
        .collect();
    lev.a_prime = ap;
}

fn compute_rel(lev: &mut Level, levels: &HashMap<u32, Level>) {
    let n = lev.group.table.len();
    let mut rel = vec![vec![false; n]; n];
    for (e, row) in rel.iter_mut().enumerate() {
        row[e] = true;
    }
    let a = &lev.a;
    let sign = &lev.sign;
    for (k, m) in &lev.ind {
        let sub = &levels[k];
        let ups: Vec<Vec<usize>> = m.iter().map(|row| (0..n).filter(|&e| row[e] != 0).collect()).collect();
        for (m1, r1) in sub.rel.iter().enumerate() {
            for (m2, &le) in r1.iter().enumerate() {
                if !le {
                    continue;
                }
                for &x in &ups[m1] {
                    for &y in &ups[m2] {
                        if a[y] == sub.a[m2] {
                            rel[x][y] = true;
                        }
                    }
                }
                // M' ↑ Y ⊗ sgn, M'' ↑ X ⊗ sgn with ã(X ⊗ sgn) = ã(M'').
                for &ys in &ups[m1] {
                    for &xs in &ups[m2] {
                        if a[xs] == sub.a[m2] {
                            rel[sign[xs]][sign[ys]] = true;
                        }
                    }
                }
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            if rel[i][k] {
                for j in 0..n {
                    if rel[k][j] {
                        rel[i][j] = true;
                    }
                }
            }
        }
    }
    lev.rel = rel;
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AFunction {
    pub labels: Vec<String>,
    pub values: Vec<i64>,
    pub weights: Vec<i64>,
}

impl AFunction {
    pub fn get(&self, label: &str) -> Option<i64> {
        Some(self.values[self.labels.iter().position(|l| l == label)?])
    }
}

/// Families with their ã values and the order `order[i][j]` iff block `i ⪯_L` block `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyPartition {
    pub blocks: Vec<Vec<String>>,
    pub a_values: Vec<i64>,
    pub order: Vec<Vec<bool>>,
}

impl FamilyPartition {
    pub fn block_of(&self, label: &str) -> Option<usize> {
        self.blocks.iter().position(|b| b.iter().any(|l| l == label))
    }

    /// Covering pairs `(i, j)` of the order: `i ⪯ j`, nothing strictly between.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let r = self.blocks.len();
        let mut out = vec![];
        for i in 0..r {
            for j in 0..r {
                if i != j && self.order[i][j] && !(0..r).any(|k| k != i && k != j && self.order[i][k] && self.order[k][j]) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Edges named by the first member of each block.
    pub fn hasse_labels(&self) -> Vec<(String, String)> {
        self.hasse_edges().into_iter().map(|(i, j)| (self.blocks[i][0].clone(), self.blocks[j][0].clone())).collect()
    }

    pub fn is_partial_order(&self) -> bool {
        let r = self.blocks.len();
        (0..r).all(|i| self.order[i][i])
            && (0..r).all(|i| (0..r).all(|j| i == j || !(self.order[i][j] && self.order[j][i])))
            && (0..r).all(|i| (0..r).all(|j| (0..r).all(|k| !(self.order[i][j] && self.order[j][k]) || self.order[i][k])))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub checked: Vec<&'static str>,
    pub violations: Vec<String>,
}

impl AxiomReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn a_tilde(w: &Group, l: &WeightFunction) -> Result<AFunction, CharError> {
    Ok(Analysis::new(w, l)?.a_tilde())
}

pub fn families(w: &Group, l: &WeightFunction) -> Result<FamilyPartition, CharError> {
    Ok(Analysis::new(w, l)?.families())
}

pub fn check_axioms(w: &Group, l: &WeightFunction) -> Result<AxiomReport, CharError> {
    Ok(Analysis::new(w, l)?.check_axioms())
}
