use crate::{ClassError, Classes, ConjClass};
use coxeter::{CoxeterGroup, Element, Kind};
use std::collections::HashSet;

/// `w = t_1 ... t_r` with nested supports `J_0 ⊆ ... ⊆ J_r` (bit masks).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExcellentDecomposition {
    pub w: Element,
    pub reflections: Vec<Element>,
    pub js: Vec<u32>,
}

impl ExcellentDecomposition {
    /// Builds the decomposition with `J_i` the support of `t_1 ... t_i`.
    pub fn from_reflections(w: &CoxeterGroup, ts: Vec<Element>) -> ExcellentDecomposition {
        let mut js = vec![0u32];
        let mut acc = 0u32;
        for &t in &ts {
            acc |= w.support(t);
            js.push(acc);
        }
        let prod = ts.iter().fold(Element::ID, |a, &t| w.mul(a, t));
        ExcellentDecomposition { w: prod, reflections: ts, js }
    }

    /// Paper notation, e.g. `(3)(4)(323)(121)`.
    pub fn notation(&self, w: &CoxeterGroup) -> String {
        self.reflections.iter().map(|&t| format!("({})", w.format_word(&reflection_word(w, t)))).collect()
    }

    pub fn word(&self, w: &CoxeterGroup) -> Vec<u8> {
        self.reflections.iter().flat_map(|&t| reflection_word(w, t)).collect()
    }
}

/// Palindromic reduced word `y s y^{-1}` of a reflection.
pub fn reflection_word(w: &CoxeterGroup, t: Element) -> Vec<u8> {
    let r = w.reflections().iter().find(|r| r.element == t).expect("not a reflection");
    let y = w.word(r.y);
    let mut out = y.to_vec();
    out.push(r.s as u8);
    out.extend(y.iter().rev());
    out
}

fn sorted_reflections(w: &CoxeterGroup) -> Vec<Element> {
    let mut r: Vec<(usize, usize, Element)> =
        w.reflections().iter().map(|r| (w.length(r.element), r.root, r.element)).collect();
    r.sort();
    r.into_iter().map(|x| x.2).collect()
}

/// Peels reflections off the right: `x = (x t) t` with `l(x t) = l(x) - l(t)`,
/// strictly smaller support and `t` distinguished for the smaller support.
fn descend(
    w: &CoxeterGroup,
    refl: &[Element],
    x: Element,
    strict: bool,
    dead: &mut HashSet<Element>,
) -> Option<Vec<Element>> {
    if x == Element::ID {
        return Some(vec![]);
    }
    if dead.contains(&x) {
        return None;
    }
    let jx = w.support(x);
    for &t in refl {
        let y = w.mul(x, t);
        let jy = w.support(y);
        if w.length(y) + w.length(t) != w.length(x) || jy == jx || jy & !jx != 0 {
            continue;
        }
        if strict && !w.is_distinguished(t, jy) {
            continue;
        }
        if let Some(mut chain) = descend(w, refl, y, strict, dead) {
            chain.push(t);
            return Some(chain);
        }
    }
    dead.insert(x);
    None
}

/// Searches `C_min` for a factorisation satisfying the distinguished
/// condition. Some classes (F4(a1), the class `(2,2)` of D4) have none; then
/// the first chain of the pre-excellent recursion is returned, which still
/// has `J_0 < J_1 < ... < J_r` strictly increasing and `t_i` in `W_{J_i}`
/// but not in `W_{J_{i-1}}`. `verify_excellent` tells the two apart.
pub fn find_excellent(w: &CoxeterGroup, c: &ConjClass) -> Result<ExcellentDecomposition, ClassError> {
    let refl = sorted_reflections(w);
    for strict in [true, false] {
        let mut dead = HashSet::new();
        for &x in &c.cmin {
            if let Some(ts) = descend(w, &refl, x, strict, &mut dead) {
                return Ok(ExcellentDecomposition::from_reflections(w, ts));
            }
        }
    }
    Err(ClassError::NoExcellentFound(c.name.clone()))
}

/// Whether some element of `C_min` has a factorisation satisfying both
/// conditions, by exhaustive search.
pub fn has_distinguished_factorisation(w: &CoxeterGroup, c: &ConjClass) -> bool {
    let refl = sorted_reflections(w);
    let mut dead = HashSet::new();
    c.cmin.iter().any(|&x| descend(w, &refl, x, true, &mut dead).is_some())
}

/// Checks conditions (a) and (b) and that `w` has minimal length in its class.
pub fn verify_excellent(w: &CoxeterGroup, classes: &Classes, dec: &ExcellentDecomposition) -> bool {
    let ts = &dec.reflections;
    let r = ts.len();
    let refl: HashSet<Element> = w.reflections().iter().map(|r| r.element).collect();
    if !ts.iter().all(|t| refl.contains(t)) || dec.js.len() != r + 1 || dec.js[0] != 0 {
        return false;
    }
    let prod = ts.iter().fold(Element::ID, |a, &t| w.mul(a, t));
    if prod != dec.w || ts.iter().map(|&t| w.length(t)).sum::<usize>() != w.length(dec.w) {
        return false;
    }
    let c = classes.get(classes.class_of(dec.w));
    if w.length(dec.w) != c.d || r != w.support(dec.w).count_ones() as usize {
        return false;
    }
    (1..=r).all(|i| {
        let (prev, cur) = (dec.js[i - 1], dec.js[i]);
        prev & !cur == 0 && w.support(ts[i - 1]) & !cur == 0 && w.is_distinguished(ts[i - 1], prev)
    })
}

fn b_hat(kind_b: bool, i: usize) -> Vec<usize> {
    // B: s_i ... s_1 t s_1 ... s_i ; D: s_i ... s_2 u s_1 s_2 ... s_i.
    if i == 0 {
        return if kind_b { vec![0] } else { vec![] };
    }
    let mut w: Vec<usize> = (1..=i).rev().collect();
    if kind_b {
        w.push(0);
        w.extend(1..=i);
    } else {
        w.pop();
        w.push(0);
        w.extend(1..=i);
    }
    w
}

fn palindrome(lo: usize, hi: usize) -> Vec<usize> {
    let mut w: Vec<usize> = (lo..=hi).collect();
    w.extend((lo..hi).rev());
    w
}

/// The explicit cuspidal representatives built from negative blocks, with
/// their factorisations into reflections. `alpha` is a partition of the rank.
pub fn excellent_classical(
    w: &CoxeterGroup,
    alpha: &[usize],
) -> Result<(Vec<usize>, ExcellentDecomposition), ClassError> {
    let n = w.rank();
    let kind_b = match w.datum.kind {
        Kind::B(_) => true,
        Kind::D(_) => false,
        _ => return Err(ClassError::BadPartition(alpha.to_vec())),
    };
    let mut parts: Vec<usize> = alpha.iter().copied().filter(|&a| a > 0).collect();
    parts.sort();
    if parts.iter().sum::<usize>() != n || (!kind_b && parts.len() % 2 == 1) {
        return Err(ClassError::BadPartition(alpha.to_vec()));
    }
    let mut starts = vec![0usize];
    for p in &parts {
        starts.push(starts.last().unwrap() + p);
    }
    let mut ts: Vec<Vec<usize>> = vec![];
    if kind_b {
        for (i, &d) in parts.iter().enumerate() {
            let m = starts[i];
            ts.push(b_hat(true, m));
            ts.extend((m + 1..m + d).map(|j| vec![j]));
        }
    } else {
        for i in (0..parts.len()).step_by(2) {
            let (m, a, b) = (starts[i], parts[i], parts[i + 1]);
            if i == 0 {
                ts.extend((2..a + b).rev().map(|j| vec![j]));
                ts.push(vec![0]);
                ts.push(palindrome(1, a));
            } else {
                ts.extend((m + 1..m + a + b).rev().map(|j| vec![j]));
                let h = b_hat(false, m);
                let mut t = h.clone();
                t.extend(palindrome(m + 1, m + a));
                t.extend(h);
                ts.push(t);
            }
        }
    }
    let word: Vec<usize> = ts.iter().flatten().copied().collect();
    let elems: Vec<Element> = ts.iter().map(|t| w.from_word(t)).collect();
    let dec = ExcellentDecomposition::from_reflections(w, elems);
    Ok((word, dec))
}

/// `excellent_classical` followed by `verify_excellent`.
pub fn excellent_classical_checked(
    w: &CoxeterGroup,
    classes: &Classes,
    alpha: &[usize],
) -> Result<(Vec<usize>, ExcellentDecomposition), ClassError> {
    let (word, dec) = excellent_classical(w, alpha)?;
    if !verify_excellent(w, classes, &dec) {
        return Err(ClassError::VerificationFailed(alpha.to_vec()));
    }
    Ok((word, dec))
}
