//! Conjugacy classes of finite Coxeter groups: cyclic shift classes,
//! minimal length elements, cuspidal classes, the classification by pairs
//! `(I, C')` and excellent elements.

pub mod excellent;
pub mod labels;

pub use excellent::{
    excellent_classical, excellent_classical_checked, find_excellent, has_distinguished_factorisation, verify_excellent, ExcellentDecomposition,
};

use coxeter::{CoxeterGroup, Element};
use std::collections::{BTreeSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassError {
    #[error("no excellent element found in class {0}")]
    NoExcellentFound(String),
    #[error("bad partition {0:?}")]
    BadPartition(Vec<usize>),
    #[error("decomposition for {0:?} fails verification")]
    VerificationFailed(Vec<usize>),
}

#[derive(Clone, Debug)]
pub struct ConjClass {
    /// Smallest reduced word over `C_min`, in digit word notation.
    pub name: String,
    /// Type-specific label (cycle type, Carter label, number) or the name.
    pub label: String,
    pub rep: Element,
    pub elements: Vec<Element>,
    pub cmin: Vec<Element>,
    pub d: usize,
    pub cuspidal: bool,
    /// `I = J(rep)` as a mask of generators.
    pub support: u32,
    /// The `W_I`-class of `rep`.
    pub pair_class: Vec<Element>,
}

impl ConjClass {
    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

#[derive(Clone, Debug)]
pub struct Classes {
    pub classes: Vec<ConjClass>,
    class_of: Vec<u32>,
}

/// Closure of `start` under conjugation by the generators in `mask`,
/// optionally keeping the length fixed.
fn orbit(w: &CoxeterGroup, start: Element, mask: u32, same_length: bool) -> Vec<Element> {
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for s in (0..w.rank()).filter(|s| mask >> s & 1 == 1) {
            let y = w.conj_gen(s, x);
            if same_length && w.length(y) != w.length(x) {
                continue;
            }
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

fn full_mask(w: &CoxeterGroup) -> u32 {
    (1u32 << w.rank()) - 1
}

/// The class of `w` under `x -> s x s` moves that keep the length; for `w`
/// of minimal length in its class this is its cyclic shift class.
pub fn cyclic_shift_class(w: &CoxeterGroup, x: Element) -> Vec<Element> {
    orbit(w, x, full_mask(w), true)
}

/// Class of `x` inside the parabolic subgroup `W_I`.
pub fn parabolic_class(w: &CoxeterGroup, mask: u32, x: Element) -> Vec<Element> {
    orbit(w, x, mask, false)
}

/// Name of an element from a word, with `1` for the identity and
/// parentheses around digit words so that `(1)` is not the identity.
pub fn word_name(w: &CoxeterGroup, word: &[u8]) -> String {
    let f = w.format_word(word);
    if !word.is_empty() && f.chars().all(|c| c.is_ascii_digit()) {
        format!("({f})")
    } else {
        f
    }
}

impl Classes {
    pub fn compute(w: &CoxeterGroup) -> Classes {
        let mut class_of = vec![u32::MAX; w.order()];
        let mut raw = vec![];
        for x in w.elements() {
            if class_of[x.idx()] != u32::MAX {
                continue;
            }
            let elements = orbit(w, x, full_mask(w), false);
            for y in &elements {
                class_of[y.idx()] = 0;
            }
            raw.push(elements);
        }
        let mut classes: Vec<ConjClass> = raw
            .into_iter()
            .map(|elements| {
                let d = elements.iter().map(|&y| w.length(y)).min().unwrap();
                let cmin: Vec<Element> = elements.iter().copied().filter(|&y| w.length(y) == d).collect();
                let (rep, word) = cmin.iter().map(|&y| (y, w.min_word(y))).min_by(|a, b| {
                    let la: Vec<&str> = a.1.iter().map(|&s| w.datum.labels[s as usize].as_str()).collect();
                    let lb: Vec<&str> = b.1.iter().map(|&s| w.datum.labels[s as usize].as_str()).collect();
                    la.cmp(&lb)
                }).unwrap();
                let cuspidal = w.rank() > 0 && cmin.iter().all(|&y| w.support(y) == full_mask(w));
                let support = w.support(rep);
                let name = word_name(w, &word);
                ConjClass {
                    label: name.clone(),
                    name,
                    rep,
                    pair_class: parabolic_class(w, support, rep),
                    elements,
                    cmin,
                    d,
                    cuspidal,
                    support,
                }
            })
            .collect();
        classes.sort_by(|a, b| (a.d, a.size(), &a.name).cmp(&(b.d, b.size(), &b.name)));
        for (i, c) in classes.iter().enumerate() {
            for y in &c.elements {
                class_of[y.idx()] = i as u32;
            }
        }
        let mut out = Classes { classes, class_of };
        labels::assign(w, &mut out);
        out
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, x: Element) -> usize {
        self.class_of[x.idx()] as usize
    }

    pub fn get(&self, i: usize) -> &ConjClass {
        &self.classes[i]
    }

    /// Finds a class by name, label or any word for one of its elements.
    pub fn find(&self, w: &CoxeterGroup, key: &str) -> Option<usize> {
        if let Some(i) = self.classes.iter().position(|c| c.name == key || c.label == key) {
            return Some(i);
        }
        w.word_to_element(key).ok().map(|x| self.class_of(x))
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.size()).collect()
    }
}

pub fn is_cuspidal(c: &ConjClass) -> bool {
    c.cuspidal
}

pub fn min_length_elements(c: &ConjClass) -> &[Element] {
    &c.cmin
}

/// The pair `(J(x), W_{J(x)}-class of x)` attached to `x`.
pub fn pair_of(w: &CoxeterGroup, x: Element) -> (u32, Vec<Element>) {
    let m = w.support(x);
    (m, parabolic_class(w, m, x))
}

/// Whether some `y` in `W` conjugates the pair `a` onto the pair `b`:
/// `y I y^{-1} = I'` generator by generator and `y C' y^{-1} = C''`.
pub fn pairs_equivalent(w: &CoxeterGroup, a: &(u32, Vec<Element>), b: &(u32, Vec<Element>)) -> bool {
    if a.0.count_ones() != b.0.count_ones() || a.1.len() != b.1.len() {
        return false;
    }
    let gens: Vec<usize> = (0..w.rank()).filter(|s| a.0 >> s & 1 == 1).collect();
    let target: Vec<Element> = (0..w.rank()).filter(|s| b.0 >> s & 1 == 1).map(|s| w.gen(s)).collect();
    let rep = a.1[0];
    w.elements().any(|y| {
        gens.iter().all(|&s| target.contains(&w.conj(y, w.gen(s)))) && b.1.binary_search(&w.conj(y, rep)).is_ok()
    })
}
