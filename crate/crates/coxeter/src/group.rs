use crate::datum::{CoxeterDatum, Kind};
use crate::zphi::Zphi;
use crate::CoxeterError;
use exactpoly::linalg::{self, Mat};
use exactpoly::{Cyc, CycPoly};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::hash::Hash;

/// Groups larger than this are refused.
pub const MAX_ORDER: u64 = 14_400;

/// Index of an element in [`CoxeterGroup`]. Indices are assigned in
/// breadth-first order, so they are sorted by length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(pub u32);

impl Element {
    pub const ID: Element = Element(0);

    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug)]
pub struct Reflection {
    pub element: Element,
    /// Index of the positive root `alpha` with `t = s_alpha`.
    pub root: usize,
    /// `t = y s y^{-1}` with `l(t) = 2 l(y) + 1`.
    pub y: Element,
    pub s: usize,
}

/// A finite Coxeter group realised as permutations of its root system,
/// with every element enumerated.
#[derive(Clone, Debug)]
pub struct CoxeterGroup {
    pub datum: CoxeterDatum,
    npos: usize,
    root_coords: Vec<Vec<Cyc>>,
    root_zphi: Option<Vec<Vec<Zphi>>>,
    gen_perms: Vec<Vec<u16>>,
    gen_mats: Vec<Mat<Cyc>>,
    perms: Vec<Vec<u16>>,
    index: HashMap<Vec<u16>, u32>,
    words: Vec<Vec<u8>>,
    lengths: Vec<u16>,
    right: Vec<Vec<u32>>,
    left: Vec<Vec<u32>>,
    inv: Vec<u32>,
    support: Vec<u32>,
    w0: Element,
    reflections: Vec<Reflection>,
}

struct Roots {
    npos: usize,
    gen_perms: Vec<Vec<u16>>,
    /// For each non-simple positive root: (earlier root, generator) with
    /// `root = s(earlier)`.
    parent: Vec<Option<(usize, usize)>>,
    coords: Vec<Vec<Cyc>>,
    zphi: Option<Vec<Vec<Zphi>>>,
}

/// Breadth-first closure of the simple roots under the generators. `reflect`
/// acts on root keys, `positive` decides the sign of a key and `neg` negates.
fn close_roots<K: Clone + Eq + Hash>(
    simple: Vec<K>,
    reflect: impl Fn(usize, &K) -> K,
    positive: impl Fn(&K) -> bool,
    neg: impl Fn(&K) -> K,
    mats: &[Mat<Cyc>],
) -> (Roots, Vec<K>) {
    let n = simple.len();
    let mut keys = simple.clone();
    let mut coords: Vec<Vec<Cyc>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { Cyc::one() } else { Cyc::zero() }).collect()).collect();
    let mut parent = vec![None; n];
    let mut pos: HashMap<K, usize> = keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
    let mut k = 0;
    while k < keys.len() {
        for j in 0..n {
            let r = reflect(j, &keys[k]);
            if positive(&r) && !pos.contains_key(&r) {
                pos.insert(r.clone(), keys.len());
                let col: Mat<Cyc> = coords[k].iter().map(|x| vec![x.clone()]).collect();
                coords.push(linalg::mul(&mats[j], &col).into_iter().map(|mut r| r.remove(0)).collect());
                keys.push(r);
                parent.push(Some((k, j)));
            }
        }
        k += 1;
    }
    let npos = keys.len();
    for i in 0..npos {
        let nk = neg(&keys[i]);
        pos.insert(nk.clone(), npos + i);
        keys.push(nk);
        coords.push(coords[i].iter().map(|x| -x).collect());
    }
    let gen_perms = (0..n).map(|j| keys.iter().map(|key| pos[&reflect(j, key)] as u16).collect()).collect();
    (Roots { npos, gen_perms, parent, coords, zphi: None }, keys)
}

fn build_roots(datum: &CoxeterDatum) -> Roots {
    let n = datum.rank();
    let mats = datum.generator_matrices();
    match (&datum.cartan, &datum.kind) {
        (Some(c), _) => {
            let simple: Vec<Vec<Zphi>> =
                (0..n).map(|i| (0..n).map(|j| Zphi::int((i == j) as i64)).collect()).collect();
            let reflect = |j: usize, v: &Vec<Zphi>| {
                let mut k = Zphi::ZERO;
                for (i, x) in v.iter().enumerate() {
                    k = k + c[j][i] * *x;
                }
                let mut w = v.clone();
                w[j] = w[j] - k;
                w
            };
            let positive = |v: &Vec<Zphi>| {
                v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.sign() == Ordering::Greater)
            };
            let neg = |v: &Vec<Zphi>| v.iter().map(|x| -*x).collect::<Vec<_>>();
            let (mut r, keys) = close_roots(simple, reflect, positive, neg, &mats);
            r.zphi = Some(keys);
            r
        }
        (None, Kind::I2(m)) => {
            let m = *m as i64;
            // Roots are unit vectors at angles j*pi/m; alpha_1 at 0 and
            // alpha_2 at (m-1)pi/m.
            let reflect = move |j: usize, a: &i64| {
                let r = if j == 0 { 0 } else { m - 1 };
                (2 * r + m - a).rem_euclid(2 * m)
            };
            let (r, _) = close_roots(vec![0, m - 1], reflect, move |a| *a < m, move |a| (a + m) % (2 * m), &mats);
            r
        }
        _ => unreachable!(),
    }
}

fn compose(a: &[u16], b: &[u16]) -> Vec<u16> {
    b.iter().map(|&i| a[i as usize]).collect()
}

impl CoxeterGroup {
    pub fn new(datum: CoxeterDatum) -> Result<CoxeterGroup, CoxeterError> {
        if datum.order() > MAX_ORDER {
            return Err(CoxeterError::RankTooLarge(datum.name()));
        }
        let n = datum.rank();
        let roots = build_roots(&datum);
        let nroots = 2 * roots.npos;
        let id: Vec<u16> = (0..nroots as u16).collect();
        let mut perms = vec![id.clone()];
        let mut index = HashMap::from([(id, 0u32)]);
        let mut words: Vec<Vec<u8>> = vec![vec![]];
        let mut lengths = vec![0u16];
        let mut right: Vec<Vec<u32>> = vec![vec![]; n];
        let mut k = 0;
        while k < perms.len() {
            for s in 0..n {
                let p = compose(&perms[k], &roots.gen_perms[s]);
                let next = perms.len() as u32;
                let y = *index.entry(p.clone()).or_insert(next);
                if y == next {
                    perms.push(p);
                    let mut w = words[k].clone();
                    w.push(s as u8);
                    words.push(w);
                    lengths.push(lengths[k] + 1);
                }
                right[s].push(y);
            }
            k += 1;
        }
        let left = (0..n)
            .map(|s| perms.iter().map(|p| index[&compose(&roots.gen_perms[s], p)]).collect())
            .collect();
        let inv = perms
            .iter()
            .map(|p| {
                let mut q = vec![0u16; p.len()];
                for (i, &j) in p.iter().enumerate() {
                    q[j as usize] = i as u16;
                }
                index[&q]
            })
            .collect();
        let support = words.iter().map(|w| w.iter().fold(0u32, |m, &s| m | (1 << s))).collect();
        let w0 = Element((perms.len() - 1) as u32);
        let mut g = CoxeterGroup {
            gen_mats: datum.generator_matrices(),
            datum,
            npos: roots.npos,
            root_coords: roots.coords,
            root_zphi: roots.zphi,
            gen_perms: roots.gen_perms,
            perms,
            index,
            words,
            lengths,
            right,
            left,
            inv,
            support,
            w0,
            reflections: vec![],
        };
        let mut refl: Vec<Reflection> = vec![];
        for (root, par) in roots.parent.iter().enumerate() {
            let r = match par {
                None => Reflection { element: g.gen(root), root, y: Element::ID, s: root },
                Some((prev, j)) => {
                    let p = &refl[*prev];
                    let sj = g.gen(*j);
                    let element = g.mul(g.mul(sj, p.element), sj);
                    let y = g.mul(sj, p.y);
                    debug_assert_eq!(g.length(element), g.length(p.element) + 2);
                    Reflection { element, root, y, s: p.s }
                }
            };
            refl.push(r);
        }
        g.reflections = refl;
        Ok(g)
    }

    pub fn from_name(name: &str) -> Result<CoxeterGroup, CoxeterError> {
        CoxeterGroup::new(CoxeterDatum::parse(name)?)
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn num_pos_roots(&self) -> usize {
        self.npos
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        (0..self.perms.len() as u32).map(Element)
    }

    pub fn gen(&self, s: usize) -> Element {
        Element(self.right[s][0])
    }

    pub fn w0(&self) -> Element {
        self.w0
    }

    pub fn perm(&self, x: Element) -> &[u16] {
        &self.perms[x.idx()]
    }

    pub fn element_of_perm(&self, p: &[u16]) -> Option<Element> {
        self.index.get(p).map(|&i| Element(i))
    }

    pub fn generator_perm(&self, s: usize) -> &[u16] {
        &self.gen_perms[s]
    }

    pub fn root_coords(&self, i: usize) -> &[Cyc] {
        &self.root_coords[i]
    }

    pub fn root_zphi(&self, i: usize) -> Option<&[Zphi]> {
        self.root_zphi.as_ref().map(|r| r[i].as_slice())
    }

    pub fn length(&self, x: Element) -> usize {
        self.lengths[x.idx()] as usize
    }

    /// Recount of the length straight from the root permutation.
    pub fn inversions(&self, x: Element) -> usize {
        self.perms[x.idx()][..self.npos].iter().filter(|&&i| i as usize >= self.npos).count()
    }

    /// A reduced word (generator indices).
    pub fn word(&self, x: Element) -> &[u8] {
        &self.words[x.idx()]
    }

    /// Generators occurring in any reduced word, as a bit mask.
    pub fn support(&self, x: Element) -> u32 {
        self.support[x.idx()]
    }

    pub fn mul_gen(&self, x: Element, s: usize) -> Element {
        Element(self.right[s][x.idx()])
    }

    pub fn gen_mul(&self, s: usize, x: Element) -> Element {
        Element(self.left[s][x.idx()])
    }

    pub fn conj_gen(&self, s: usize, x: Element) -> Element {
        self.gen_mul(s, self.mul_gen(x, s))
    }

    pub fn mul(&self, x: Element, y: Element) -> Element {
        self.word(y).iter().fold(x, |acc, &s| self.mul_gen(acc, s as usize))
    }

    pub fn inverse(&self, x: Element) -> Element {
        Element(self.inv[x.idx()])
    }

    /// `x y x^{-1}`
    pub fn conj(&self, x: Element, y: Element) -> Element {
        self.mul(self.mul(x, y), self.inverse(x))
    }

    pub fn from_word(&self, w: &[usize]) -> Element {
        w.iter().fold(Element::ID, |acc, &s| self.mul_gen(acc, s))
    }

    /// Splits a word written with labels or digits. Accepts `stst`,
    /// `s1 t s1`, `(3)(4)(323)` and `3 4 3 2 3`.
    pub fn parse_word(&self, src: &str) -> Result<Vec<usize>, CoxeterError> {
        // A bare `1` is the identity; write `(1)` or `s1` for a generator.
        if src.trim() == "1" || src.trim().is_empty() {
            return Ok(vec![]);
        }
        let cleaned: String = src.chars().map(|c| if "()[],.*".contains(c) { ' ' } else { c }).collect();
        let mut out = vec![];
        let labels = &self.datum.labels;
        for tok in cleaned.split_whitespace() {
            let mut rest = tok;
            while !rest.is_empty() {
                let label = labels
                    .iter()
                    .enumerate()
                    .filter(|(_, l)| rest.starts_with(l.as_str()))
                    .max_by_key(|(_, l)| l.len());
                if let Some((i, l)) = label {
                    out.push(i);
                    rest = &rest[l.len()..];
                    continue;
                }
                let c = rest.chars().next().unwrap();
                match c.to_digit(10) {
                    Some(d) if d >= 1 && (d as usize) <= labels.len() => {
                        out.push(d as usize - 1);
                        rest = &rest[1..];
                    }
                    _ => return Err(CoxeterError::BadLabel(rest.to_string())),
                }
            }
        }
        Ok(out)
    }

    pub fn word_to_element(&self, src: &str) -> Result<Element, CoxeterError> {
        Ok(self.from_word(&self.parse_word(src)?))
    }

    /// Formats a word in digit notation: digits for `s1..sn` labels,
    /// concatenated letters for one-letter labels, spaces otherwise.
    pub fn format_word(&self, w: &[u8]) -> String {
        let labels = &self.datum.labels;
        if w.is_empty() {
            return "1".into();
        }
        let numeric = labels.iter().enumerate().all(|(i, l)| *l == format!("s{}", i + 1)) && labels.len() < 10;
        if numeric {
            return w.iter().map(|&s| (s + 1).to_string()).collect();
        }
        if labels.iter().all(|l| l.len() == 1) {
            return w.iter().map(|&s| labels[s as usize].as_str()).collect();
        }
        w.iter().map(|&s| labels[s as usize].as_str()).collect::<Vec<_>>().join(" ")
    }

    /// The lexicographically smallest reduced word, comparing labels as
    /// strings.
    pub fn min_word(&self, x: Element) -> Vec<u8> {
        let mut order: Vec<usize> = (0..self.rank()).collect();
        order.sort_by(|a, b| self.datum.labels[*a].cmp(&self.datum.labels[*b]));
        let mut out = vec![];
        let mut x = x;
        while x != Element::ID {
            let s = *order.iter().find(|&&s| self.is_left_descent(x, s)).unwrap();
            out.push(s as u8);
            x = self.gen_mul(s, x);
        }
        out
    }

    pub fn is_left_descent(&self, x: Element, s: usize) -> bool {
        self.length(self.gen_mul(s, x)) < self.length(x)
    }

    pub fn is_right_descent(&self, x: Element, s: usize) -> bool {
        self.length(self.mul_gen(x, s)) < self.length(x)
    }

    pub fn reflections(&self) -> &[Reflection] {
        &self.reflections
    }

    pub fn reflection_of_root(&self, root: usize) -> &Reflection {
        &self.reflections[root]
    }

    /// `l(s t) > l(t)` for every `s` in the mask `j`.
    pub fn is_distinguished(&self, t: Element, j: u32) -> bool {
        (0..self.rank()).filter(|s| j >> s & 1 == 1).all(|s| !self.is_left_descent(t, s))
    }

    /// Matrix on the reflection representation in the simple-root basis.
    pub fn reflection_matrix(&self, x: Element) -> Mat<Cyc> {
        let n = self.rank();
        self.word(x).iter().fold(linalg::identity(n), |m, &s| linalg::mul(&m, &self.gen_mats[s as usize]))
    }

    /// `det(u - x)` on the reflection representation.
    pub fn charpoly(&self, x: Element) -> CycPoly {
        CycPoly::new(linalg::charpoly(&self.reflection_matrix(x)))
    }

    /// `(-1)^{l(x)}`
    pub fn sign(&self, x: Element) -> i64 {
        if self.length(x) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// The parabolic subgroup generated by `j`, with the images of its
    /// elements in `self`.
    pub fn parabolic(&self, j: &[usize]) -> (CoxeterGroup, Vec<Element>) {
        let sub = CoxeterGroup::new(self.datum.restrict(j)).expect("parabolic of a supported group");
        let emb = sub.elements().map(|x| self.from_word(&sub.word(x).iter().map(|&s| j[s as usize]).collect::<Vec<_>>())).collect();
        (sub, emb)
    }

    /// Elements whose support lies in the mask `j`.
    pub fn parabolic_elements(&self, j: u32) -> Vec<Element> {
        self.elements().filter(|&x| self.support(x) & !j == 0).collect()
    }

    pub fn label_mask(&self, labels: &[&str]) -> Result<u32, CoxeterError> {
        let mut m = 0;
        for l in labels {
            let i = self
                .datum
                .labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| CoxeterError::BadLabel(l.to_string()))?;
            m |= 1 << i;
        }
        Ok(m)
    }
}
