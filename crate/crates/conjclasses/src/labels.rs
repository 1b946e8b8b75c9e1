//! Type-specific class labels. Carter labels for F4 are fixed by `d_C`;
//! the two cuspidal classes with `d_C = 10` are told apart by the orbits of
//! a representative on the long roots (all of size 6 for D4).

use crate::Classes;
use coxeter::{CoxeterGroup, Element, Kind};
use exactpoly::cyc::cyclotomic;
use exactpoly::UPoly;

pub fn assign(w: &CoxeterGroup, c: &mut Classes) {
    match w.datum.kind {
        Kind::A(_) => {
            for i in 0..c.len() {
                let p = cycle_type(w, c.classes[i].rep);
                c.classes[i].label = format!("{p:?}").replace(' ', "");
            }
        }
        Kind::B(_) => {
            for i in 0..c.len() {
                let (a, b) = signed_cycle_type(w, c.classes[i].rep);
                let f = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<String>();
                c.classes[i].label = format!("{}.{}", f(&a), f(&b));
            }
        }
        Kind::H3 | Kind::H4 => {
            for (i, cl) in c.classes.iter_mut().enumerate() {
                cl.label = (i + 1).to_string();
            }
        }
        Kind::F4 => {
            for cl in c.classes.iter_mut().filter(|cl| cl.cuspidal) {
                cl.label = match cl.d {
                    4 => "F4",
                    6 => "B4",
                    8 => "F4(a1)",
                    10 if long_orbits(w, cl.rep).iter().all(|&k| k == 6) => "D4",
                    10 => "C3+A1",
                    12 => "D4(a1)",
                    14 => "A3+~A1",
                    16 => "A2+~A2",
                    24 => "4A1",
                    _ => unreachable!("unexpected cuspidal length in F4"),
                }
                .into();
            }
        }
        _ => {}
    }
}

/// Cycle type of an element of `S_{n+1}` read off `det(u - w)`:
/// `(u - 1) det(u - w) = prod (u^{l_i} - 1)`.
pub fn cycle_type(w: &CoxeterGroup, x: Element) -> Vec<usize> {
    let cp = w.charpoly(x).to_laurent().expect("rational characteristic polynomial");
    let p = UPoly::new(cp.to_u_coeffs().expect("polynomial"));
    let p = p.mul(&UPoly::from_ints(&[-1, 1]));
    let n = w.rank() + 1;
    let mult: Vec<usize> = (0..=n)
        .map(|d| {
            if d == 0 {
                return 0;
            }
            let phi = cyclotomic(d as u32);
            let mut q = p.clone();
            let mut k = 0;
            loop {
                let (quo, r) = q.divrem(&phi).unwrap();
                if !r.is_zero() {
                    break k;
                }
                q = quo;
                k += 1;
            }
        })
        .collect();
    let mut count = vec![0usize; n + 1];
    for k in (1..=n).rev() {
        let above: usize = (2 * k..=n).step_by(k).map(|j| count[j]).sum();
        count[k] = mult[k] - above;
    }
    let mut parts = vec![];
    for k in (1..=n).rev() {
        parts.extend(std::iter::repeat(k).take(count[k]));
    }
    parts
}

fn orbit_of_root(w: &CoxeterGroup, root: usize) -> Vec<usize> {
    let mut seen = vec![root];
    let mut k = 0;
    while k < seen.len() {
        for s in 0..w.rank() {
            let r = w.generator_perm(s)[seen[k]] as usize;
            if !seen.contains(&r) {
                seen.push(r);
            }
        }
        k += 1;
    }
    seen
}

fn cycles_on(w: &CoxeterGroup, x: Element, set: &[usize]) -> Vec<Vec<usize>> {
    let p = w.perm(x);
    let mut done = vec![false; p.len()];
    let mut out = vec![];
    for &r in set {
        if done[r] {
            continue;
        }
        let mut cyc = vec![];
        let mut a = r;
        while !done[a] {
            done[a] = true;
            cyc.push(a);
            a = p[a] as usize;
        }
        out.push(cyc);
    }
    out
}

/// Signed cycle type `(positive, negative)` of an element of `W(B_n)`, from
/// its action on the short roots `+-e_i`.
pub fn signed_cycle_type(w: &CoxeterGroup, x: Element) -> (Vec<usize>, Vec<usize>) {
    let npos = w.num_pos_roots();
    let short = orbit_of_root(w, 0);
    let neg = |r: usize| if r < npos { r + npos } else { r - npos };
    let (mut a, mut b) = (vec![], vec![]);
    for cyc in cycles_on(w, x, &short) {
        if cyc.contains(&neg(cyc[0])) {
            b.push(cyc.len() / 2);
        } else {
            a.push(cyc.len());
        }
    }
    // Each positive cycle shows up twice, once for +e_i and once for -e_i.
    a.sort_by(|x, y| y.cmp(x));
    let a: Vec<usize> = a.chunks(2).map(|c| c[0]).collect();
    b.sort_by(|x, y| y.cmp(x));
    (a, b)
}

fn long_orbits(w: &CoxeterGroup, x: Element) -> Vec<usize> {
    let long = orbit_of_root(w, 0);
    cycles_on(w, x, &long).iter().map(|c| c.len()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_types_in_s4() {
        let w = CoxeterGroup::from_name("A3").unwrap();
        assert_eq!(cycle_type(&w, Element::ID), [1, 1, 1, 1]);
        assert_eq!(cycle_type(&w, w.word_to_element("123").unwrap()), [4]);
        assert_eq!(cycle_type(&w, w.word_to_element("13").unwrap()), [2, 2]);
        assert_eq!(cycle_type(&w, w.word_to_element("12").unwrap()), [3, 1]);
    }

    #[test]
    fn b2_signed_types() {
        let w = CoxeterGroup::from_name("B2").unwrap();
        let c = Classes::compute(&w);
        let l: Vec<&str> = c.classes.iter().map(|c| c.label.as_str()).collect();
        assert_eq!(l, ["11.", "2.", "1.1", ".2", ".11"]);
    }

    #[test]
    fn f4_carter_labels() {
        let w = CoxeterGroup::from_name("F4").unwrap();
        let c = Classes::compute(&w);
        let mut l: Vec<(usize, String)> =
            c.classes.iter().filter(|c| c.cuspidal).map(|c| (c.d, c.label.clone())).collect();
        l.sort();
        let want = ["F4", "B4", "F4(a1)", "C3+A1", "D4", "D4(a1)", "A3+~A1", "A2+~A2", "4A1"];
        let mut w2: Vec<&str> = want.to_vec();
        w2.sort_by_key(|x| l.iter().find(|(_, y)| y == x).map(|p| p.0));
        assert_eq!(l.len(), 9);
        let got: Vec<&str> = l.iter().map(|p| p.1.as_str()).collect();
        let mut g2 = got.clone();
        g2.sort();
        let mut w3 = want.to_vec();
        w3.sort();
        assert_eq!(g2, w3);
    }
}
