use coxeter::Element;
use exactpoly::{Cyc, CycPoly, LaurentPoly};
use hecke::*;
use proptest::prelude::*;
use wchars::Group;

const SUPPORTED: [&str; 9] = ["A1", "A2", "A3", "B2", "G2", "I2(5)", "I2(7)", "I2(8)", "I2(12)"];

fn lp(s: &str) -> CycPoly {
    CycPoly::from_laurent(&LaurentPoly::parse_in(s, "u").unwrap()).unwrap()
}

fn u_pow(k: usize) -> CycPoly {
    CycPoly::from_laurent(&LaurentPoly::u_pow(k as i64)).unwrap()
}

#[test]
fn b2_table_entries() {
    let g = Group::new("B2").unwrap();
    let t = hecke_char_table(&g).unwrap();
    assert_eq!(t.labels, ["1_W", "σ", "sgn1", "sgn2", "sgn"]);
    assert_eq!(t.classes, ["1", "t", "stst", "s", "st"]);
    assert_eq!(t.get("σ", "stst"), Some(&lp("-2u^2")));
    assert_eq!(t.get("σ", "st"), Some(&lp("0")));
    assert_eq!(t.get("sgn1", "s"), Some(&lp("u")));
    let sgn: Vec<CycPoly> = ["1", "-1", "1", "-1", "1"].iter().map(|s| lp(s)).collect();
    assert_eq!(t.values[4], sgn);
}

#[test]
fn b2_bundled_matches_closed_form() {
    let g = Group::new("B2").unwrap();
    let t = hecke_char_table(&g).unwrap();
    let model = trace_model(&g).unwrap();
    for (r, label) in t.labels.iter().enumerate() {
        let i = g.table.index(label).unwrap();
        for (c, &w) in t.reps.iter().enumerate() {
            assert_eq!(model(i, w), t.values[r][c], "{label} at {}", t.classes[c]);
        }
    }
}

#[test]
fn specialises_to_character_table() {
    for n in SUPPORTED {
        let g = Group::new(n).unwrap();
        let t = hecke_char_table(&g).unwrap();
        let at_one = t.specialize_at_one();
        for (r, label) in t.labels.iter().enumerate() {
            let i = g.table.index(label).unwrap();
            for (c, &w) in t.reps.iter().enumerate() {
                assert_eq!(at_one[r][c], g.table.values[i][g.classes.class_of(w)], "{n} {label}");
            }
        }
    }
}

#[test]
fn index_and_sign_rows() {
    for n in SUPPORTED {
        let g = Group::new(n).unwrap();
        let t = hecke_char_table(&g).unwrap();
        let ind = t.row("1_W").or_else(|| t.row(&format!("[{}]", g.w.rank() + 1))).unwrap();
        let sgn = t.row("sgn").or_else(|| t.row(&format!("[{}]", vec!["1"; g.w.rank() + 1].join(",")))).unwrap();
        for (c, &w) in t.reps.iter().enumerate() {
            let l = g.w.length(w);
            assert_eq!(t.values[ind][c], u_pow(l), "{n}");
            assert_eq!(t.values[sgn][c], CycPoly::constant(Cyc::from_int(if l % 2 == 0 { 1 } else { -1 })), "{n}");
        }
    }
}

#[test]
fn regular_trace_decomposes() {
    for n in SUPPORTED {
        let g = Group::new(n).unwrap();
        let t = hecke_char_table(&g).unwrap();
        for (c, &w) in t.reps.iter().enumerate() {
            let mut expected = CycPoly::zero();
            for (r, label) in t.labels.iter().enumerate() {
                let d = g.table.dim(g.table.index(label).unwrap()) as i64;
                expected = expected.add(&t.values[r][c].scale(&Cyc::from_int(d)));
            }
            let reg = regular_trace(&g.w, w);
            assert_eq!(CycPoly::from_laurent(&reg).unwrap(), expected, "{n} {}", t.classes[c]);
            let at_one = reg.evaluate(&exactpoly::q(1)).unwrap();
            assert_eq!(at_one, exactpoly::q(if w == Element::ID { g.w.order() as i64 } else { 0 }));
        }
    }
}

#[test]
fn traces_are_constant_on_minimal_length_elements() {
    for n in ["A1", "A2", "A3", "B2", "G2", "I2(5)", "I2(8)", "B3", "H3", "A4"] {
        let g = Group::new(n).unwrap();
        let model = trace_model(&g);
        for c in &g.classes.classes {
            let reg = regular_trace(&g.w, c.rep);
            for &w in &c.cmin {
                assert_eq!(regular_trace(&g.w, w), reg, "{n} {}", c.name);
                if let Some(m) = &model {
                    for i in 0..g.table.len() {
                        assert_eq!(m(i, w), m(i, c.rep), "{n} {}", c.name);
                    }
                }
            }
        }
    }
}

#[test]
fn braid_relations() {
    for n in ["B2", "A3", "H3", "G2"] {
        let g = Group::new(n).unwrap();
        let w = &g.w;
        for s in 0..w.rank() {
            for t in s + 1..w.rank() {
                let st = w.mul(w.gen(s), w.gen(t));
                let mut m = 1;
                while (0..m).fold(Element::ID, |acc, _| w.mul(acc, st)) != Element::ID {
                    m += 1;
                }
                let alt = |a: usize, b: usize| {
                    (0..m).fold(HeckeElement::one(), |acc, k| {
                        hecke_mul(w, &acc, &HeckeElement::t(w.gen(if k % 2 == 0 { a } else { b })))
                    })
                };
                assert_eq!(alt(s, t), alt(t, s), "{n}");
            }
        }
    }
}

#[test]
fn unsupported_types() {
    for n in ["H3", "D4", "A4", "B3"] {
        let g = Group::new(n).unwrap();
        assert!(matches!(hecke_char_table(&g), Err(HeckeError::UnsupportedType(_))), "{n}");
    }
}

fn random_element(g: &Group, seed: &[(u8, i8)]) -> HeckeElement {
    let mut h = HeckeElement::zero();
    for &(x, c) in seed {
        let w = Element(x as u32 % g.w.order() as u32);
        h.add_term(w, &LaurentPoly::from_int(c as i64));
    }
    h
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 40, ..ProptestConfig::default() })]

    #[test]
    fn associativity(
        a in proptest::collection::vec((any::<u8>(), -3i8..4), 1..4),
        b in proptest::collection::vec((any::<u8>(), -3i8..4), 1..4),
        c in proptest::collection::vec((any::<u8>(), -3i8..4), 1..4),
    ) {
        let g = Group::new("A3").unwrap();
        let (a, b, c) = (random_element(&g, &a), random_element(&g, &b), random_element(&g, &c));
        let w = &g.w;
        prop_assert_eq!(hecke_mul(w, &hecke_mul(w, &a, &b), &c), hecke_mul(w, &a, &hecke_mul(w, &b, &c)));
    }
}
