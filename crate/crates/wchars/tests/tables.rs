use conjclasses::Classes;
use exactpoly::{Cyc, Q};
use proptest::prelude::*;
use std::sync::OnceLock;
use wchars::{as_int, burnside_values, mn, Group, WeightFunction};

const GROUPS: [&str; 14] = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "D5", "I2(5)", "I2(8)", "G2", "H3", "F4"];

fn group(name: &str) -> &'static Group {
    static CACHE: OnceLock<Vec<(&'static str, Group)>> = OnceLock::new();
    let all = CACHE.get_or_init(|| GROUPS.iter().map(|&n| (n, Group::new(n).unwrap())).collect());
    &all.iter().find(|g| g.0 == name).unwrap().1
}

fn sorted_rows(mut v: Vec<Vec<Cyc>>) -> Vec<Vec<Cyc>> {
    v.sort_by(|a, b| wchars::cmp_rows(a, b));
    v
}

#[test]
fn orthonormal_with_dimensions_first() {
    for name in GROUPS {
        let g = group(name);
        let t = &g.table;
        assert!(t.is_orthonormal(), "{name}");
        assert_eq!(t.len(), g.classes.len(), "{name}");
        assert_eq!(t.class_names[0], "1");
        let total: i64 = (0..t.len()).map(|e| t.dim(e) * t.dim(e)).sum();
        assert_eq!(total as usize, g.w.order(), "{name}");
        let sign = t.index(if name == "B2" || name.starts_with("I2") || name == "G2" { "sgn" } else { "" });
        if let Some(e) = sign {
            assert_eq!(t.values[e], t.sign_values());
        }
        assert!(t.values.iter().any(|r| *r == t.sign_values()), "{name}");
        for e in 0..t.len() {
            assert_eq!(t.tensor_sign_index(t.tensor_sign_index(e)), e);
        }
    }
}

#[test]
fn weyl_values_are_integers() {
    for name in ["A4", "B4", "D4", "D5", "F4"] {
        let t = &group(name).table;
        assert!(t.values.iter().flatten().all(|x| as_int(x).is_some()), "{name}");
    }
    let h3 = &group("H3").table;
    assert!(h3.values.iter().flatten().any(|x| as_int(x).is_none()));
}

#[test]
fn class_algebra_matches_closed_forms() {
    for name in ["A3", "A4", "B3", "B4", "I2(5)", "G2"] {
        let g = group(name);
        let b = burnside_values(&g.w, &g.classes).unwrap();
        assert_eq!(sorted_rows(b), sorted_rows(g.table.values.clone()), "{name}");
    }
    let g = group("I2(8)");
    assert!(matches!(burnside_values(&g.w, &g.classes), Err(wchars::CharError::UnsupportedType(_))));
}

#[test]
fn bundled_tables_match_class_algebra() {
    for name in ["D4", "H3"] {
        let g = group(name);
        let b = burnside_values(&g.w, &g.classes).unwrap();
        assert_eq!(sorted_rows(b), sorted_rows(g.table.values.clone()), "{name}");
        let file = wchars::bundled::generate(name).unwrap();
        let on_disk: wchars::bundled::TableFile =
            serde_json::from_slice(&std::fs::read(wchars::bundled::path(name)).unwrap()).unwrap();
        assert_eq!(file, on_disk, "{name}");
    }
}

#[test]
fn type_a_b_values() {
    let g = group("A4");
    for (e, l) in g.table.labels.iter().enumerate() {
        let p = mn::parse_partition(l).unwrap();
        let n: usize = p.iter().enumerate().map(|(i, x)| i * x).sum();
        assert_eq!(g.b_value(e), n, "{l}");
    }
}

/// `sum dim(E) P_E(u)` is the graded dimension `prod [d_i]_u` of the
/// coinvariant algebra.
#[test]
fn fake_degrees_sum_to_coinvariants() {
    for name in GROUPS {
        let g = group(name);
        let mut want = vec![Q::from_integer(1.into())];
        for d in g.w.datum.degrees() {
            let mut next = vec![Q::from_integer(0.into()); want.len() + d as usize - 1];
            for (i, c) in want.iter().enumerate() {
                for k in 0..d as usize {
                    next[i + k] += c;
                }
            }
            want = next;
        }
        let mut got = vec![Q::from_integer(0.into()); want.len()];
        for e in 0..g.table.len() {
            for (i, c) in g.fake_degree(&g.table.values[e]).iter().enumerate() {
                got[i] += c * Q::from_integer(g.table.dim(e).into());
            }
        }
        assert_eq!(got, want, "{name}");
    }
}

#[test]
fn known_labels_by_b_value() {
    let f4 = group("F4");
    for (l, b) in [("1_1", 0), ("4_2", 1), ("9_1", 2), ("8_1", 3), ("8_3", 3), ("16_1", 5), ("6_2", 6), ("1_4", 24)] {
        assert_eq!(f4.b_value(f4.table.index(l).unwrap()), b, "{l}");
    }
    let h3 = group("H3");
    for (l, b) in [("1_r", 0), ("3_s", 1), ("5_r", 2), ("4_r'", 4), ("1_r'", 15)] {
        assert_eq!(h3.b_value(h3.table.index(l).unwrap()), b, "{l}");
    }
    let d4 = group("D4");
    assert_eq!(d4.table.labels.len(), 13);
    assert_eq!(d4.b_value(d4.table.index("4.").unwrap()), 0);
}

#[test]
fn b2_induction_from_s() {
    let g = group("B2");
    let s = g.w.datum.labels.iter().position(|l| l == "s").unwrap();
    let (sub, f) = g.parabolic(&[s]).unwrap();
    let triv = vec![Cyc::one(); sub.classes.len()];
    let ind = g.induce(&sub, &f, &triv);
    let m = g.table.decompose(&ind).unwrap();
    let mut got: Vec<&str> = (0..m.len()).filter(|&e| m[e] != 0).map(|e| g.table.labels[e].as_str()).collect();
    got.sort();
    assert_eq!(got, ["1_W", "sgn1", "σ"]);
    assert!(m.iter().all(|&x| x <= 1));
}

#[test]
fn induction_extremes() {
    for name in ["B3", "H3", "F4"] {
        let g = group(name);
        let (sub, f) = g.parabolic(&[]).unwrap();
        let reg = g.induce(&sub, &f, &[Cyc::one()]);
        assert_eq!(as_int(&reg[0]), Some(g.w.order() as i64));
        assert!(reg[1..].iter().all(|x| x.is_zero()));
        let all: Vec<usize> = (0..g.w.rank()).collect();
        let (sub, f) = g.parabolic(&all).unwrap();
        for e in 0..sub.table.len() {
            let ind = g.induce(&sub, &f, &sub.table.values[e]);
            let m = g.table.decompose(&ind).unwrap();
            assert_eq!(m.iter().sum::<i64>(), 1);
        }
    }
}

#[test]
fn omega_changes_sign_under_tensoring() {
    for (name, weights) in [("B3", vec![1, 2, 2]), ("F4", vec![1, 1, 2, 2]), ("F4", vec![2, 2, 3, 3]), ("H3", vec![1, 1, 1])] {
        let g = group(name);
        let l = WeightFunction::new(g, weights).unwrap();
        for e in 0..g.table.len() {
            let s = g.table.tensor_sign_index(e);
            assert_eq!(g.omega_l(s, &l).unwrap(), -g.omega_l(e, &l).unwrap());
        }
        assert_eq!(g.omega_l(0, &l).ok(), Some(l.values.iter().zip(reflection_counts(g)).map(|(a, b)| a * b).sum()));
    }
}

/// `N_s` for each generator, or 0 for all but the first generator of a class.
fn reflection_counts(g: &Group) -> Vec<i64> {
    let mut seen = vec![];
    (0..g.w.rank())
        .map(|s| {
            let c = g.classes.class_of(g.w.gen(s));
            if seen.contains(&c) {
                0
            } else {
                seen.push(c);
                g.classes.get(c).size() as i64
            }
        })
        .collect()
}

#[test]
fn trivial_rows_lead_for_weyl_groups() {
    for name in ["A3", "B3", "D4", "F4", "H3"] {
        let t = &group(name).table;
        assert!(t.values[0].iter().all(|x| *x == Cyc::one()), "{name}");
    }
}

#[test]
fn reducible_parabolics_get_generic_labels() {
    let g = group("F4");
    let (sub, _) = g.parabolic(&[0, 2, 3]).unwrap();
    assert_eq!(sub.w.order(), 12);
    assert!(sub.table.is_orthonormal());
    assert_eq!(sub.table.labels, ["phi1,0", "phi1,1", "phi1,3", "phi1,4", "phi2,1", "phi2,2"]);
    let c = Classes::compute(&sub.w);
    assert_eq!(wchars::character_table(&sub.w, &c).unwrap(), sub.table);
}

fn subsets(n: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(any::<bool>(), n).prop_map(|v| (0..v.len()).filter(|&i| v[i]).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn frobenius_reciprocity(
        name in prop::sample::select(vec!["B3", "A3", "D4", "H3", "F4"]),
        j in subsets(4),
        seed in proptest::collection::vec(-3i64..4, 32),
        e in 0usize..25,
    ) {
        let g = group(name);
        let j: Vec<usize> = j.into_iter().filter(|&s| s < g.w.rank()).collect();
        let (sub, f) = g.parabolic(&j).unwrap();
        let chi: Vec<Cyc> = (0..sub.classes.len()).map(|i| Cyc::from_int(seed[i % seed.len()])).collect();
        let e = e % g.table.len();
        let lhs = g.table.inner(&g.induce(&sub, &f, &chi), &g.table.values[e]);
        let rhs = sub.table.inner(&chi, &g.restrict(&f, &g.table.values[e]));
        prop_assert_eq!(lhs, rhs);
    }
}
