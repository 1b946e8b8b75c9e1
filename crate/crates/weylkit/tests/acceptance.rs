//! One line per acceptance criterion. Expected values are transcribed from
//! the published tables, independently of the golden files, which are also
//! checked through `weylkit reproduce`.
//!
//! The process exits nonzero if any criterion fails, except those listed in
//! `KNOWN_FAILURES`, which must still fail exactly as documented.

use exactpoly::{Cyc, LaurentPoly, PolyMatrix, RatFun};
use greenalg::{BlockPlan, Factorization, OmegaMatrix};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use springerdata::Characteristic;
use std::collections::BTreeSet;
use std::time::{Duration, Instant};
use wchars::{mn, Group, WeightFunction};

type Outcome = Result<String, String>;

/// Criterion 7: no element of the F4(a1) class has a factorisation meeting
/// the distinguished condition literally (see README).
const KNOWN_FAILURES: [usize; 1] = [7];

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn group(name: &str) -> Group {
    Group::new(name).unwrap()
}

fn cli(args: &[&str]) -> (i32, String) {
    let mut argv = vec!["weylkit".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let (mut out, mut err) = (vec![], vec![]);
    let code = weylkit::run(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap() + &String::from_utf8(err).unwrap())
}

fn golden_zero_diff(args: &[&str]) -> Result<(), String> {
    let (code, text) = cli(args);
    ensure(code == 0, || format!("reproduce {args:?}: {}", text.trim()))
}

const B2_ORDER: [&str; 5] = ["sgn", "sgn2", "sgn1", "σ", "1_W"];

fn b2_order() -> Vec<String> {
    B2_ORDER.iter().map(|s| s.to_string()).collect()
}

fn mat(rows: &[[&str; 5]]) -> PolyMatrix {
    let l = b2_order();
    PolyMatrix::from_fn(&l, &l, |i, j| RatFun::parse_in(rows[i][j], "u").unwrap())
}

fn b2_omega() -> OmegaMatrix {
    greenalg::omega_matrix(&group("B2")).unwrap().reindex(&b2_order()).unwrap()
}

fn criterion_1() -> Outcome {
    let expected = mat(&[
        ["u^8", "u^6", "u^6", "u^7+u^5", "u^4"],
        ["u^6", "u^8", "u^4", "u^7+u^5", "u^6"],
        ["u^6", "u^4", "u^8", "u^7+u^5", "u^6"],
        ["u^7+u^5", "u^7+u^5", "u^7+u^5", "u^8+2u^6+u^4", "u^7+u^5"],
        ["u^4", "u^6", "u^6", "u^7+u^5", "u^8"],
    ]);
    let o = b2_omega();
    ensure(o.matrix == expected, || format!("Ω differs:\n{}", o.matrix.to_tsv("u")))?;
    let dw = o.d_w.as_ref().map(|d| d.display_in("u"));
    ensure(dw.as_deref() == Some("u^10-u^8-u^6+u^4"), || format!("D_W = {dw:?}"))?;
    Ok("25/25 entries, D_W = u^10-u^8-u^6+u^4".into())
}

fn criterion_2() -> Outcome {
    let p_top = ["u^4", "u^2", "u^2", "u^3+u", "1"];
    let p_sgn2 = ["0", "u^2", "0", "u", "1"];
    let p_sigma = ["0", "0", "0", "u", "1"];
    let p_one = ["0", "0", "0", "0", "1"];
    let lam_ends = |mid: [[&'static str; 5]; 3]| -> [[&'static str; 5]; 5] {
        [["1", "0", "0", "0", "0"], mid[0], mid[1], mid[2], ["0", "0", "0", "0", "u^8-u^6-u^4+u^2"]]
    };
    let cases: Vec<(&str, BlockPlan, [[&str; 5]; 5], [[&str; 5]; 5])> = vec![
        (
            "a",
            BlockPlan::from_strs(&[&["sgn"], &["sgn2"], &["sgn1", "σ"], &["1_W"]], &[4, 2, 1, 0]).unwrap(),
            [p_top, p_sgn2, ["0", "0", "u", "0", "0"], p_sigma, p_one],
            lam_ends([
                ["0", "u^4-1", "0", "0", "0"],
                ["0", "0", "u^6-u^2", "u^5-u", "0"],
                ["0", "0", "u^5-u", "u^6-u^2", "0"],
            ]),
        ),
        (
            "b",
            BlockPlan::from_strs(&[&["sgn"], &["sgn2"], &["sgn1"], &["σ"], &["1_W"]], &[4, 2, 2, 1, 0]).unwrap(),
            [p_top, p_sgn2, ["0", "0", "u^2", "u", "1"], p_sigma, p_one],
            lam_ends([
                ["0", "u^4-1", "0", "0", "0"],
                ["0", "0", "u^4-1", "0", "0"],
                ["0", "0", "0", "u^6-u^4-u^2+1", "0"],
            ]),
        ),
        (
            "c",
            BlockPlan::from_strs(&[&["sgn"], &["sgn2", "sgn1", "σ"], &["1_W"]], &[4, 1, 0]).unwrap(),
            [p_top, ["0", "u", "0", "0", "0"], ["0", "0", "u", "0", "0"], p_sigma, p_one],
            lam_ends([
                ["0", "u^6-u^2", "0", "u^5-u", "0"],
                ["0", "0", "u^6-u^2", "u^5-u", "0"],
                ["0", "u^5-u", "u^5-u", "u^6+u^4-u^2-1", "0"],
            ]),
        ),
    ];
    let o = b2_omega();
    let order = b2_order();
    let normal = |f: &Factorization| {
        (f.p.reindex(&order, &order).unwrap(), f.lambda.reindex(&order, &order).unwrap())
    };
    for (name, plan, p, lambda) in cases {
        let direct = greenalg::block_factorize(&o, &plan).map_err(|e| format!("({name}) {e}"))?;
        let (dp, dl) = normal(&direct);
        ensure(dp == mat(&p), || format!("({name}) P differs:\n{}", dp.to_tsv("u")))?;
        ensure(dl == mat(&lambda), || format!("({name}) Λ differs:\n{}", dl.to_tsv("u")))?;
        let n = greenalg::default_points(&o, &plan);
        for primes in [0, 3] {
            let f = greenalg::factorize_interpolated(&o, &plan, n, primes).map_err(|e| format!("({name}) {e}"))?;
            ensure(normal(&f) == (dp.clone(), dl.clone()), || format!("({name}) interpolation ({primes} primes) differs"))?;
        }
        golden_zero_diff(&["reproduce", "--table", "example-5.2", "--case", name])?;
    }
    Ok("cases a, b, c: P and Λ exact; interpolation over Q and mod 3 primes identical; goldens zero diff".into())
}

const TABLE3_CLASSES: [&str; 5] = ["1", "t", "stst", "s", "st"];

const TABLE3_ODD: [[&str; 5]; 5] = [
    ["1", "q^2-1", "q^3-q", "2q^3-2q^2", "q^4-2q^3+q^2"],
    ["0", "q^3-q^2", "0", "q^4-2q^3+q^2", "q^5-2q^4+q^3"],
    ["0", "0", "0", "q^6-2q^5+q^4", "q^8-2q^7+q^6"],
    ["0", "0", "q^4-q^3", "q^4-q^3", "q^5-2q^4+q^3"],
    ["0", "0", "0", "0", "q^6-2q^5+q^4"],
];

const TABLE3_EVEN: [[&str; 5]; 5] = [
    ["1", "q^2-1", "q^2-1", "2q^3-3q^2+1", "q^4-2q^3+q^2"],
    ["0", "q^3-q^2", "0", "q^4-2q^3+q^2", "q^5-2q^4+q^3"],
    ["0", "0", "0", "q^6-2q^5+q^4", "q^8-2q^7+q^6"],
    ["0", "0", "q^3-q^2", "q^4-2q^3+q^2", "q^5-2q^4+q^3"],
    ["0", "0", "0", "0", "q^6-2q^5+q^4"],
];

fn criterion_3() -> Outcome {
    let g = group("B2");
    let mut n = 0;
    for (ch, name, table) in [(Characteristic::Odd, "odd", &TABLE3_ODD), (Characteristic::Even, "even", &TABLE3_EVEN)] {
        let (xi, _) = bruhatxi::xi_matrix(&g, ch).map_err(|e| e.to_string())?;
        for (i, class) in TABLE3_CLASSES.iter().enumerate() {
            for (j, e) in B2_ORDER.iter().enumerate() {
                let got = xi.normalized(e, class).map_err(|e| e.to_string())?;
                let want = LaurentPoly::parse_in(table[i][j], "q").unwrap();
                ensure(got == want, || format!("{name} ({class}, {e}): {} != {}", got.display_in("q"), table[i][j]))?;
                n += 1;
            }
        }
        golden_zero_diff(&["reproduce", "--table", "3", "--char", name])?;
    }
    Ok(format!("{n}/50 entries exact; goldens zero diff"))
}

fn criterion_4() -> Outcome {
    let g = group("B2");
    let mut n = 0;
    for ch in [Characteristic::Odd, Characteristic::Even] {
        let (xi, data) = bruhatxi::xi_matrix(&g, ch).map_err(|e| e.to_string())?;
        let gfq = springerdata::load_gfq("B2", ch).map_err(|e| e.to_string())?;
        for r in bruhatxi::two_route_check(&xi, &data, &gfq).map_err(|e| e.to_string())? {
            ensure(r.equal, || format!("{ch:?} ({}, {}): {} vs {}", r.character, r.class, r.xi_route, r.count_route))?;
            n += 1;
        }
    }
    Ok(format!("{n}/50 polynomial identities"))
}

fn criterion_5() -> Outcome {
    let g = group("B2");
    let expected = [
        (Characteristic::Odd, [("1", "(1111)"), ("t", "(211)"), ("stst", "(22)"), ("s", "(22)"), ("st", "(4)")]),
        (Characteristic::Even, [("1", "(1111)"), ("t", "(211)"), ("stst", "(22)"), ("s", "(22)*"), ("st", "(4)")]),
    ];
    for (ch, want) in expected {
        let (xi, data) = bruhatxi::xi_matrix(&g, ch).map_err(|e| e.to_string())?;
        let m = bruhatxi::verify_class_map(&xi, &data).map_err(|e| e.to_string())?;
        let got: BTreeSet<(String, String)> = m.map.iter().cloned().collect();
        let want: BTreeSet<(String, String)> = want.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        ensure(got == want, || format!("{ch:?}: {got:?}"))?;
        ensure(m.surjective, || format!("{ch:?}: not surjective"))?;
    }
    Ok("both maps as printed, both surjective".into())
}

fn criterion_6() -> Outcome {
    let g = group("B2");
    let mut n = 0;
    for ch in [Characteristic::Odd, Characteristic::Even] {
        let (xi, data) = bruhatxi::xi_matrix(&g, ch).map_err(|e| e.to_string())?;
        let d = bruhatxi::divisibility_checks(&g, &xi, &data).map_err(|e| e.to_string())?;
        let classes: BTreeSet<&str> = d.iter().map(|e| e.class.as_str()).collect();
        ensure(classes == BTreeSet::from(["st", "stst"]), || format!("{ch:?}: cuspidal classes {classes:?}"))?;
        for e in &d {
            ensure(e.divisible && e.pattern_ok, || format!("{ch:?}: {e:?}"))?;
            n += 1;
        }
    }
    Ok(format!("{n} entries divisible by D_W, constant terms 1 exactly at O_C"))
}

fn criterion_7() -> Outcome {
    let rows: [(&str, &[(&str, usize)]); 2] = [
        ("H3", &[("6", 3), ("8", 5), ("9", 9), ("10", 15)]),
        (
            "F4",
            &[
                ("F4", 4),
                ("B4", 6),
                ("F4(a1)", 8),
                ("D4", 10),
                ("C3+A1", 10),
                ("D4(a1)", 12),
                ("A3+~A1", 14),
                ("A2+~A2", 16),
                ("4A1", 24),
            ],
        ),
    ];
    let mut bad = vec![];
    let mut good = 0;
    for (name, rows) in rows {
        let w = coxeter::CoxeterGroup::from_name(name).unwrap();
        let c = conjclasses::Classes::compute(&w);
        let cusp = c.classes.iter().filter(|x| x.cuspidal).count();
        ensure(cusp == rows.len(), || format!("{name}: {cusp} cuspidal classes"))?;
        for &(label, d) in rows {
            let class = c.classes.iter().find(|x| x.label == label).ok_or(format!("{name}: no class {label}"))?;
            ensure(class.cuspidal && class.d == d, || format!("{name} {label}: d_C = {}", class.d))?;
            let dec = conjclasses::find_excellent(&w, class).map_err(|e| e.to_string())?;
            if w.length(dec.w) == d && conjclasses::verify_excellent(&w, &c, &dec) {
                good += 1;
            } else {
                bad.push(format!("{name} {label} (found {}, not excellent)", dec.notation(&w)));
            }
        }
    }
    let (code, diff) = cli(&["reproduce", "--table", "1"]);
    if bad.is_empty() && code == 0 {
        Ok(format!("{good}/13 rows verified with printed d_C"))
    } else {
        Err(format!("{good}/13 rows verified; failing: {}; table diff: {}", bad.join(", "), diff.lines().skip(1).collect::<Vec<_>>().join(" | ")))
    }
}

fn criterion_8() -> Outcome {
    let g = group("F4");
    let f12 = "1_2 1_3 4_1 4_3 4_4 6_1 6_2 9_2 9_3 12_1 16_1";
    let f16 = "4_1 6_1 6_2 12_1 16_1";
    type Case = ([i64; 4], Vec<&'static str>, Vec<(&'static str, &'static str)>);
    let cases: [Case; 4] = [
        (
            [1, 1, 1, 1],
            vec!["2_1 2_3 4_2", "2_2 2_4 4_5", f12],
            vec![
                ("1_4", "4_5"), ("4_5", "9_4"), ("9_4", "8_2"), ("9_4", "8_4"), ("8_2", "12_1"), ("8_4", "12_1"),
                ("12_1", "8_1"), ("12_1", "8_3"), ("8_1", "9_1"), ("8_3", "9_1"), ("9_1", "4_2"), ("4_2", "1_1"),
            ],
        ),
        (
            [1, 1, 2, 2],
            vec!["1_3 2_1 8_3 9_1", "1_2 2_2 8_4 9_4", f16],
            vec![
                ("1_4", "2_4"), ("2_4", "4_5"), ("4_5", "1_2"), ("1_2", "4_3"), ("1_2", "8_2"), ("4_3", "9_2"),
                ("9_2", "16_1"), ("8_2", "16_1"), ("16_1", "9_3"), ("16_1", "8_1"), ("9_3", "4_4"), ("4_4", "1_3"),
                ("8_1", "1_3"), ("1_3", "4_2"), ("4_2", "2_3"), ("2_3", "1_1"),
            ],
        ),
        (
            [2, 2, 3, 3],
            vec![f16],
            vec![
                ("1_4", "2_4"), ("2_4", "4_5"), ("4_5", "2_2"), ("2_2", "9_4"), ("9_4", "8_4"), ("8_4", "1_2"),
                ("1_2", "4_3"), ("4_3", "9_2"), ("9_2", "16_1"), ("9_4", "8_2"), ("8_2", "16_1"), ("16_1", "9_3"),
                ("9_3", "4_4"), ("4_4", "1_3"), ("1_3", "8_3"), ("8_3", "9_1"), ("16_1", "8_1"), ("8_1", "9_1"),
                ("9_1", "2_1"), ("2_1", "4_2"), ("4_2", "2_3"), ("2_3", "1_1"),
            ],
        ),
        (
            [1, 1, 3, 3],
            vec![f16],
            vec![
                ("1_4", "2_4"), ("2_4", "4_5"), ("2_4", "1_2"), ("1_2", "8_4"), ("4_5", "8_4"), ("8_4", "9_4"),
                ("8_4", "4_3"), ("9_4", "9_2"), ("9_4", "2_2"), ("2_2", "8_2"), ("8_2", "16_1"), ("4_3", "9_2"),
                ("9_2", "16_1"), ("16_1", "8_1"), ("16_1", "9_3"), ("8_1", "2_1"), ("2_1", "9_1"), ("9_3", "9_1"),
                ("9_1", "8_3"), ("9_3", "4_4"), ("4_4", "8_3"), ("8_3", "4_2"), ("8_3", "1_3"), ("4_2", "2_3"),
                ("1_3", "2_3"), ("2_3", "1_1"),
            ],
        ),
    ];
    let mut edges_total = 0;
    for (w, boxes, edges) in cases {
        let l = WeightFunction::new(&g, w.to_vec()).unwrap();
        let f = afun::families(&g, &l).map_err(|e| e.to_string())?;
        let got: BTreeSet<BTreeSet<String>> =
            f.blocks.iter().filter(|b| b.len() > 1).map(|b| b.iter().cloned().collect()).collect();
        let want: BTreeSet<BTreeSet<String>> =
            boxes.iter().map(|b| b.split(' ').map(str::to_string).collect()).collect();
        ensure(got == want, || format!("{w:?}: families {got:?}"))?;
        let nodes: BTreeSet<&str> = edges.iter().flat_map(|(a, b)| [*a, *b]).collect();
        ensure(nodes.len() == f.blocks.len(), || format!("{w:?}: {} families, diagram has {}", f.blocks.len(), nodes.len()))?;
        let block = |x: &str| f.block_of(x).unwrap();
        let want: BTreeSet<(usize, usize)> = edges.iter().map(|(a, b)| (block(a), block(b))).collect();
        let got: BTreeSet<(usize, usize)> = f.hasse_edges().into_iter().collect();
        ensure(got == want, || format!("{w:?}: Hasse edges differ"))?;
        edges_total += want.len();
    }
    golden_zero_diff(&["reproduce", "--table", "F4-families"])?;
    Ok(format!("4 regimes, boxed families and all {edges_total} covering edges as printed; golden zero diff"))
}

fn criterion_9() -> Outcome {
    let mut n = 0;
    for k in 2..=5 {
        let g = group(&format!("A{}", k - 1));
        for a in [1, 2, 3] {
            let l = WeightFunction::new(&g, vec![a; k - 1]).unwrap();
            let at = afun::a_tilde(&g, &l).map_err(|e| e.to_string())?;
            for lam in mn::partitions(k) {
                let want: i64 = lam.iter().enumerate().map(|(i, x)| (i * x) as i64 * a).sum();
                let got = at.get(&mn::format_partition(&lam));
                ensure(got == Some(want), || format!("S_{k}, a={a}, {lam:?}: {got:?} != {want}"))?;
                n += 1;
            }
        }
    }
    let g = group("B2");
    let at = afun::a_tilde(&g, &g.equal_parameters()).map_err(|e| e.to_string())?;
    let got: Vec<Option<i64>> = ["1_W", "sgn1", "sgn2", "σ", "sgn"].iter().map(|e| at.get(e)).collect();
    ensure(got == [Some(0), Some(1), Some(1), Some(1), Some(4)], || format!("B2: {got:?}"))?;
    let cases: &[(&str, &[i64])] = &[
        ("A3", &[1, 1, 1]),
        ("B2", &[1, 1]),
        ("B2", &[2, 1]),
        ("B2", &[1, 2]),
        ("B3", &[1, 1, 1]),
        ("B3", &[3, 2, 2]),
        ("B4", &[1, 2, 2, 2]),
        ("D4", &[1, 1, 1, 1]),
        ("G2", &[1, 1]),
        ("G2", &[3, 1]),
        ("I2(5)", &[1, 1]),
        ("I2(8)", &[1, 2]),
        ("H3", &[1, 1, 1]),
        ("F4", &[1, 1, 1, 1]),
        ("F4", &[1, 1, 2, 2]),
        ("F4", &[2, 2, 3, 3]),
        ("F4", &[1, 1, 3, 3]),
    ];
    let mut m = 0;
    for (name, w) in cases {
        let g = group(name);
        let l = WeightFunction::new(&g, w.to_vec()).unwrap();
        let at = afun::a_tilde(&g, &l).map_err(|e| e.to_string())?;
        for (e, label) in g.table.labels.iter().enumerate() {
            let twin = g.table.tensor_sign(label).unwrap();
            let lhs = at.get(twin).unwrap() - at.get(label).unwrap();
            let rhs = g.omega_l(e, &l).map_err(|e| e.to_string())?;
            ensure(lhs == rhs, || format!("{name} {w:?} {label}: {lhs} != {rhs}"))?;
            m += 1;
        }
    }
    Ok(format!("{n} type-A values, B2 (0,1,1,1,4), {m} sign-twist identities"))
}

fn random_plan(rng: &mut StdRng, labels: &[String]) -> BlockPlan {
    let mut l = labels.to_vec();
    for i in (1..l.len()).rev() {
        l.swap(i, rng.gen_range(0..=i));
    }
    let mut blocks: Vec<Vec<String>> = vec![];
    for (i, x) in l.into_iter().enumerate() {
        if i == 0 || rng.gen_bool(0.5) {
            blocks.push(vec![]);
        }
        blocks.last_mut().unwrap().push(x);
    }
    let mut b: Vec<i64> = (0..blocks.len()).map(|_| rng.gen_range(-3..8)).collect();
    b.sort_by(|x, y| y.cmp(x));
    BlockPlan::new(blocks, b).unwrap()
}

fn criterion_10() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let groups: Vec<(String, OmegaMatrix)> = ["A3", "B2", "I2(5)", "I2(6)", "I2(7)", "I2(8)"]
        .iter()
        .map(|n| (n.to_string(), greenalg::omega_matrix(&group(n)).unwrap()))
        .collect();
    for k in 0..50 {
        let (name, o) = &groups[rng.gen_range(0..groups.len())];
        let plan = random_plan(&mut rng, o.labels());
        let f = greenalg::block_factorize(o, &plan).map_err(|e| format!("{name} plan {k}: {e}"))?;
        ensure(f.reproduces(o), || format!("{name}: Pᵗ·Λ·P != Ω for {:?} {:?}", plan.blocks, plan.b))?;
    }
    let mut pairs = 0;
    for n in ["A2", "A3", "B2", "B3", "G2", "I2(5)", "I2(8)", "H3", "A4"] {
        let g = group(n);
        for c in &g.classes.classes {
            let reg = hecke::regular_trace(&g.w, c.cmin[0]);
            for &w in &c.cmin[1..] {
                ensure(hecke::regular_trace(&g.w, w) == reg, || format!("{n} {}: trace not constant on C_min", c.name))?;
                pairs += 1;
            }
        }
    }
    let mut cuspidal = 0;
    let types = [
        "A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "B5", "D4", "D5", "G2", "I2(5)", "I2(7)", "I2(8)", "H3", "F4",
    ];
    for n in types {
        let w = coxeter::CoxeterGroup::from_name(n).unwrap();
        let c = conjclasses::Classes::compute(&w);
        for class in c.classes.iter().filter(|x| x.cuspidal) {
            let shift: BTreeSet<_> = conjclasses::cyclic_shift_class(&w, class.cmin[0]).into_iter().collect();
            let cmin: BTreeSet<_> = class.cmin.iter().copied().collect();
            ensure(shift == cmin, || format!("{n} {}: C_min is not one cyclic shift class", class.label))?;
            cuspidal += 1;
        }
    }
    let frob: Vec<Group> = ["A3", "B3", "D4", "H3", "F4", "G2"].iter().map(|n| group(n)).collect();
    for _ in 0..100 {
        let g = &frob[rng.gen_range(0..frob.len())];
        let j: Vec<usize> = (0..g.w.rank()).filter(|_| rng.gen_bool(0.5)).collect();
        let (sub, f) = g.parabolic(&j).map_err(|e| e.to_string())?;
        let chi: Vec<Cyc> = (0..sub.classes.len()).map(|_| Cyc::from_int(rng.gen_range(-3..4))).collect();
        let e = rng.gen_range(0..g.table.len());
        let lhs = g.table.inner(&g.induce(&sub, &f, &chi), &g.table.values[e]);
        let rhs = sub.table.inner(&chi, &g.restrict(&f, &g.table.values[e]));
        ensure(lhs == rhs, || format!("{} J={j:?} E={}: Frobenius reciprocity fails", g.name(), g.table.labels[e]))?;
    }
    Ok(format!("50 random plans, {pairs} C_min pairs, {cuspidal} cuspidal classes, 100 reciprocity triples"))
}

fn main() {
    let criteria: [(usize, &str, fn() -> Outcome, u64); 10] = [
        (1, "Ω for B2", criterion_1, 1),
        (2, "B2 factorisations (a), (b), (c)", criterion_2, 5),
        (3, "normalised β table, both characteristics", criterion_3, 10),
        (4, "two-route β oracle for Sp4", criterion_4, 30),
        (5, "class to unipotent class maps", criterion_5, 10),
        (6, "divisibility by D_W for cuspidal classes", criterion_6, 5),
        (7, "excellent elements of H3 and F4 cuspidal classes", criterion_7, 300),
        (8, "F4 families and their order", criterion_8, 600),
        (9, "ã spot values and sign-twist identity", criterion_9, 60),
        (10, "property suites", criterion_10, 600),
    ];
    let mut unexpected = vec![];
    let mut passed = 0;
    for (n, name, f, limit) in criteria {
        let start = Instant::now();
        let mut outcome = f();
        let took = start.elapsed();
        if outcome.is_ok() && took > Duration::from_secs(limit) {
            outcome = Err(format!("took {took:.2?}, limit {limit} s"));
        }
        match &outcome {
            Ok(msg) => {
                passed += 1;
                println!("PASS criterion {n:>2}: {name}: {msg} [{took:.2?}]");
            }
            Err(msg) => println!("FAIL criterion {n:>2}: {name}: {msg} [{took:.2?}]"),
        }
        if outcome.is_ok() == KNOWN_FAILURES.contains(&n) {
            unexpected.push(n);
        }
    }
    println!("{passed}/10 criteria pass; documented failures: {KNOWN_FAILURES:?}");
    if !unexpected.is_empty() {
        println!("unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
