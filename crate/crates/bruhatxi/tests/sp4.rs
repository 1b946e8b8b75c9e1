use bruhatxi::*;
use exactpoly::{LaurentPoly, Q};
use springerdata::Characteristic;
use wchars::Group;

fn b2() -> Group {
    Group::new("B2").unwrap()
}

fn poly(s: &str) -> LaurentPoly {
    LaurentPoly::parse_in(s, "q").unwrap()
}

const CLASSES: [&str; 5] = ["1", "t", "stst", "s", "st"];

const ODD: [[&str; 5]; 5] = [
    ["1", "q^2-1", "q^3-q", "2q^3-2q^2", "q^4-2q^3+q^2"],
    ["0", "q^3-q^2", "0", "q^4-2q^3+q^2", "q^5-2q^4+q^3"],
    ["0", "0", "0", "q^6-2q^5+q^4", "q^8-2q^7+q^6"],
    ["0", "0", "q^4-q^3", "q^4-q^3", "q^5-2q^4+q^3"],
    ["0", "0", "0", "0", "q^6-2q^5+q^4"],
];

const EVEN: [[&str; 5]; 5] = [
    ["1", "q^2-1", "q^2-1", "2q^3-3q^2+1", "q^4-2q^3+q^2"],
    ["0", "q^3-q^2", "0", "q^4-2q^3+q^2", "q^5-2q^4+q^3"],
    ["0", "0", "0", "q^6-2q^5+q^4", "q^8-2q^7+q^6"],
    ["0", "0", "q^3-q^2", "q^4-2q^3+q^2", "q^5-2q^4+q^3"],
    ["0", "0", "0", "0", "q^6-2q^5+q^4"],
];

fn check_table(ch: Characteristic, expected: &[[&str; 5]; 5], columns: &[&str]) {
    let g = b2();
    let (xi, _) = xi_matrix(&g, ch).unwrap();
    for (i, class) in CLASSES.iter().enumerate() {
        for (j, e) in columns.iter().enumerate() {
            assert_eq!(
                xi.normalized(e, class).unwrap(),
                poly(expected[i][j]),
                "{ch:?} row {class} column {e}"
            );
        }
    }
}

#[test]
fn normalized_table_odd() {
    check_table(Characteristic::Odd, &ODD, &["sgn", "sgn2", "sgn1", "σ", "1_W"]);
}

#[test]
fn normalized_table_even() {
    check_table(Characteristic::Even, &EVEN, &["sgn", "sgn2", "sgn1", "σ", "1_W"]);
}

#[test]
fn table_layout_follows_plan_order() {
    let (xi, data) = xi_matrix(&b2(), Characteristic::Odd).unwrap();
    let t = xi.normalized_table().unwrap();
    assert_eq!(xi.matrix.cols, CLASSES);
    assert_eq!(xi.matrix.rows, data.plan().unwrap().order());
    assert_eq!(t.len(), 5);
    assert_eq!(t[0][0], LaurentPoly::one());
}

#[test]
fn counts_agree_with_xi() {
    let g = b2();
    for ch in [Characteristic::Odd, Characteristic::Even] {
        let (xi, data) = xi_matrix(&g, ch).unwrap();
        let gfq = springerdata::load_gfq("B2", ch).unwrap();
        let rows = two_route_check(&xi, &data, &gfq).unwrap();
        assert_eq!(rows.len(), 25);
        for r in rows {
            assert!(r.equal, "{ch:?} {} {}: {} vs {}", r.character, r.class, r.xi_route, r.count_route);
        }
    }
}

#[test]
fn published_prefactors() {
    let pgb = "q^4+2q^3+2q^2+2q+1";
    let odd: [[&str; 5]; 5] = [
        [pgb, "q^2+2q+1", "3q+1", "q+1", "1"],
        ["0", "q^3+q^2", "q^2-q", "q^2+q", "q"],
        ["0", "0", "q^4-q^3", "q^4+q^3", "q^4"],
        ["0", "0", "2q^2", "0", "q"],
        ["0", "0", "0", "0", "q^2"],
    ];
    let even: [[&str; 6]; 5] = [
        [pgb, "q^2+2q+1", "q^2+2q+1", "2q+1", "1", "1"],
        ["0", "q^3+q^2", "0", "q^2", "q", "q"],
        ["0", "0", "0", "q^4", "q^4-2q^3", "q^4+2q^3"],
        ["0", "0", "q^3+q^2", "q^2", "q", "q"],
        ["0", "0", "0", "0", "2q^2", "0"],
    ];
    let g = b2();
    let h = hecke::hecke_char_table(&g).unwrap();
    let c = cell_counts_from_gfq(&springerdata::load_gfq("B2", Characteristic::Odd).unwrap(), &h).unwrap();
    for i in 0..5 {
        for j in 0..5 {
            assert_eq!(c.prefactor[i][j], poly(odd[i][j]), "odd {i} {j}");
        }
    }
    let c = cell_counts_from_gfq(&springerdata::load_gfq("B2", Characteristic::Even).unwrap(), &h).unwrap();
    for i in 0..5 {
        for j in 0..6 {
            assert_eq!(c.prefactor[i][j], poly(even[i][j]), "even {i} {j}");
        }
    }
}

#[test]
fn beta_values() {
    let (xi, _) = xi_matrix(&b2(), Characteristic::Odd).unwrap();
    // 1, σ at q = 3: |G/B| (2q^3 - 2q^2) = 160 * 36.
    assert_eq!(beta(&xi, "σ", "1", 3).unwrap(), Q::from_integer(5760.into()));
    assert_eq!(beta(&xi, "sgn", "st", 5).unwrap(), Q::from_integer(0.into()));
    assert_eq!(beta(&xi, "σ", "1", 1), Err(XiError::BadQ(1)));
}

fn map_of(m: &ClassUnipotentMap) -> Vec<(&str, &str)> {
    m.map.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect()
}

#[test]
fn class_map_odd() {
    let (xi, data) = xi_matrix(&b2(), Characteristic::Odd).unwrap();
    let m = verify_class_map(&xi, &data).unwrap();
    assert_eq!(
        map_of(&m),
        [("1", "(1111)"), ("t", "(211)"), ("stst", "(22)"), ("s", "(22)"), ("st", "(4)")]
    );
    assert!(m.surjective);
}

#[test]
fn class_map_even() {
    let (xi, data) = xi_matrix(&b2(), Characteristic::Even).unwrap();
    let m = verify_class_map(&xi, &data).unwrap();
    assert_eq!(
        map_of(&m),
        [("1", "(1111)"), ("t", "(211)"), ("stst", "(22)"), ("s", "(22)*"), ("st", "(4)")]
    );
    assert!(m.surjective);
}

#[test]
fn cuspidal_divisibility() {
    let g = b2();
    for ch in [Characteristic::Odd, Characteristic::Even] {
        let (xi, data) = xi_matrix(&g, ch).unwrap();
        let d = divisibility_checks(&g, &xi, &data).unwrap();
        let classes: std::collections::BTreeSet<_> = d.iter().map(|e| e.class.as_str()).collect();
        assert_eq!(classes, ["st", "stst"].into_iter().collect());
        for e in &d {
            assert!(e.divisible && e.pattern_ok, "{ch:?} {e:?}");
        }
        let ones: Vec<_> = d.iter().filter(|e| e.constant_term.as_deref() == Some("1")).collect();
        assert_eq!(ones.len(), 2);
    }
    let (xi, data) = xi_matrix(&g, Characteristic::Odd).unwrap();
    let d = divisibility_checks(&g, &xi, &data).unwrap();
    let e = d.iter().find(|e| e.class == "stst" && e.character == "σ").unwrap();
    assert_eq!(e.constant_term.as_deref(), Some("1"));
}

#[test]
fn missing_springer_data() {
    let g = Group::new("G2").unwrap();
    assert!(matches!(xi_matrix(&g, Characteristic::Odd), Err(XiError::MissingData(_))));
}
