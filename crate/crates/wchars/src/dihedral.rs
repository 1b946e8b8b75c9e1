use crate::CharTable;
use conjclasses::Classes;
use coxeter::CoxeterGroup;
use exactpoly::Cyc;

/// Closed form for `I2(m)`: four (m even) or two linear characters and the
/// two-dimensional `rho_j`, `1 <= j < m/2`, with `(s1 s2)^k -> 2 cos(2 pi jk/m)`.
pub fn table(w: &CoxeterGroup, classes: &Classes, m: u32) -> CharTable {
    enum Kind {
        Rotation(i64),
        Reflection(bool),
    }
    let kinds: Vec<Kind> = classes
        .classes
        .iter()
        .map(|c| {
            let l = w.length(c.rep);
            if l % 2 == 0 {
                Kind::Rotation(l as i64 / 2)
            } else {
                Kind::Reflection(c.elements.contains(&w.gen(0)))
            }
        })
        .collect();
    let mut labels = vec!["1_W".to_string()];
    let mut values: Vec<Vec<Cyc>> = vec![vec![Cyc::one(); kinds.len()]];
    if m % 2 == 0 {
        for (name, s1) in [("eps1", -1), ("eps2", 1)] {
            labels.push(name.into());
            values.push(
                kinds
                    .iter()
                    .map(|k| match k {
                        Kind::Rotation(k) => Cyc::from_int(if k % 2 == 0 { 1 } else { -1 }),
                        Kind::Reflection(true) => Cyc::from_int(s1),
                        Kind::Reflection(false) => Cyc::from_int(-s1),
                    })
                    .collect(),
            );
        }
    }
    for j in 1..(m as i64 + 1) / 2 {
        labels.push(format!("rho{j}"));
        values.push(
            kinds
                .iter()
                .map(|k| match k {
                    Kind::Rotation(k) => Cyc::two_cos(m, j * k),
                    Kind::Reflection(_) => Cyc::zero(),
                })
                .collect(),
        );
    }
    labels.push("sgn".into());
    values.push(
        kinds
            .iter()
            .map(|k| match k {
                Kind::Rotation(_) => Cyc::one(),
                Kind::Reflection(_) => Cyc::from_int(-1),
            })
            .collect(),
    );
    CharTable::new(classes, labels, values)
}
