//! `reproduce`: regenerate a table and compare it line by line with the
//! bundled golden file. Lines starting with `#` are headers and are not
//! compared.

use crate::{factorization_tsv, factorize, fail, load_group, parse_char, table3_tsv, CliError, Res};
use conjclasses::{find_excellent, verify_excellent, Classes, ExcellentDecomposition};
use coxeter::CoxeterGroup;
use springerdata::Characteristic;
use std::fmt::Write as _;
use std::path::PathBuf;
use wchars::WeightFunction;

/// The four F4 regimes `L(s1) = L(s2) = a`, `L(s3) = L(s4) = b`.
pub const F4_REGIMES: [(&str, [i64; 4]); 4] =
    [("a=b", [1, 1, 1, 1]), ("b=2a", [1, 1, 2, 2]), ("2a>b>a", [2, 2, 3, 3]), ("b>2a", [1, 1, 3, 3])];

pub fn golden_dir() -> PathBuf {
    wchars::data_dir().join("golden")
}

/// What a table is called on disk, its header, and its freshly computed body.
pub struct Artifact {
    pub file: String,
    pub header: String,
    pub body: String,
}

/// Label order `1_1 < 1_2 < ... < 2_1 < ... < 16_1`; other labels sort as strings after.
fn label_key(l: &str) -> (u32, u32, String) {
    match l.split_once('_').map(|(a, b)| (a.parse(), b.parse())) {
        Some((Ok(a), Ok(b))) => (a, b, String::new()),
        _ => (u32::MAX, u32::MAX, l.to_string()),
    }
}

fn family_name(members: &[String]) -> String {
    let mut m = members.to_vec();
    m.sort_by_key(|l| label_key(l));
    if m.len() == 1 {
        m.pop().unwrap()
    } else {
        format!("{{{}}}", m.join(","))
    }
}

pub fn artifact(table: &str, case: Option<&str>, ch: Option<&str>) -> Res<Artifact> {
    match table {
        "1" => table1(),
        "3" => {
            let ch = parse_char(ch.unwrap_or("odd"))?;
            let g = load_group("B2")?;
            let (xi, _) = bruhatxi::xi_matrix(&g, ch).map_err(fail)?;
            let which = match ch {
                Characteristic::Odd => "odd",
                Characteristic::Even => "even",
            };
            Ok(Artifact {
                file: format!("table3-{which}.tsv"),
                header: format!(
                    "# |G/B|^-1 times the values beta_E^w for Sp4, p {}; rows w in C_min, columns E\n",
                    if which == "odd" { "odd" } else { "= 2" }
                ),
                body: table3_tsv(&xi)?,
            })
        }
        "F4-families" => f4_families(),
        "example-5.2" => {
            let case = case.unwrap_or("a");
            let g = load_group("B2")?;
            let plan = match case {
                "a" => springerdata::load_springer("B2", Characteristic::Odd).and_then(|d| d.plan()).map_err(fail)?,
                "b" => springerdata::load_springer("B2", Characteristic::Even).and_then(|d| d.plan()).map_err(fail)?,
                "c" => greenalg::family_plan(&g).map_err(fail)?,
                _ => return Err(CliError::new("UnknownCase", format!("case {case}; expected a, b or c"))),
            };
            let f = factorize(&g, &plan, false, None, 0)?;
            let mut body = String::new();
            writeln!(body, "# blocks {:?} b {:?}", plan.blocks, plan.b).unwrap();
            body.push_str(&factorization_tsv(&f, true, true));
            Ok(Artifact {
                file: format!("example-5.2-{case}.tsv"),
                header: format!("# B2: factors P and Lambda of Omega = P^t Lambda P, plan {case}\n"),
                body,
            })
        }
        _ => Err(CliError::new("UnknownTable", format!("{table}; expected 1, 3, F4-families or example-5.2"))),
    }
}

/// Parses `(3)(4)(323)(121)` into reflections.
pub fn parse_notation(w: &CoxeterGroup, s: &str) -> Res<ExcellentDecomposition> {
    let ts = s
        .trim_matches(|c| c == '(' || c == ')')
        .split(")(")
        .map(|t| w.word_to_element(&format!("({t})")).map_err(fail))
        .collect::<Res<Vec<_>>>()?;
    Ok(ExcellentDecomposition::from_reflections(w, ts))
}

/// Table 1 is transcribed, not generated: each printed word is kept when it
/// is an excellent element of its class with the printed `d_C`; otherwise
/// the row shows what the search finds instead (or `none`).
fn table1() -> Res<Artifact> {
    let printed = std::fs::read_to_string(golden_dir().join("table1.tsv"))
        .map_err(|e| CliError::new("MissingGolden", format!("table1.tsv: {e}")))?;
    let rows: Vec<Vec<&str>> = content(&printed).into_iter().skip(1).map(|l| l.split('\t').collect()).collect();
    let mut body = String::from("type\tlabel\td_C\texcellent\n");
    for name in ["H3", "F4"] {
        let w = CoxeterGroup::from_name(name).map_err(fail)?;
        let c = Classes::compute(&w);
        let mut cusp: Vec<_> = c.classes.iter().filter(|x| x.cuspidal).collect();
        // Printed order first, then anything the table does not list.
        let pos = |l: &str| rows.iter().position(|r| r.len() == 4 && r[0] == name && r[1] == l).unwrap_or(usize::MAX);
        cusp.sort_by_key(|x| pos(&x.label));
        for class in cusp {
            let kept = rows.get(pos(&class.label)).and_then(|r| {
                let dec = parse_notation(&w, r[3]).ok()?;
                let ok = c.class_of(dec.w) == c.class_of(class.rep)
                    && w.length(dec.w) == class.d
                    && r[2] == class.d.to_string()
                    && verify_excellent(&w, &c, &dec);
                ok.then(|| r[3].to_string())
            });
            let word = match kept {
                Some(x) => x,
                None => {
                    let dec = find_excellent(&w, class).map_err(fail)?;
                    if verify_excellent(&w, &c, &dec) {
                        dec.notation(&w)
                    } else {
                        format!("none (closest {})", dec.notation(&w))
                    }
                }
            };
            writeln!(body, "{name}\t{}\t{}\t{word}", class.label, class.d).unwrap();
        }
    }
    Ok(Artifact { file: "table1.tsv".into(), header: String::new(), body })
}

fn f4_families() -> Res<Artifact> {
    let g = load_group("F4")?;
    let mut body = String::new();
    for (regime, w) in F4_REGIMES {
        let l = WeightFunction::new(&g, w.to_vec()).map_err(fail)?;
        let f = afun::families(&g, &l).map_err(fail)?;
        writeln!(body, "regime\t{regime}\t{}", w.map(|x| x.to_string()).join(",")).unwrap();
        let mut fams: Vec<String> = f.blocks.iter().filter(|b| b.len() > 1).map(|b| family_name(b)).collect();
        fams.sort();
        for x in fams {
            writeln!(body, "family\t{x}").unwrap();
        }
        let mut edges: Vec<String> = f
            .hasse_edges()
            .into_iter()
            .map(|(i, j)| format!("edge\t{}\t{}", family_name(&f.blocks[i]), family_name(&f.blocks[j])))
            .collect();
        edges.sort();
        for e in edges {
            writeln!(body, "{e}").unwrap();
        }
    }
    Ok(Artifact {
        file: "F4-families.tsv".into(),
        header: "# F4 families with several members and covering relations (lower, upper) of their order\n".into(),
        body,
    })
}

fn content(s: &str) -> Vec<&str> {
    s.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()).collect()
}

/// Lines of `want` and `got` that differ, as `-`/`+` pairs.
pub fn diff(want: &str, got: &str) -> Vec<String> {
    let (a, b) = (content(want), content(got));
    let mut out = vec![];
    for i in 0..a.len().max(b.len()) {
        let (x, y) = (a.get(i), b.get(i));
        if x != y {
            if let Some(x) = x {
                out.push(format!("-{x}"));
            }
            if let Some(y) = y {
                out.push(format!("+{y}"));
            }
        }
    }
    out
}

pub fn reproduce(table: &str, case: Option<&str>, ch: Option<&str>, bless: bool) -> Res<(String, i32)> {
    let art = artifact(table, case, ch)?;
    let path = golden_dir().join(&art.file);
    if bless && table == "1" {
        return Err(CliError::new("NotGenerated", "table1.tsv is transcribed and cannot be regenerated"));
    }
    if bless {
        std::fs::create_dir_all(golden_dir()).map_err(|e| CliError::new("Io", e.to_string()))?;
        std::fs::write(&path, format!("{}{}", art.header, art.body)).map_err(|e| CliError::new("Io", e.to_string()))?;
        return Ok((format!("wrote {}\n", art.file), 0));
    }
    let want = std::fs::read_to_string(&path)
        .map_err(|e| CliError::new("MissingGolden", format!("{}: {e}", path.display())))?;
    let d = diff(&want, &art.body);
    let mut s = String::new();
    if d.is_empty() {
        writeln!(s, "{}: zero diff ({} lines)", art.file, content(&want).len()).unwrap();
        Ok((s, 0))
    } else {
        writeln!(s, "{}: {} differing lines", art.file, d.len()).unwrap();
        for l in d {
            writeln!(s, "{l}").unwrap();
        }
        Ok((s, 1))
    }
}
