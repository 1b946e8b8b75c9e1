//! Command-line front end. `run` parses the arguments, writes the artifact
//! to `out` and returns the exit code: 0 on success, 1 when `reproduce`
//! finds a difference, 2 on usage or module errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use conjclasses::{find_excellent, has_distinguished_factorisation, verify_excellent, Classes};
use coxeter::CoxeterGroup;
use greenalg::BlockPlan;
use serde::Deserialize;
use serde_json::json;
use springerdata::Characteristic;
use std::fmt::{Debug, Display, Write as _};
use std::io::Write;
use std::path::PathBuf;
use wchars::{Group, WeightFunction};

pub mod golden;

#[derive(Parser, Debug)]
#[command(name = "weylkit", about = "Exact computations for finite Coxeter groups and Sp4")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Debug, Clone)]
struct TypeArgs {
    /// `B2`, `F4`, `I2(5)`, or a letter together with `--rank`.
    #[arg(long = "type")]
    ty: String,
    #[arg(long)]
    rank: Option<usize>,
}

impl TypeArgs {
    fn name(&self) -> String {
        match self.rank {
            Some(r) if self.ty.chars().all(|c| c.is_ascii_alphabetic()) => format!("{}{r}", self.ty),
            _ => self.ty.clone(),
        }
    }
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Format {
    Tsv,
    Json,
    Pretty,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Dump {
    Roots,
    Generators,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Method {
    Direct,
    Interp,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum GreenEmit {
    Both,
    P,
    Lambda,
    Omega,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum XiEmit {
    Table3,
    Map,
    Divisibility,
    Routes,
    Matrix,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coxeter data of a group as JSON.
    Group {
        #[command(flatten)]
        t: TypeArgs,
        #[arg(long)]
        dump: Option<Dump>,
    },
    /// Conjugacy classes with d_C, size, cuspidality and an excellent word.
    Classes {
        #[command(flatten)]
        t: TypeArgs,
    },
    /// Excellent elements of the cuspidal classes (or of one class).
    Excellent {
        #[command(flatten)]
        t: TypeArgs,
        #[arg(long)]
        class: Option<String>,
        #[arg(long)]
        all: bool,
    },
    /// Families and the Hasse diagram of their order.
    Families {
        #[command(flatten)]
        t: TypeArgs,
        #[arg(long)]
        weights: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// ã values, ω_L and the axiom report.
    Afun {
        #[command(flatten)]
        t: TypeArgs,
        #[arg(long)]
        weights: Option<String>,
    },
    /// Block factorisation of Ω.
    Green {
        #[command(flatten)]
        t: TypeArgs,
        /// `families`, `springer:p!=2`, `springer:p=2` or a JSON file `{blocks, b}`.
        #[arg(long, default_value = "families")]
        plan: String,
        #[arg(long, value_enum, default_value = "direct")]
        method: Method,
        #[arg(long, value_enum, default_value = "both")]
        emit: GreenEmit,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
        #[arg(long)]
        points: Option<usize>,
        #[arg(long, default_value_t = 0)]
        primes: usize,
    },
    /// Character table of the generic Iwahori-Hecke algebra.
    HeckeTable {
        #[command(flatten)]
        t: TypeArgs,
    },
    /// Ξ* for Sp4 and the reports derived from it.
    Xi {
        #[command(flatten)]
        t: TypeArgs,
        #[arg(long = "char", default_value = "odd")]
        ch: String,
        #[arg(long, value_enum, default_value = "table3")]
        emit: XiEmit,
    },
    /// Map from conjugacy classes to families.
    Familymap {
        #[command(flatten)]
        t: TypeArgs,
    },
    /// Regenerate a bundled table and compare it with its golden file.
    Reproduce {
        /// `1`, `3`, `F4-families` or `example-5.2`.
        #[arg(long)]
        table: String,
        #[arg(long)]
        case: Option<String>,
        #[arg(long = "char")]
        ch: Option<String>,
        /// Overwrite the golden file instead of comparing.
        #[arg(long)]
        bless: bool,
    },
}

/// A module error with the name of its innermost variant as `kind`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub kind: String,
    pub message: String,
}

impl CliError {
    fn new(kind: &str, message: impl Into<String>) -> CliError {
        CliError { kind: kind.into(), message: message.into() }
    }
}

fn variant_kind(debug: &str) -> String {
    let mut kind = String::new();
    let mut rest = debug;
    loop {
        let ident: String = rest.chars().take_while(|c| c.is_alphanumeric() || *c == '_').collect();
        if ident.is_empty() {
            break;
        }
        kind = ident.clone();
        match rest[ident.len()..].strip_prefix('(') {
            Some(r) => rest = r,
            None => break,
        }
    }
    if kind.is_empty() {
        "Error".into()
    } else {
        kind
    }
}

fn fail<E: Debug + Display>(e: E) -> CliError {
    CliError { kind: variant_kind(&format!("{e:?}")), message: e.to_string() }
}

type Res<T> = Result<T, CliError>;

pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match dispatch(cli.cmd) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "{}", json!({"error": e.kind, "message": e.message}));
            2
        }
    }
}

fn dispatch(cmd: Command) -> Res<(String, i32)> {
    let ok = |s: String| Ok((s, 0));
    match cmd {
        Command::Group { t, dump } => ok(group(&t.name(), dump)?),
        Command::Classes { t } => ok(classes(&t.name())?),
        Command::Excellent { t, class, all } => ok(excellent(&t.name(), class.as_deref(), all)?),
        Command::Families { t, weights, format } => ok(families(&t.name(), weights.as_deref(), format)?),
        Command::Afun { t, weights } => ok(afun_table(&t.name(), weights.as_deref())?),
        Command::Green { t, plan, method, emit, format, points, primes } => {
            ok(green(&t.name(), &plan, method, emit, format, points, primes)?)
        }
        Command::HeckeTable { t } => ok(hecke::hecke_char_table(&load_group(&t.name())?).map_err(fail)?.to_tsv()),
        Command::Xi { t, ch, emit } => ok(xi(&t.name(), &ch, emit)?),
        Command::Familymap { t } => ok(familymap(&t.name())?),
        Command::Reproduce { table, case, ch, bless } => golden::reproduce(&table, case.as_deref(), ch.as_deref(), bless),
    }
}

fn load_coxeter(name: &str) -> Res<CoxeterGroup> {
    CoxeterGroup::from_name(name).map_err(fail)
}

pub(crate) fn load_group(name: &str) -> Res<Group> {
    load_coxeter(name)?;
    Group::new(name).map_err(fail)
}

fn weights(g: &Group, spec: Option<&str>) -> Res<WeightFunction> {
    let Some(spec) = spec else { return Ok(g.equal_parameters()) };
    let values = spec
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| CliError::new("BadWeights", format!("not an integer: {x:?}"))))
        .collect::<Res<Vec<i64>>>()?;
    WeightFunction::new(g, values).map_err(fail)
}

fn group(name: &str, dump: Option<Dump>) -> Res<String> {
    let w = load_coxeter(name)?;
    let d = &w.datum;
    let v = match dump {
        None => json!({
            "type": d.name(),
            "rank": w.rank(),
            "order": w.order(),
            "labels": d.labels,
            "coxeter_matrix": d.coxeter,
            "degrees": d.degrees(),
            "reflections": w.num_pos_roots(),
        }),
        Some(Dump::Roots) => {
            let roots: Vec<Vec<String>> =
                (0..w.num_pos_roots()).map(|i| w.root_coords(i).iter().map(|c| c.to_string()).collect()).collect();
            json!({"type": d.name(), "basis": "simple roots", "positive_roots": roots})
        }
        Some(Dump::Generators) => {
            let mats: Vec<Vec<Vec<String>>> = d
                .generator_matrices()
                .iter()
                .map(|m| m.iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect())
                .collect();
            let perms: Vec<&[u16]> = (0..w.rank()).map(|s| w.generator_perm(s)).collect();
            json!({"type": d.name(), "labels": d.labels, "matrices": mats, "root_permutations": perms})
        }
    };
    Ok(serde_json::to_string_pretty(&v).expect("json") + "\n")
}

fn classes(name: &str) -> Res<String> {
    let w = load_coxeter(name)?;
    let c = Classes::compute(&w);
    let mut s = String::from("label\tname\td_C\tsize\tcuspidal\texcellent\n");
    for class in &c.classes {
        let word = find_excellent(&w, class).map(|d| d.notation(&w)).unwrap_or_else(|_| "-".into());
        writeln!(s, "{}\t{}\t{}\t{}\t{}\t{}", class.label, class.name, class.d, class.size(), class.cuspidal, word)
            .unwrap();
    }
    Ok(s)
}

fn excellent(name: &str, only: Option<&str>, all: bool) -> Res<String> {
    let w = load_coxeter(name)?;
    let c = Classes::compute(&w);
    let chosen: Vec<_> = match only {
        Some(key) => {
            let i = c.find(&w, key).ok_or_else(|| CliError::new("UnknownClass", key))?;
            vec![c.get(i)]
        }
        None => c.classes.iter().filter(|x| all || x.cuspidal).collect(),
    };
    let mut s = String::from("label\td_C\texcellent\tverified\tdistinguished_exists\n");
    for class in chosen {
        let dec = find_excellent(&w, class).map_err(fail)?;
        writeln!(
            s,
            "{}\t{}\t{}\t{}\t{}",
            class.label,
            class.d,
            dec.notation(&w),
            verify_excellent(&w, &c, &dec),
            has_distinguished_factorisation(&w, class)
        )
        .unwrap();
    }
    Ok(s)
}

fn families(name: &str, spec: Option<&str>, format: Format) -> Res<String> {
    let g = load_group(name)?;
    let l = weights(&g, spec)?;
    let f = afun::families(&g, &l).map_err(fail)?;
    match format {
        Format::Tsv => {
            let mut s = String::from("family\ta\tmembers\n");
            for (i, (b, a)) in f.blocks.iter().zip(&f.a_values).enumerate() {
                writeln!(s, "{i}\t{a}\t{}", b.join(",")).unwrap();
            }
            for (i, j) in f.hasse_edges() {
                writeln!(s, "edge\t{i}\t{j}").unwrap();
            }
            Ok(s)
        }
        Format::Json | Format::Pretty => {
            let blocks: Vec<_> =
                f.blocks.iter().zip(&f.a_values).map(|(b, a)| json!({"a": a, "members": b})).collect();
            let v = json!({
                "type": g.name(),
                "weights": l.values,
                "families": blocks,
                "hasse": f.hasse_edges(),
                "hasse_labels": f.hasse_labels(),
            });
            Ok(serde_json::to_string_pretty(&v).expect("json") + "\n")
        }
    }
}

fn afun_table(name: &str, spec: Option<&str>) -> Res<String> {
    let g = load_group(name)?;
    let l = weights(&g, spec)?;
    let an = afun::Analysis::new(&g, &l).map_err(fail)?;
    let a = an.a_tilde();
    let fam = an.families();
    let report = an.check_axioms();
    let mut s = String::from("label\tdim\tb\ta\tomega_L\tfamily\n");
    for (e, label) in g.table.labels.iter().enumerate() {
        writeln!(
            s,
            "{label}\t{}\t{}\t{}\t{}\t{}",
            g.table.dim(e),
            g.b_value(e),
            a.get(label).expect("label"),
            g.omega_l(e, &l).map_err(fail)?,
            fam.block_of(label).expect("label")
        )
        .unwrap();
    }
    writeln!(s, "# axioms: {}", if report.ok() { "ok".to_string() } else { format!("{:?}", report.violations) })
        .unwrap();
    Ok(s)
}

#[derive(Deserialize)]
struct PlanFile {
    blocks: Vec<Vec<String>>,
    b: Vec<i64>,
}

fn resolve_plan(g: &Group, spec: &str) -> Res<BlockPlan> {
    if spec == "families" {
        return greenalg::family_plan(g).map_err(fail);
    }
    if let Some(ch) = spec.strip_prefix("springer:") {
        let ch = Characteristic::parse(ch).map_err(fail)?;
        let data = springerdata::load_springer(&g.name(), ch).map_err(fail)?;
        return data.plan().map_err(fail);
    }
    let src = std::fs::read_to_string(PathBuf::from(spec)).map_err(|e| CliError::new("Io", format!("{spec}: {e}")))?;
    let p: PlanFile = serde_json::from_str(&src).map_err(|e| CliError::new("BadPlan", e.to_string()))?;
    BlockPlan::new(p.blocks, p.b).map_err(fail)
}

pub(crate) fn factorize(g: &Group, plan: &BlockPlan, interp: bool, points: Option<usize>, primes: usize) -> Res<greenalg::Factorization> {
    let omega = greenalg::omega_matrix(g).map_err(fail)?;
    if interp {
        let n = points.unwrap_or_else(|| greenalg::default_points(&omega, plan));
        greenalg::factorize_interpolated(&omega, plan, n, primes).map_err(fail)
    } else {
        greenalg::block_factorize(&omega, plan).map_err(fail)
    }
}

pub(crate) fn factorization_tsv(f: &greenalg::Factorization, emit_p: bool, emit_lambda: bool) -> String {
    let mut s = String::new();
    if emit_p {
        s.push_str("# P\n");
        s.push_str(&f.p.to_tsv("u"));
    }
    if emit_lambda {
        if emit_p {
            s.push('\n');
        }
        s.push_str("# Lambda\n");
        s.push_str(&f.lambda.to_tsv("u"));
    }
    s
}

fn green(
    name: &str,
    plan: &str,
    method: Method,
    emit: GreenEmit,
    format: Format,
    points: Option<usize>,
    primes: usize,
) -> Res<String> {
    let g = load_group(name)?;
    if let GreenEmit::Omega = emit {
        let omega = greenalg::omega_matrix(&g).map_err(fail)?;
        return Ok(match format {
            Format::Tsv => omega.matrix.to_tsv("u"),
            _ => serde_json::to_string_pretty(&omega.matrix.to_json()).expect("json") + "\n",
        });
    }
    let plan = resolve_plan(&g, plan)?;
    let f = factorize(&g, &plan, matches!(method, Method::Interp), points, primes)?;
    let (ep, el) = match emit {
        GreenEmit::P => (true, false),
        GreenEmit::Lambda => (false, true),
        _ => (true, true),
    };
    Ok(match format {
        Format::Tsv => factorization_tsv(&f, ep, el),
        _ => {
            let mut v = serde_json::Map::new();
            v.insert("plan".into(), serde_json::to_value(&plan).expect("json"));
            if ep {
                v.insert("p".into(), f.p.to_json());
            }
            if el {
                v.insert("lambda".into(), f.lambda.to_json());
            }
            serde_json::to_string_pretty(&v).expect("json") + "\n"
        }
    })
}

pub(crate) fn parse_char(ch: &str) -> Res<Characteristic> {
    Characteristic::parse(ch).map_err(fail)
}

pub(crate) fn table3_tsv(xi: &bruhatxi::XiMatrix) -> Res<String> {
    let t = xi.normalized_table().map_err(fail)?;
    let mut s: String = xi.matrix.rows.iter().map(|e| format!("\t{e}")).collect();
    s.push('\n');
    for (class, row) in xi.matrix.cols.iter().zip(&t) {
        s.push_str(class);
        for p in row {
            s.push('\t');
            s.push_str(&p.display_in("q"));
        }
        s.push('\n');
    }
    Ok(s)
}

fn xi(name: &str, ch: &str, emit: XiEmit) -> Res<String> {
    let g = load_group(name)?;
    let ch = parse_char(ch)?;
    let (xi, data) = bruhatxi::xi_matrix(&g, ch).map_err(fail)?;
    let mut s = String::new();
    match emit {
        XiEmit::Table3 => s = table3_tsv(&xi)?,
        XiEmit::Matrix => s = xi.matrix.to_tsv("q"),
        XiEmit::Map => {
            let m = bruhatxi::verify_class_map(&xi, &data).map_err(fail)?;
            s.push_str("class\tO_C\tmeets\n");
            for ((c, o), (_, cands)) in m.map.iter().zip(&m.witnesses) {
                writeln!(s, "{c}\t{o}\t{}", cands.join(",")).unwrap();
            }
            writeln!(s, "# surjective: {}", m.surjective).unwrap();
        }
        XiEmit::Divisibility => {
            s.push_str("class\tcharacter\tunipotent\tdivisible\tconstant_term\tpattern_ok\n");
            for e in bruhatxi::divisibility_checks(&g, &xi, &data).map_err(fail)? {
                writeln!(
                    s,
                    "{}\t{}\t{}\t{}\t{}\t{}",
                    e.class,
                    e.character,
                    e.unipotent,
                    e.divisible,
                    e.constant_term.as_deref().unwrap_or("-"),
                    e.pattern_ok
                )
                .unwrap();
            }
        }
        XiEmit::Routes => {
            let gfq = springerdata::load_gfq(&g.name(), ch).map_err(fail)?;
            s.push_str("character\tclass\txi_route\tcount_route\tequal\n");
            for r in bruhatxi::two_route_check(&xi, &data, &gfq).map_err(fail)? {
                writeln!(s, "{}\t{}\t{}\t{}\t{}", r.character, r.class, r.xi_route, r.count_route, r.equal).unwrap();
            }
        }
    }
    Ok(s)
}

fn familymap(name: &str) -> Res<String> {
    let g = load_group(name)?;
    let m = bruhatxi::family_map(&g).map_err(fail)?;
    let mut s = String::from("class\tlabel\tfamily\n");
    for e in &m.map {
        writeln!(s, "{}\t{}\t{}", e.class, e.label, m.families[e.family].join(",")).unwrap();
    }
    writeln!(s, "# surjective: {}", m.surjective).unwrap();
    Ok(s)
}
