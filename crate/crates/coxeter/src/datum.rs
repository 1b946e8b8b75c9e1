use crate::zphi::Zphi;
use crate::CoxeterError;
use exactpoly::Cyc;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    A(usize),
    B(usize),
    D(usize),
    I2(u32),
    H3,
    H4,
    F4,
    /// A parabolic subgroup; the string is its component decomposition.
    Parabolic(String),
}

/// Type, labels and Coxeter/Cartan data of a finite Coxeter system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterDatum {
    pub kind: Kind,
    pub labels: Vec<String>,
    pub coxeter: Vec<Vec<u32>>,
    /// `cartan[i][j] = <alpha_i^vee, alpha_j>`; absent for dihedral types,
    /// which are realised through angles instead.
    pub cartan: Option<Vec<Vec<Zphi>>>,
}

fn labels(prefix: &[&str], n: usize, from: usize) -> Vec<String> {
    let mut l: Vec<String> = prefix.iter().map(|s| s.to_string()).collect();
    l.extend((from..from + n - prefix.len()).map(|i| format!("s{i}")));
    l
}

fn coxeter_from_cartan(c: &[Vec<Zphi>]) -> Vec<Vec<u32>> {
    let n = c.len();
    let mut m = vec![vec![2u32; n]; n];
    for i in 0..n {
        m[i][i] = 1;
        for j in 0..n {
            if i == j {
                continue;
            }
            let p = c[i][j] * c[j][i];
            m[i][j] = match (p.a, p.b) {
                (0, 0) => 2,
                (1, 0) => 3,
                (2, 0) => 4,
                (3, 0) => 6,
                (1, 1) => 5,
                _ => panic!("unsupported Cartan product {p}"),
            };
        }
    }
    m
}

fn chain(n: usize, bonds: &[(usize, usize, Zphi, Zphi)]) -> Vec<Vec<Zphi>> {
    let mut c = vec![vec![Zphi::ZERO; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = Zphi::int(2);
    }
    for &(i, j, a, b) in bonds {
        c[i][j] = a;
        c[j][i] = b;
    }
    c
}

impl CoxeterDatum {
    pub fn new(kind: Kind) -> Result<CoxeterDatum, CoxeterError> {
        let one = Zphi::int(-1);
        let unsupported = || CoxeterError::UnsupportedType(format!("{kind:?}"));
        let (labels, cartan) = match kind {
            Kind::A(n) if n >= 1 => {
                let b: Vec<_> = (0..n - 1).map(|i| (i, i + 1, one, one)).collect();
                (labels(&[], n, 1), chain(n, &b))
            }
            Kind::B(n) if n >= 2 => {
                let mut b = vec![(0, 1, Zphi::int(-2), one)];
                b.extend((1..n - 1).map(|i| (i, i + 1, one, one)));
                let l = if n == 2 { vec!["t".into(), "s".into()] } else { labels(&["t"], n, 1) };
                (l, chain(n, &b))
            }
            Kind::D(n) if n >= 4 => {
                let mut b = vec![(0, 2, one, one)];
                b.extend((1..n - 1).map(|i| (i, i + 1, one, one)));
                (labels(&["u"], n, 1), chain(n, &b))
            }
            Kind::I2(m) if m >= 2 => {
                let coxeter = vec![vec![1, m], vec![m, 1]];
                return Ok(CoxeterDatum { kind, labels: labels(&[], 2, 1), coxeter, cartan: None });
            }
            Kind::H3 => (labels(&[], 3, 1), chain(3, &[(0, 1, -Zphi::new(0, 1), -Zphi::new(0, 1)), (1, 2, one, one)])),
            Kind::H4 => (
                labels(&[], 4, 1),
                chain(4, &[(0, 1, -Zphi::new(0, 1), -Zphi::new(0, 1)), (1, 2, one, one), (2, 3, one, one)]),
            ),
            Kind::F4 => (
                labels(&[], 4, 1),
                chain(4, &[(0, 1, one, one), (1, 2, one, Zphi::int(-2)), (2, 3, one, one)]),
            ),
            _ => return Err(unsupported()),
        };
        let coxeter = coxeter_from_cartan(&cartan);
        Ok(CoxeterDatum { kind, labels, coxeter, cartan: Some(cartan) })
    }

    /// Parses names such as `A3`, `B2`, `C3`, `D4`, `G2`, `I2(5)`, `H3`, `F4`.
    pub fn parse(name: &str) -> Result<CoxeterDatum, CoxeterError> {
        let s = name.trim().to_ascii_uppercase();
        let bad = || CoxeterError::UnsupportedType(name.to_string());
        if let Some(m) = s.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
            return CoxeterDatum::new(Kind::I2(m.parse().map_err(|_| bad())?));
        }
        if let Some(m) = s.strip_prefix("I2_") {
            return CoxeterDatum::new(Kind::I2(m.parse().map_err(|_| bad())?));
        }
        let (letter, rank) = s.split_at(1.min(s.len()));
        let rank: usize = rank.parse().map_err(|_| bad())?;
        CoxeterDatum::from_parts(letter, rank)
    }

    pub fn from_parts(letter: &str, rank: usize) -> Result<CoxeterDatum, CoxeterError> {
        let kind = match (letter.to_ascii_uppercase().as_str(), rank) {
            ("A", n) => Kind::A(n),
            ("B" | "C", n) => Kind::B(n),
            ("D", n) => Kind::D(n),
            ("G", 2) => Kind::I2(6),
            ("H", 3) => Kind::H3,
            ("H", 4) => Kind::H4,
            ("F", 4) => Kind::F4,
            _ => return Err(CoxeterError::UnsupportedType(format!("{letter}{rank}"))),
        };
        CoxeterDatum::new(kind)
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn name(&self) -> String {
        match &self.kind {
            Kind::A(n) => format!("A{n}"),
            Kind::B(n) => format!("B{n}"),
            Kind::D(n) => format!("D{n}"),
            Kind::I2(m) => format!("I2({m})"),
            Kind::H3 => "H3".into(),
            Kind::H4 => "H4".into(),
            Kind::F4 => "F4".into(),
            Kind::Parabolic(s) => s.clone(),
        }
    }

    /// Restriction to the generators `j` (in the given order).
    pub fn restrict(&self, j: &[usize]) -> CoxeterDatum {
        let labels: Vec<String> = j.iter().map(|&i| self.labels[i].clone()).collect();
        let coxeter: Vec<Vec<u32>> = j.iter().map(|&a| j.iter().map(|&b| self.coxeter[a][b]).collect()).collect();
        let cartan = match &self.cartan {
            Some(c) => Some(j.iter().map(|&a| j.iter().map(|&b| c[a][b]).collect()).collect()),
            None if j.len() < 2 => Some(chain(j.len(), &[])),
            None => None,
        };
        let name = components(&coxeter).iter().map(|c| c.name.clone()).collect::<Vec<_>>().join("x");
        let kind = if j.len() == self.rank() && j.iter().enumerate().all(|(a, &b)| a == b) {
            self.kind.clone()
        } else {
            Kind::Parabolic(if name.is_empty() { "1".into() } else { name })
        };
        CoxeterDatum { kind, labels, coxeter, cartan }
    }

    /// Degrees of the basic invariants.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = components(&self.coxeter).into_iter().flat_map(|c| c.degrees).collect();
        d.sort();
        d
    }

    pub fn order(&self) -> u64 {
        self.degrees().iter().map(|&d| d as u64).product()
    }

    /// Number of reflections, i.e. the sum of `d - 1` over the degrees.
    pub fn num_reflections(&self) -> usize {
        self.degrees().iter().map(|&d| d as usize - 1).sum()
    }

    /// Matrices of the generators on the reflection representation, in the
    /// basis of simple roots (`s_i(alpha_j) = alpha_j - a_ij alpha_i`).
    pub fn generator_matrices(&self) -> Vec<Vec<Vec<Cyc>>> {
        let n = self.rank();
        let a: Vec<Vec<Cyc>> = match (&self.cartan, &self.kind) {
            (Some(c), _) => c.iter().map(|r| r.iter().map(|x| x.to_cyc()).collect()).collect(),
            (None, Kind::I2(m)) => {
                let c = -Cyc::two_cos(2 * m, 1);
                vec![vec![Cyc::from_int(2), c.clone()], vec![c, Cyc::from_int(2)]]
            }
            _ => unreachable!("dihedral data without an order"),
        };
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|r| {
                        (0..n)
                            .map(|col| {
                                let mut x = if r == col { Cyc::one() } else { Cyc::zero() };
                                if r == i {
                                    x = &x - &a[i][col];
                                }
                                x
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }
}

/// A connected component of a Coxeter graph with its recognised type.
#[derive(Clone, Debug)]
pub struct Component {
    pub nodes: Vec<usize>,
    pub name: String,
    pub degrees: Vec<u32>,
}

pub fn components(m: &[Vec<u32>]) -> Vec<Component> {
    let n = m.len();
    let mut seen = vec![false; n];
    let mut out = vec![];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut nodes = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < nodes.len() {
            let a = nodes[k];
            for b in 0..n {
                if !seen[b] && m[a][b] >= 3 {
                    seen[b] = true;
                    nodes.push(b);
                }
            }
            k += 1;
        }
        nodes.sort();
        let (name, degrees) = recognise(m, &nodes);
        out.push(Component { nodes, name, degrees });
    }
    out
}

fn recognise(m: &[Vec<u32>], nodes: &[usize]) -> (String, Vec<u32>) {
    let k = nodes.len();
    let edges: Vec<(usize, usize, u32)> = nodes
        .iter()
        .flat_map(|&a| nodes.iter().filter(move |&&b| b > a && m[a][b] >= 3).map(move |&b| (a, b, m[a][b])))
        .collect();
    let deg = |v: usize| edges.iter().filter(|e| e.0 == v || e.1 == v).count();
    let a_type = |k: usize| (format!("A{k}"), (2..=k as u32 + 1).collect());
    if k == 1 {
        return a_type(1);
    }
    if k == 2 {
        let mm = edges[0].2;
        return match mm {
            3 => a_type(2),
            4 => ("B2".into(), vec![2, 4]),
            6 => ("G2".into(), vec![2, 6]),
            _ => (format!("I2({mm})"), vec![2, mm]),
        };
    }
    if nodes.iter().any(|&v| deg(v) == 3) {
        let mut d: Vec<u32> = (1..k as u32).map(|i| 2 * i).collect();
        d.push(k as u32);
        return (format!("D{k}"), d);
    }
    let heavy: Vec<&(usize, usize, u32)> = edges.iter().filter(|e| e.2 > 3).collect();
    if heavy.is_empty() {
        return a_type(k);
    }
    let (a, b, mm) = *heavy[0];
    let at_end = deg(a) == 1 || deg(b) == 1;
    match (mm, at_end, k) {
        (4, true, _) => (format!("B{k}"), (1..=k as u32).map(|i| 2 * i).collect()),
        (4, false, 4) => ("F4".into(), vec![2, 6, 8, 12]),
        (5, true, 3) => ("H3".into(), vec![2, 6, 10]),
        (5, true, 4) => ("H4".into(), vec![2, 12, 20, 30]),
        _ => panic!("unrecognised Coxeter graph"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(CoxeterDatum::parse("B2").unwrap().order(), 8);
        assert_eq!(CoxeterDatum::parse("F4").unwrap().order(), 1152);
        assert_eq!(CoxeterDatum::parse("H3").unwrap().order(), 120);
        assert_eq!(CoxeterDatum::parse("D4").unwrap().order(), 192);
        assert_eq!(CoxeterDatum::parse("A3").unwrap().order(), 24);
        assert_eq!(CoxeterDatum::parse("I2(7)").unwrap().order(), 14);
    }

    #[test]
    fn labels_follow_diagrams() {
        assert_eq!(CoxeterDatum::parse("B2").unwrap().labels, ["t", "s"]);
        assert_eq!(CoxeterDatum::parse("B3").unwrap().labels, ["t", "s1", "s2"]);
        assert_eq!(CoxeterDatum::parse("D4").unwrap().labels, ["u", "s1", "s2", "s3"]);
        let f4 = CoxeterDatum::parse("F4").unwrap();
        assert_eq!(f4.coxeter[1][2], 4);
        assert_eq!(f4.restrict(&[0, 1, 2]).name(), "B3");
        assert_eq!(f4.restrict(&[0, 2]).name(), "A1xA1");
        let d4 = CoxeterDatum::parse("D4").unwrap();
        assert_eq!(d4.restrict(&[0, 1, 3]).name(), "A1xA1xA1");
    }

    #[test]
    fn unsupported() {
        assert!(CoxeterDatum::parse("E6").is_err());
        assert!(CoxeterDatum::parse("D3").is_err());
    }
}
