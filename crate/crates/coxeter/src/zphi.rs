use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

/// `a + b*phi` with `phi^2 = phi + 1`, enough for every root coordinate of
/// the H types and exact for the crystallographic ones (`b = 0`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Zphi {
    pub a: i64,
    pub b: i64,
}

impl Zphi {
    pub const ZERO: Zphi = Zphi { a: 0, b: 0 };

    pub fn int(a: i64) -> Zphi {
        Zphi { a, b: 0 }
    }

    pub fn new(a: i64, b: i64) -> Zphi {
        Zphi { a, b }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Sign of the real number, decided with integer arithmetic:
    /// `2(a + b phi) = x + y sqrt5` with `x = 2a + b`, `y = b`.
    pub fn sign(self) -> Ordering {
        let (x, y) = ((2 * self.a + self.b) as i128, self.b as i128);
        match (x.cmp(&0), y.cmp(&0)) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (s, t) if s == t => s,
            (sx, _) => match (x * x).cmp(&(5 * y * y)) {
                Ordering::Greater => sx,
                Ordering::Less => sx.reverse(),
                Ordering::Equal => Ordering::Equal,
            },
        }
    }

    pub fn to_cyc(self) -> exactpoly::Cyc {
        exactpoly::Cyc::from_zphi(self.a, self.b)
    }
}

impl std::fmt::Display for Zphi {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}phi"),
            (a, b) if b < 0 => write!(f, "{a}{b}phi"),
            (a, b) => write!(f, "{a}+{b}phi"),
        }
    }
}

impl Add for Zphi {
    type Output = Zphi;
    fn add(self, o: Zphi) -> Zphi {
        Zphi::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for Zphi {
    type Output = Zphi;
    fn sub(self, o: Zphi) -> Zphi {
        Zphi::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for Zphi {
    type Output = Zphi;
    fn neg(self) -> Zphi {
        Zphi::new(-self.a, -self.b)
    }
}

impl Mul for Zphi {
    type Output = Zphi;
    fn mul(self, o: Zphi) -> Zphi {
        Zphi::new(self.a * o.a + self.b * o.b, self.a * o.b + self.b * o.a + self.b * o.b)
    }
}
