use exactpoly::Field;

/// Integers modulo a prime below `2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp<const P: u64>(pub u64);

impl<const P: u64> Fp<P> {
    pub fn from_big(x: &num_bigint::BigInt) -> Self {
        use num_integer::Integer;
        let r = x.mod_floor(&num_bigint::BigInt::from(P));
        Fp(u64::try_from(r).expect("reduced"))
    }

    fn pow(self, mut e: u64) -> Self {
        let (mut acc, mut b) = (1u64, self.0);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % P;
            }
            b = b * b % P;
            e >>= 1;
        }
        Fp(acc)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn from_i64(k: i64) -> Self {
        Fp(k.rem_euclid(P as i64) as u64)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, o: &Self) -> Self {
        Fp((self.0 + o.0) % P)
    }
    fn sub(&self, o: &Self) -> Self {
        Fp((self.0 + P - o.0) % P)
    }
    fn mul(&self, o: &Self) -> Self {
        Fp(self.0 * o.0 % P)
    }
    fn neg(&self) -> Self {
        Fp((P - self.0) % P)
    }
    fn inv(&self) -> Option<Self> {
        (self.0 != 0).then(|| self.pow(P - 2))
    }
}

pub const PRIMES: [u64; 8] =
    [2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549, 2147483543, 2147483497];
