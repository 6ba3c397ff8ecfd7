use core::fmt;

use super::field::Field;
use crate::error::{Error, Result};

/// A prime modulus below 2^63, checked at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 63 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Modulus(p))
    }

    pub const fn get(self) -> u64 {
        self.0
    }
}

/// 2^61 - 1. Used as a stand-in for characteristic zero when screening
/// sample points; never used to certify anything.
pub const SCREENING_PRIME: u64 = (1 << 61) - 1;

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Element of the prime field F_p.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    modulus: Modulus,
}

impl Fp {
    pub fn new(value: u64, modulus: Modulus) -> Self {
        Fp { value: value % modulus.get(), modulus }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    /// Representative in (-p/2, p/2].
    pub fn balanced(&self) -> i128 {
        let p = self.modulus.get();
        if self.value > p / 2 {
            self.value as i128 - p as i128
        } else {
            self.value as i128
        }
    }

    fn same_field(&self, rhs: &Self) -> u64 {
        assert_eq!(self.modulus, rhs.modulus, "mixed prime fields");
        self.modulus.get()
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus.get())
    }
}

impl Field for Fp {
    type Ctx = Modulus;

    fn zero(ctx: &Modulus) -> Self {
        Fp::new(0, *ctx)
    }

    fn one(ctx: &Modulus) -> Self {
        Fp::new(1, *ctx)
    }

    fn from_i64(value: i64, ctx: &Modulus) -> Self {
        let p = ctx.get() as i128;
        Fp::new((value as i128).rem_euclid(p) as u64, *ctx)
    }

    fn ctx(&self) -> Modulus {
        self.modulus
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn add(&self, rhs: &Self) -> Self {
        let p = self.same_field(rhs);
        let s = self.value as u128 + rhs.value as u128;
        Fp { value: (s % p as u128) as u64, modulus: self.modulus }
    }

    fn sub(&self, rhs: &Self) -> Self {
        let p = self.same_field(rhs);
        let v = if self.value >= rhs.value { self.value - rhs.value } else { p - (rhs.value - self.value) };
        Fp { value: v, modulus: self.modulus }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let p = self.same_field(rhs);
        Fp { value: mul_mod(self.value, rhs.value, p), modulus: self.modulus }
    }

    fn neg(&self) -> Self {
        let p = self.modulus.get();
        Fp { value: if self.value == 0 { 0 } else { p - self.value }, modulus: self.modulus }
    }

    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        let p = self.modulus.get();
        Some(Fp { value: pow_mod(self.value, p - 2, p), modulus: self.modulus })
    }
}
