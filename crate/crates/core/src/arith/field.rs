use core::fmt::{Debug, Display};

/// An exact field. Elements carry enough context (the modulus, for prime
/// fields) to produce constants of the same field; arithmetic between
/// elements of different fields is a logic error and panics.
pub trait Field: Clone + PartialEq + Eq + Debug + Display + Send + Sync {
    /// Data needed to build constants: `()` for the rationals, the modulus
    /// for a prime field.
    type Ctx: Clone + PartialEq + Eq + Debug + Send + Sync;

    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_i64(value: i64, ctx: &Self::Ctx) -> Self;
    fn ctx(&self) -> Self::Ctx;

    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one(&self.ctx())
    }

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }

    /// `self + a * b`, the inner step of every elimination loop.
    fn add_mul(&self, a: &Self, b: &Self) -> Self {
        self.add(&a.mul(b))
    }
}

/// Dot product of two equal-length slices.
pub fn dot<F: Field>(a: &[F], b: &[F], ctx: &F::Ctx) -> F {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).filter(|(x, y)| !x.is_zero() && !y.is_zero()).fold(F::zero(ctx), |acc, (x, y)| acc.add_mul(x, y))
}
