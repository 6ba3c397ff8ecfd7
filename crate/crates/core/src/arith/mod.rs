//! Exact scalars and the linear-algebra and polynomial kernels built on them.

mod field;
mod fp;
mod matrix;
mod poly;
mod rational;
mod subspace;

pub use field::{dot, Field};
pub use fp::{is_prime, Fp, Modulus, SCREENING_PRIME};
pub use matrix::{Matrix, Rref};
pub use poly::{Monomial, MultiPoly};
pub use rational::Rational;
pub use subspace::SubspaceBasis;
