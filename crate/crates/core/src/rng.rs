//! Seed derivation. Every stochastic step takes its own stream derived from
//! the master seed, so results do not depend on evaluation order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::Field;

/// SplitMix64 finaliser applied to `master` mixed with `stream`.
pub fn derive_seed(master: u64, stream: u64) -> u64 {
    let mut z = master ^ stream.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn stream_rng(master: u64, stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(master, stream))
}

/// Vector with integer coordinates drawn uniformly from `[-range, range]`.
pub fn random_integer_vector<F: Field>(rng: &mut impl Rng, dim: usize, range: i64, ctx: &F::Ctx) -> alloc::vec::Vec<F> {
    (0..dim).map(|_| F::from_i64(rng.random_range(-range..=range), ctx)).collect()
}
