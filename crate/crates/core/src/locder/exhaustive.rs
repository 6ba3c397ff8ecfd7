use alloc::format;
use alloc::vec;

use super::point::constraint_rows;
use crate::arith::{is_prime, Field, Fp, Rational, SubspaceBasis};
use crate::der::derivation_algebra;
use crate::error::{Error, Result};
use crate::lie::{Element, LieAlgebra};
use crate::locder::plan::constant_height;
use crate::locder::point::pointwise_image;

/// Default cap on projective points enumerated by the oracle.
pub const DEFAULT_POINT_BUDGET: u128 = 10_000_000;

/// Smallest prime the oracle accepts.
pub const MIN_ORACLE_PRIME: u64 = 5;

#[derive(Clone, Debug)]
pub struct ExhaustiveResult {
    pub prime: u64,
    pub der_dim: usize,
    pub locder: SubspaceBasis<Fp>,
    pub points_enumerated: u128,
    /// Enumeration stopped once `LocDer` reached `Der`, which is exact.
    pub early_exit: bool,
}

/// `(p^n - 1) / (p - 1)`, saturating.
pub fn projective_point_count(p: u64, n: usize) -> u128 {
    let mut total: u128 = 0;
    let mut power: u128 = 1;
    for _ in 0..n {
        total = total.saturating_add(power);
        power = power.saturating_mul(p as u128);
    }
    total
}

/// Exact `LocDer` of an algebra over `F_p`: one representative per
/// projective point (first nonzero coordinate 1), since the condition at
/// `x` and at `λx` coincide.
pub fn exhaustive_locder_mod_p(algebra: &LieAlgebra<Fp>, budget: u128) -> Result<ExhaustiveResult> {
    let n = algebra.dim();
    let modulus = *algebra.ctx();
    let p = modulus.get();
    let count = projective_point_count(p, n);
    if count > budget {
        return Err(Error::BudgetExceeded { points: count, budget });
    }
    let der = derivation_algebra(algebra);
    let mut rows = SubspaceBasis::zero(n * n, &modulus);
    let target = n * n - der.dim();
    let mut enumerated: u128 = 0;
    let mut early_exit = false;
    'outer: for lead in 0..n {
        let free = n - lead - 1;
        let mut digits = vec![0u64; free];
        loop {
            let mut x = vec![Fp::zero(&modulus); n];
            x[lead] = Fp::one(&modulus);
            for (k, d) in digits.iter().enumerate() {
                x[lead + 1 + k] = Fp::new(*d, modulus);
            }
            enumerated += 1;
            let image = pointwise_image(&der, &Element::new(x.clone()));
            for row in constraint_rows(&image, &x) {
                rows.insert(&row);
            }
            if rows.dim() == target {
                early_exit = enumerated < count;
                break 'outer;
            }
            // odometer over the free coordinates
            let mut pos = free;
            loop {
                if pos == 0 {
                    continue 'outer;
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < p {
                    break;
                }
                digits[pos] = 0;
            }
        }
    }
    Ok(ExhaustiveResult {
        prime: p,
        der_dim: der.dim(),
        locder: rows.annihilator(),
        points_enumerated: enumerated,
        early_exit,
    })
}

/// Why a prime is unsuitable for a given algebra, if it is.
fn prime_objection(algebra: &LieAlgebra<Rational>, p: u64, height: i64, budget: u128) -> Option<alloc::string::String> {
    if !is_prime(p) {
        return Some(format!("{p} is not prime"));
    }
    if p < MIN_ORACLE_PRIME {
        return Some(format!("primes below {MIN_ORACLE_PRIME} are not used"));
    }
    if (p as i128) <= height as i128 {
        return Some(format!("p must exceed every structure-constant numerator and denominator (max {height})"));
    }
    let count = projective_point_count(p, algebra.dim());
    if count > budget {
        return Some(format!("{count} projective points exceed the budget of {budget}"));
    }
    None
}

/// Choose the oracle prime: the requested one if it passes the policy,
/// otherwise the smallest admissible prime.
pub fn oracle_prime(algebra: &LieAlgebra<Rational>, requested: Option<u64>, budget: u128) -> Result<u64> {
    let height = constant_height(algebra);
    if let Some(p) = requested {
        return match prime_objection(algebra, p, height, budget) {
            Some(reason) => Err(Error::OracleDeclined { prime: p, reason }),
            None => Ok(p),
        };
    }
    let mut p = MIN_ORACLE_PRIME.max(height.saturating_add(1).max(0) as u64);
    while !is_prime(p) {
        p += 1;
    }
    match prime_objection(algebra, p, height, budget) {
        Some(reason) => Err(Error::OracleDeclined { prime: p, reason }),
        None => Ok(p),
    }
}

/// Reduce and run the oracle under the prime policy.
pub fn exact_locder_mod_p(
    algebra: &LieAlgebra<Rational>,
    requested: Option<u64>,
    budget: u128,
) -> Result<ExhaustiveResult> {
    let p = oracle_prime(algebra, requested, budget)?;
    let reduced = crate::catalog::reduce_mod_p(algebra, p)?;
    exhaustive_locder_mod_p(&reduced, budget)
}
