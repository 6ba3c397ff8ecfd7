use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{Field, Rational, SubspaceBasis};
use crate::lie::LieAlgebra;
use crate::rng::{random_integer_vector, stream_rng};

/// Where sample points come from, in order.
///
/// 1. Deterministic prefix: `e_i`, `e_i + e_j`, `e_i - e_j`.
/// 2. Random integer points, stopping after `stable_streak` consecutive
///    draws that add nothing, or after `max_random` draws.
/// 3. Orbit stage (optional): small-support integer seeds ordered by
///    support, each followed by `orbit_points` images `exp(ad u)(seed)` with
///    `u` a random element of `[L, L]`.
///
/// Generic points rarely bind: the constraints that cut `LocDer` down to
/// `Der` tend to live on special loci (weights vanishing, nilpotent parts).
/// Small-support seeds hit those loci, and the inner automorphisms
/// `exp(ad u)` spread each seed across its orbit, where constraints are
/// conjugated rather than repeated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SamplingPlan {
    pub seed: u64,
    pub random_range: i64,
    pub stable_streak: usize,
    pub max_random: usize,
    pub orbit: Option<OrbitStage>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitStage {
    pub max_support: usize,
    /// Coefficient bound for seeds; `None` picks
    /// `max(6, largest structure-constant height + 1)`.
    pub height: Option<i64>,
    pub orbit_points: usize,
    /// Maximum number of candidate points drawn in this stage.
    pub candidate_budget: usize,
}

impl Default for OrbitStage {
    fn default() -> Self {
        OrbitStage { max_support: 3, height: None, orbit_points: 4, candidate_budget: 20_000 }
    }
}

impl SamplingPlan {
    pub fn new(seed: u64) -> Self {
        SamplingPlan { seed, random_range: 10, stable_streak: 10, max_random: 500, orbit: Some(OrbitStage::default()) }
    }

    /// Prefix and random stages only.
    pub fn without_orbit(mut self) -> Self {
        self.orbit = None;
        self
    }

    pub fn with_max_random(mut self, max_random: usize) -> Self {
        self.max_random = max_random;
        self
    }
}

impl Default for SamplingPlan {
    fn default() -> Self {
        Self::new(0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Stage {
    Prefix,
    Random,
    Orbit,
}

/// Largest `max(|numerator|, denominator)` over the structure constants.
pub fn constant_height(algebra: &LieAlgebra<Rational>) -> i64 {
    let n = algebra.dim();
    let mut h = 0i64;
    for i in 0..n {
        for j in 0..n {
            for c in algebra.bracket_basis(i, j) {
                if c.is_zero() {
                    continue;
                }
                let num = c.numer().magnitude().clone();
                let den = c.denom().magnitude().clone();
                let m = if num > den { num } else { den };
                h = h.max(i64::try_from(m).unwrap_or(i64::MAX));
            }
        }
    }
    h
}

/// `exp(ad u)(x) = Σ_k ad_u^k(x) / k!`; `None` if `ad_u` is not nilpotent on `x`.
pub fn exp_ad_apply(algebra: &LieAlgebra<Rational>, u: &[Rational], x: &[Rational]) -> Option<Vec<Rational>> {
    let n = algebra.dim();
    let u = crate::lie::Element::new(u.to_vec());
    let mut out = x.to_vec();
    let mut term = crate::lie::Element::new(x.to_vec());
    for k in 1..=n + 1 {
        term = algebra.bracket(&term, &u).scale(&Rational::new(1, k as i64));
        if term.is_zero() {
            return Some(out);
        }
        for (o, t) in out.iter_mut().zip(term.coords()) {
            *o = o.add(t);
        }
    }
    None
}

/// Candidate stream for a plan. The random stage listens to
/// [`Candidates::feedback`] to decide when it has stabilised.
pub struct Candidates<'a> {
    algebra: &'a LieAlgebra<Rational>,
    plan: &'a SamplingPlan,
    stage: Stage,
    prefix: Vec<Vec<Rational>>,
    prefix_pos: usize,
    random_rng: ChaCha8Rng,
    random_drawn: usize,
    streak: usize,
    orbit: Option<OrbitState>,
    pending: Vec<Vec<Rational>>,
}

struct OrbitState {
    support: usize,
    indices: Vec<usize>,
    coeffs: Vec<i64>,
    height: i64,
    emitted: usize,
    budget: usize,
    points: usize,
    derived: SubspaceBasis<Rational>,
    rng: ChaCha8Rng,
    exhausted: bool,
}

impl OrbitState {
    /// Advance `(indices, coeffs)` to the next seed; support grows when the
    /// current size is exhausted.
    fn next_seed(&mut self, n: usize, max_support: usize) -> Option<Vec<Rational>> {
        if self.exhausted {
            return None;
        }
        let seed = self.current(n);
        if !self.bump_coeffs() && !self.bump_indices(n) {
            self.support += 1;
            if self.support > max_support.min(n) {
                self.exhausted = true;
            } else {
                self.indices = (0..self.support).collect();
                self.coeffs = vec![-self.height; self.support - 1];
            }
        }
        Some(seed)
    }

    fn current(&self, n: usize) -> Vec<Rational> {
        let mut v = vec![Rational::integer(0); n];
        v[self.indices[0]] = Rational::integer(1);
        for (&i, &c) in self.indices[1..].iter().zip(&self.coeffs) {
            v[i] = Rational::integer(c);
        }
        v
    }

    fn bump_coeffs(&mut self) -> bool {
        for c in self.coeffs.iter_mut().rev() {
            if *c < self.height {
                *c += if *c == -1 { 2 } else { 1 };
                return true;
            }
            *c = -self.height;
        }
        false
    }

    fn bump_indices(&mut self, n: usize) -> bool {
        let s = self.indices.len();
        for pos in (0..s).rev() {
            if self.indices[pos] < n - s + pos {
                self.indices[pos] += 1;
                for q in pos + 1..s {
                    self.indices[q] = self.indices[q - 1] + 1;
                }
                self.coeffs.iter_mut().for_each(|c| *c = -self.height);
                return true;
            }
        }
        false
    }

    fn random_derived(&mut self, n: usize) -> Vec<Rational> {
        let mut u = vec![Rational::integer(0); n];
        for r in self.derived.vectors() {
            let c = Rational::integer(self.rng.random_range(-2..=2));
            for (a, b) in u.iter_mut().zip(r) {
                *a = a.add_mul(&c, b);
            }
        }
        u
    }
}

impl<'a> Candidates<'a> {
    pub fn new(algebra: &'a LieAlgebra<Rational>, plan: &'a SamplingPlan) -> Self {
        let n = algebra.dim();
        let mut prefix = Vec::new();
        let unit = |i: usize| {
            let mut v = vec![Rational::integer(0); n];
            v[i] = Rational::integer(1);
            v
        };
        for i in 0..n {
            prefix.push(unit(i));
        }
        for i in 0..n {
            for j in i + 1..n {
                let mut s = unit(i);
                s[j] = Rational::integer(1);
                prefix.push(s.clone());
                s[j] = Rational::integer(-1);
                prefix.push(s);
            }
        }
        let orbit = plan.orbit.as_ref().filter(|_| n > 0).map(|o| {
            let height = o.height.unwrap_or_else(|| (constant_height(algebra) + 1).max(6));
            OrbitState {
                support: 1,
                indices: vec![0],
                coeffs: Vec::new(),
                height,
                emitted: 0,
                budget: o.candidate_budget,
                points: o.orbit_points,
                derived: algebra.derived_algebra(),
                rng: stream_rng(plan.seed, 2),
                exhausted: false,
            }
        });
        Candidates {
            algebra,
            plan,
            stage: Stage::Prefix,
            prefix,
            prefix_pos: 0,
            random_rng: stream_rng(plan.seed, 1),
            random_drawn: 0,
            streak: 0,
            orbit,
            pending: Vec::new(),
        }
    }

    /// Report whether the last candidate tightened the bound.
    pub fn feedback(&mut self, grew: bool) {
        if self.stage == Stage::Random {
            self.streak = if grew { 0 } else { self.streak + 1 };
        }
    }

    pub fn next_point(&mut self) -> Option<(Stage, Vec<Rational>)> {
        let n = self.algebra.dim();
        if self.stage == Stage::Prefix {
            if let Some(v) = self.prefix.get(self.prefix_pos) {
                self.prefix_pos += 1;
                return Some((Stage::Prefix, v.clone()));
            }
            self.stage = Stage::Random;
        }
        if self.stage == Stage::Random {
            if self.random_drawn < self.plan.max_random && self.streak < self.plan.stable_streak && n > 0 {
                self.random_drawn += 1;
                let v = random_integer_vector::<Rational>(&mut self.random_rng, n, self.plan.random_range, &());
                return Some((Stage::Random, v));
            }
            self.stage = Stage::Orbit;
        }
        let max_support = self.plan.orbit.as_ref()?.max_support;
        let orbit = self.orbit.as_mut()?;
        if orbit.emitted >= orbit.budget {
            return None;
        }
        if self.pending.is_empty() {
            let seed = orbit.next_seed(n, max_support)?;
            if !orbit.derived.is_zero() {
                for _ in 0..orbit.points {
                    let u = orbit.random_derived(n);
                    if let Some(y) = exp_ad_apply(self.algebra, &u, &seed) {
                        self.pending.push(y);
                    }
                }
                self.pending.reverse();
            }
            orbit.emitted += 1;
            return Some((Stage::Orbit, seed));
        }
        orbit.emitted += 1;
        self.pending.pop().map(|y| (Stage::Orbit, y))
    }

    pub fn random_drawn(&self) -> usize {
        self.random_drawn
    }
}
