use alloc::vec::Vec;

use super::jordan::ProperCertificate;
use super::plan::{Candidates, SamplingPlan, Stage};
use super::point::constraint_rows;
use crate::arith::{Field, Fp, Modulus, Rational, SubspaceBasis, SCREENING_PRIME};
use crate::der::{derivation_algebra, DerivationAlgebra};
use crate::error::Result;
use crate::lie::{flat_index, Element, LieAlgebra};

/// Tracks the constraint row space modulo a large prime to decide cheaply
/// which candidate points carry new information.
pub(crate) struct Screen {
    n: usize,
    modulus: Modulus,
    der: Vec<Vec<Fp>>,
    rows: SubspaceBasis<Fp>,
    target_rank: usize,
}

impl Screen {
    pub(crate) fn new(der: &DerivationAlgebra<Rational>) -> Result<Self> {
        let n = der.algebra().dim();
        let modulus = Modulus::new(SCREENING_PRIME)?;
        let reduced = der
            .subspace()
            .vectors()
            .iter()
            .map(|v| v.iter().map(|c| c.reduce_mod(modulus)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Screen {
            n,
            modulus,
            der: reduced,
            rows: SubspaceBasis::zero(n * n, &modulus),
            target_rank: n * n - der.dim(),
        })
    }

    pub(crate) fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub(crate) fn reduce_point(&self, x: &[Rational]) -> Result<Vec<Fp>> {
        x.iter().map(|c| c.reduce_mod(self.modulus)).collect()
    }

    /// `V(x)` modulo the screening prime, from the reduced `Der` basis.
    pub(crate) fn image(&self, x: &[Fp]) -> SubspaceBasis<Fp> {
        let n = self.n;
        let cols = self
            .der
            .iter()
            .map(|d| {
                let mut out = alloc::vec![Fp::zero(&self.modulus); n];
                for (b, xb) in x.iter().enumerate() {
                    if xb.is_zero() {
                        continue;
                    }
                    for (a, o) in out.iter_mut().enumerate() {
                        let e = &d[flat_index(n, a, b)];
                        if !e.is_zero() {
                            *o = o.add_mul(xb, e);
                        }
                    }
                }
                out
            })
            .collect();
        SubspaceBasis::span(n, cols, &self.modulus)
    }

    /// Insert the constraints of `x`; returns whether the rank grew.
    pub(crate) fn offer(&mut self, x: &[Rational]) -> Result<bool> {
        let xp = self.reduce_point(x)?;
        if xp.iter().all(Fp::is_zero) {
            return Ok(false);
        }
        let mut grew = false;
        for row in constraint_rows(&self.image(&xp), &xp) {
            grew |= self.rows.insert(&row);
        }
        Ok(grew)
    }

    pub(crate) fn done(&self) -> bool {
        self.rows.dim() >= self.target_rank
    }
}

/// Result of [`locder_upper_bound`].
#[derive(Clone, Debug)]
pub struct UpperBound {
    pub der_dim: usize,
    /// Subspace of the `n²`-dimensional operator space containing `LocDer(L)`.
    pub bound: SubspaceBasis<Rational>,
    /// Candidates examined, across all stages.
    pub sample_count: usize,
    /// Candidates whose constraints entered the exact computation.
    pub active_points: Vec<Element<Rational>>,
    pub random_drawn: usize,
    pub orbit_drawn: usize,
}

impl UpperBound {
    pub fn dim(&self) -> usize {
        self.bound.dim()
    }
}

/// Intersect point constraints over the plan.
///
/// Candidates are screened modulo `2^61 - 1`; the bound itself is recomputed
/// over `Q` from the points that increased the screened rank, so it is an
/// exact rational subspace containing `LocDer(L)` regardless of screening.
pub fn locder_upper_bound(der: &DerivationAlgebra<Rational>, plan: &SamplingPlan) -> Result<UpperBound> {
    let algebra = der.algebra();
    let n = algebra.dim();
    let mut screen = Screen::new(der)?;
    let mut candidates = Candidates::new(algebra, plan);
    let mut active = Vec::new();
    let mut sample_count = 0;
    let mut orbit_drawn = 0;
    while !screen.done() {
        let Some((stage, x)) = candidates.next_point() else { break };
        sample_count += 1;
        if stage == Stage::Orbit {
            orbit_drawn += 1;
        }
        let grew = screen.offer(&x)?;
        candidates.feedback(grew);
        if grew {
            active.push(Element::new(x));
        }
    }
    let mut rows = SubspaceBasis::zero(n * n, &());
    for x in &active {
        let image = SubspaceBasis::span(n, der.evaluate_at(x), &());
        for row in constraint_rows(&image, x.coords()) {
            rows.insert(&row);
        }
    }
    Ok(UpperBound {
        der_dim: der.dim(),
        bound: rows.annihilator(),
        sample_count,
        active_points: active,
        random_drawn: candidates.random_drawn(),
        orbit_drawn,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Sampled bound equals `Der(L)`, so `LocDer(L) = Der(L)` over `Q`.
    CertifiedEqual,
    /// A verified local derivation outside `Der(L)` is attached.
    CertifiedProper,
    /// Exact `LocDer` of the reduction modulo a prime.
    ExactModP,
    /// Bound exceeds `Der(L)` and no certificate applies.
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::CertifiedEqual => "CertifiedEqual",
            Verdict::CertifiedProper => "CertifiedProper",
            Verdict::ExactModP => "ExactModP",
            Verdict::Inconclusive => "Inconclusive",
        }
    }
}

#[derive(Clone, Debug)]
pub struct LocDerReport {
    pub der_dim: usize,
    pub bound_dim: Option<usize>,
    pub exact_dim: Option<usize>,
    pub verdict: Verdict,
    pub sample_count: usize,
    pub active_points: usize,
    pub prime: Option<u64>,
    pub bound: Option<SubspaceBasis<Rational>>,
    pub certificates: Vec<ProperCertificate>,
}

/// `Der ⊆ LocDer ⊆ bound`; equal dimensions settle `LocDer = Der`.
pub fn certify_locder_equals_der(algebra: &LieAlgebra<Rational>, plan: &SamplingPlan) -> Result<LocDerReport> {
    let der = derivation_algebra(algebra);
    let ub = locder_upper_bound(&der, plan)?;
    let verdict = if ub.dim() == ub.der_dim { Verdict::CertifiedEqual } else { Verdict::Inconclusive };
    Ok(LocDerReport {
        der_dim: ub.der_dim,
        bound_dim: Some(ub.dim()),
        exact_dim: None,
        verdict,
        sample_count: ub.sample_count,
        active_points: ub.active_points.len(),
        prime: None,
        bound: Some(ub.bound),
        certificates: Vec::new(),
    })
}
