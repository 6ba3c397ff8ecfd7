use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use rand::Rng;

use super::bound::{certify_locder_equals_der, LocDerReport, Verdict};
use super::plan::SamplingPlan;
use super::point::is_local_at;
use crate::arith::{Field, MultiPoly, Rational};
use crate::catalog::abelian_nilradical_algebra;
use crate::der::{derivation_algebra, is_derivation};
use crate::error::{Error, Result};
use crate::lie::{Element, LieAlgebra, LinearOperator};
use crate::rng::stream_rng;

/// Jordan data `(λ, k)` of `ad_x` on an abelian nilradical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanSpec {
    blocks: Vec<(Rational, usize)>,
}

impl JordanSpec {
    pub fn new(blocks: Vec<(Rational, usize)>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidJordanSpec(String::from("no blocks")));
        }
        if blocks.iter().any(|(_, k)| *k == 0) {
            return Err(Error::InvalidJordanSpec(String::from("block sizes must be positive")));
        }
        if blocks.iter().all(|(l, _)| l.is_zero()) {
            return Err(Error::AllEigenvaluesZero);
        }
        Ok(JordanSpec { blocks })
    }

    pub fn from_i64(blocks: &[(i64, usize)]) -> Result<Self> {
        Self::new(blocks.iter().map(|&(l, k)| (Rational::integer(l), k)).collect())
    }

    pub fn blocks(&self) -> &[(Rational, usize)] {
        &self.blocks
    }

    pub fn total_size(&self) -> usize {
        self.blocks.iter().map(|(_, k)| k).sum()
    }

    /// Zero-based offset (among `e1..en`) and size of the first block with
    /// size at least 2.
    pub fn first_big_block(&self) -> Option<(usize, usize)> {
        let mut offset = 0;
        for (_, k) in &self.blocks {
            if *k >= 2 {
                return Some((offset, *k));
            }
            offset += k;
        }
        None
    }

    pub fn is_diagonalizable(&self) -> bool {
        self.first_big_block().is_none()
    }
}

impl fmt::Display for JordanSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (l, k)) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}^{k}")?;
        }
        Ok(())
    }
}

impl FromStr for JordanSpec {
    type Err = Error;

    /// Comma-separated `λ^k` items; `λ` is an integer or `p/q`, `^k`
    /// defaults to `^1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidJordanSpec(s.to_string());
        let blocks = s
            .split(',')
            .map(|item| {
                let item = item.trim();
                let (l, k) = match item.split_once('^') {
                    Some((l, k)) => (l, k.trim().parse::<usize>().map_err(|_| bad())?),
                    None => (item, 1),
                };
                Ok((l.trim().parse::<Rational>().map_err(|_| bad())?, k))
            })
            .collect::<Result<Vec<_>>>()?;
        JordanSpec::new(blocks)
    }
}

/// `Δ(x) = 0`, `Δ = 1` on the first `k - 1` vectors of the first big block,
/// `Δ = 2` on its last vector, zero elsewhere.
pub fn jordan_local_nonderivation(spec: &JordanSpec) -> Result<LinearOperator<Rational>> {
    let (offset, k) = spec.first_big_block().ok_or(Error::NoBigBlock)?;
    let mut diag = vec![0i64; spec.total_size() + 1];
    for i in 0..k {
        diag[1 + offset + i] = if i + 1 == k { 2 } else { 1 };
    }
    Ok(LinearOperator::diagonal(&diag, &()))
}

/// Derivation `e_{o+i} ↦ e_{o+i+m}` inside the block (`m`-th power of the
/// shift), zero elsewhere.
fn block_shift_power(dim: usize, offset: usize, k: usize, m: usize) -> LinearOperator<Rational> {
    let images: Vec<Element<Rational>> = (0..dim)
        .map(|col| {
            let mut v = Element::zero(dim, &());
            if col > offset && col <= offset + k {
                let i = col - 1 - offset;
                if i + m < k {
                    v = Element::basis(1 + offset + i + m, dim, &());
                }
            }
            v
        })
        .collect();
    LinearOperator::from_images(&images, &())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateCase {
    /// Human-readable region, e.g. `η1 = 0, η2 != 0`.
    pub region: String,
    /// Nonzero `α` coefficients of `d_y` in this region.
    pub alphas: Vec<(String, String)>,
    /// Components of the denominator-cleared residual; all `"0"` when verified.
    pub residual: Vec<String>,
    /// Random points of the region at which `Δ(y) ∈ V(y)` was checked by a
    /// linear solve.
    pub spot_checks: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanCertificate {
    pub spec: JordanSpec,
    pub delta: LinearOperator<Rational>,
    pub block_offset: usize,
    pub block_size: usize,
    pub cases: Vec<CertificateCase>,
}

pub const SPOT_CHECKS_PER_CASE: usize = 100;

fn poly_vars(n: usize) -> Arc<[String]> {
    let mut v = vec![String::from("γ")];
    v.extend((1..=n).map(|i| format!("η{i}")));
    v.into()
}

fn apply_poly(op: &LinearOperator<Rational>, y: &[MultiPoly<Rational>]) -> Vec<MultiPoly<Rational>> {
    let vars = y[0].vars().clone();
    (0..op.dim())
        .map(|row| {
            let mut acc = MultiPoly::zero(&vars, &());
            for (col, yc) in y.iter().enumerate() {
                let c = op.entry(row, col);
                if !c.is_zero() {
                    acc = acc.add(&yc.scale(c));
                }
            }
            acc
        })
        .collect()
}

/// Symbolic proof that [`jordan_local_nonderivation`] is a local derivation.
///
/// For `y = γx + Σ η_i e_i` and each region of the big block's coordinates,
/// an explicit `d_y = Σ_m α_{1,m} N^{m-1}` (a polynomial in the block shift
/// `N`, hence a derivation) satisfies `Δ(y) = d_y(y)` identically. Each
/// `N^{m-1}` is checked to be a derivation, every residual is expanded and
/// must vanish, and each case is spot-checked at random points by an
/// independent linear solve.
pub fn jordan_local_certificate(spec: &JordanSpec, seed: u64) -> Result<JordanCertificate> {
    let algebra = abelian_nilradical_algebra(spec)?;
    let delta = jordan_local_nonderivation(spec)?;
    let (o, k) = spec.first_big_block().ok_or(Error::NoBigBlock)?;
    let dim = algebra.dim();
    let n = dim - 1;
    let fail = |case: &str, residual: String| Error::CertificateFailed { case: case.to_string(), residual };

    if is_derivation(&algebra, &delta) {
        return Err(fail("Δ", String::from("Δ is a derivation")));
    }
    let shifts: Vec<LinearOperator<Rational>> = (0..k).map(|m| block_shift_power(dim, o, k, m)).collect();
    for (m, s) in shifts.iter().enumerate() {
        if !is_derivation(&algebra, s) {
            return Err(fail(&format!("N^{m}"), String::from("family generator is not a derivation")));
        }
    }

    let vars = poly_vars(n);
    let y: Vec<MultiPoly<Rational>> = (0..dim).map(|i| MultiPoly::var(i, &vars, &())).collect();
    let eta = |i: usize| format!("η{}", o + i);
    let delta_y = apply_poly(&delta, &y);
    let der = derivation_algebra(&algebra);
    let mut rng = stream_rng(seed, 3);
    let mut cases = Vec::new();

    for s in 1..=k {
        let zero_vars: Vec<usize> = (1..s).map(|i| 1 + o + i - 1).collect();
        let mut region: Vec<String> = zero_vars.iter().map(|&v| format!("{} = 0", vars[v])).collect();
        // residual * η_s with α_{1,1} η_s = η_s and α_{1,k-s+1} η_s = η_k, or
        // α_{1,1} = 2 without a denominator in the last case
        let (scale, d_y_scaled, alphas) = if s < k {
            region.push(format!("{} != 0", eta(s)));
            let eta_s = y[o + s].clone();
            let eta_k = y[o + k].clone();
            let d = apply_poly(&shifts[0], &y)
                .into_iter()
                .map(|p| p.mul(&eta_s))
                .zip(apply_poly(&shifts[k - s], &y).into_iter().map(|p| p.mul(&eta_k)))
                .map(|(a, b)| a.add(&b))
                .collect::<Vec<_>>();
            let alphas = vec![
                (String::from("α1,1"), String::from("1")),
                (format!("α1,{}", k - s + 1), format!("{}/{}", eta(k), eta(s))),
            ];
            (Some(eta_s), d, alphas)
        } else {
            let two = Rational::integer(2);
            let d = apply_poly(&shifts[0], &y).into_iter().map(|p| p.scale(&two)).collect::<Vec<_>>();
            (None, d, vec![(String::from("α1,1"), String::from("2"))])
        };
        let assignment: Vec<(usize, Rational)> = zero_vars.iter().map(|&v| (v, Rational::integer(0))).collect();
        let residual: Vec<MultiPoly<Rational>> = delta_y
            .iter()
            .zip(&d_y_scaled)
            .map(|(dy, dd)| {
                let lhs = match &scale {
                    Some(e) => dy.mul(e),
                    None => dy.clone(),
                };
                lhs.sub(dd).substitute(&assignment)
            })
            .collect();
        let case_name = region.join(", ");
        if let Some(bad) = residual.iter().find(|r| !r.is_zero()) {
            return Err(fail(&case_name, bad.to_string()));
        }

        let mut checked = 0;
        while checked < SPOT_CHECKS_PER_CASE {
            let point: Vec<Rational> = (0..dim)
                .map(|i| {
                    if zero_vars.contains(&i) {
                        Rational::integer(0)
                    } else {
                        Rational::new(rng.random_range(-10..=10), rng.random_range(1..=5))
                    }
                })
                .collect();
            if s < k && point[o + s].is_zero() {
                continue;
            }
            if !is_local_at(&der, &delta, &Element::new(point.clone())) {
                return Err(fail(&case_name, format!("Δ(y) ∉ V(y) at {point:?}")));
            }
            checked += 1;
        }

        cases.push(CertificateCase {
            region: case_name,
            alphas,
            residual: residual.iter().map(|r| r.to_string()).collect(),
            spot_checks: checked,
        });
    }
    Ok(JordanCertificate { spec: spec.clone(), delta, block_offset: o, block_size: k, cases })
}

/// Recognise an algebra that is literally `abelian_nilradical_algebra(spec)`.
pub fn detect_jordan_form(algebra: &LieAlgebra<Rational>) -> Option<JordanSpec> {
    let dim = algebra.dim();
    if dim < 2 {
        return None;
    }
    let mut blocks: Vec<(Rational, usize)> = Vec::new();
    let mut open = false;
    for i in 1..dim {
        let img = algebra.bracket_basis(i, 0);
        let lambda = img[i].clone();
        let mu = if i + 1 < dim { img[i + 1].clone() } else { Rational::integer(0) };
        match blocks.last_mut() {
            Some((l, size)) if open => {
                if *l != lambda {
                    return None;
                }
                *size += 1;
            }
            _ => blocks.push((lambda, 1)),
        }
        open = mu.is_one();
    }
    let spec = JordanSpec::new(blocks).ok()?;
    let model = abelian_nilradical_algebra(&spec).ok()?;
    let same = (0..dim).all(|i| (0..dim).all(|j| algebra.bracket_basis(i, j) == model.bracket_basis(i, j)));
    same.then_some(spec)
}

/// A verified proper local derivation of the analysed algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProperCertificate {
    pub operator: LinearOperator<Rational>,
    pub jordan: JordanCertificate,
}

/// [`certify_locder_equals_der`], escalated to `CertifiedProper` when the
/// algebra has Jordan form with a block of size at least 2.
pub fn analyze_locder(algebra: &LieAlgebra<Rational>, plan: &SamplingPlan) -> Result<LocDerReport> {
    let mut report = certify_locder_equals_der(algebra, plan)?;
    if report.verdict != Verdict::Inconclusive {
        return Ok(report);
    }
    let Some(spec) = detect_jordan_form(algebra) else { return Ok(report) };
    if spec.is_diagonalizable() {
        return Ok(report);
    }
    let cert = jordan_local_certificate(&spec, plan.seed)?;
    if let Some(bound) = &report.bound {
        if !bound.contains(&cert.delta.flatten()) {
            return Err(Error::CertificateFailed {
                case: String::from("bound"),
                residual: String::from("certified operator lies outside the sampled bound"),
            });
        }
    }
    report.verdict = Verdict::CertifiedProper;
    report.certificates.push(ProperCertificate { operator: cert.delta.clone(), jordan: cert });
    Ok(report)
}

#[derive(Clone, Debug)]
pub enum Classification {
    /// Every block has size 1; the attached report cross-checks the claim.
    AllLocalAreDer(LocDerReport),
    AdmitsProperLocal(JordanCertificate),
}

pub fn classify_abelian_nilradical(spec: &JordanSpec, plan: &SamplingPlan) -> Result<Classification> {
    if spec.is_diagonalizable() {
        let algebra = abelian_nilradical_algebra(spec)?;
        Ok(Classification::AllLocalAreDer(certify_locder_equals_der(&algebra, plan)?))
    } else {
        Ok(Classification::AdmitsProperLocal(jordan_local_certificate(spec, plan.seed)?))
    }
}
