use alloc::vec::Vec;

use super::bound::{locder_upper_bound, Verdict};
use super::plan::SamplingPlan;
use crate::arith::{Field, Matrix, Rational};
use crate::catalog::{chain_indices, solvable_model};
use crate::der::derivation_algebra;
use crate::error::Result;
use crate::lie::{CharSeq, Element, LieAlgebra, LinearOperator};

/// Outcome of the structural checks on `L_{k+1}(N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelFamilyReport {
    pub charseq: CharSeq,
    pub dim: usize,
    pub der_dim: usize,
    pub bound_dim: usize,
    /// Every bound operator maps `x_j` to `[x_j, y]` with
    /// `y = Σ β_p e_p` read off from `Δ(x1)`.
    pub torus_shape: bool,
    /// Every bound operator agrees with some `ad`-type map `g ↦ [g, z]` on
    /// the generators `x_1..x_{k+1}, e_1` and the chain heads.
    pub generator_realisation: bool,
    pub verdict: Verdict,
    pub sample_count: usize,
}

impl ModelFamilyReport {
    pub fn passed(&self) -> bool {
        self.torus_shape && self.generator_realisation && self.verdict == Verdict::CertifiedEqual
    }
}

fn torus_shape_holds(l: &LieAlgebra<Rational>, cs: &CharSeq, op: &LinearOperator<Rational>) -> bool {
    let k = cs.chains();
    let off = k + 1;
    let n = cs.sum();
    let dx1 = op.image(0);
    // β_p = -coef_{e_p}(Δ x1) / p, 1-based p
    let beta: Vec<Rational> =
        (0..n).map(|i| dx1.coords()[off + i].neg().div(&Rational::integer(i as i64 + 1)).expect("nonzero")).collect();
    let y = Element::new((0..off).map(|_| Rational::integer(0)).chain(beta.iter().cloned()).collect());
    (0..=k).all(|j| {
        let xj = l.basis_element(j);
        op.image(j) == l.bracket(&xj, &y)
    }) && chain_windows_hold(cs, op, &beta)
}

/// `Δ(x_{j+1})` lives on chain `j` with coefficients `-β_p`.
fn chain_windows_hold(cs: &CharSeq, op: &LinearOperator<Rational>, beta: &[Rational]) -> bool {
    let k = cs.chains();
    let off = k + 1;
    (1..=k).all(|j| {
        let window = chain_indices(cs, j);
        let img = op.image(j);
        img.coords().iter().enumerate().all(|(idx, c)| {
            if idx >= off && window.contains(&(idx - off)) {
                *c == beta[idx - off].neg()
            } else {
                c.is_zero()
            }
        })
    })
}

fn generators(cs: &CharSeq) -> Vec<usize> {
    let k = cs.chains();
    let off = k + 1;
    let mut g: Vec<usize> = (0..=k).collect();
    g.push(off);
    for j in 1..=k {
        g.push(off + chain_indices(cs, j).start);
    }
    g
}

/// Solve `Δ(g) = [g, z] = -ad_g(z)` jointly over the generators.
fn realised_on_generators(l: &LieAlgebra<Rational>, gens: &[usize], op: &LinearOperator<Rational>) -> bool {
    let dim = l.dim();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for &g in gens {
        let ad = l.ad_basis(g);
        for r in 0..dim {
            rows.push((0..dim).map(|c| ad.entry(r, c).neg()).collect::<Vec<_>>());
        }
        rhs.extend(op.image(g).into_coords());
    }
    let m = Matrix::from_rows(rows, dim, &()).expect("row width");
    m.solve(&rhs).expect("dimensions agree").is_some()
}

/// Structural checks on `L_{k+1}(N)` plus the sampled certification.
pub fn model_family_checks(cs: &CharSeq, plan: &SamplingPlan) -> Result<ModelFamilyReport> {
    let l = solvable_model(cs);
    let der = derivation_algebra(&l);
    let ub = locder_upper_bound(&der, plan)?;
    let ops: Vec<LinearOperator<Rational>> =
        ub.bound.vectors().iter().map(|v| LinearOperator::from_flat(l.dim(), v, &())).collect();
    let torus_shape = ops.iter().all(|op| torus_shape_holds(&l, cs, op));
    let gens = generators(cs);
    let generator_realisation = ops.iter().all(|op| realised_on_generators(&l, &gens, op));
    let verdict = if ub.dim() == ub.der_dim { Verdict::CertifiedEqual } else { Verdict::Inconclusive };
    Ok(ModelFamilyReport {
        charseq: cs.clone(),
        dim: l.dim(),
        der_dim: ub.der_dim,
        bound_dim: ub.dim(),
        torus_shape,
        generator_realisation,
        verdict,
        sample_count: ub.sample_count,
    })
}
