use alloc::vec::Vec;

use crate::arith::{Field, Matrix, SubspaceBasis};
use crate::der::DerivationAlgebra;
use crate::lie::{flat_index, Element, LinearOperator};

/// `V(x) = { d(x) : d ∈ Der(L) }`.
pub fn pointwise_image<F: Field>(der: &DerivationAlgebra<F>, x: &Element<F>) -> SubspaceBasis<F> {
    let n = der.algebra().dim();
    SubspaceBasis::span(n, der.evaluate_at(x), der.algebra().ctx())
}

/// Whether `Δ(x) = d(x)` for some derivation `d`.
pub fn is_local_at<F: Field>(der: &DerivationAlgebra<F>, op: &LinearOperator<F>, x: &Element<F>) -> bool {
    let n = der.algebra().dim();
    let target = op.apply(x);
    let columns = der.evaluate_at(x);
    if columns.is_empty() {
        return target.is_zero();
    }
    let m = Matrix::from_columns(&columns, n, der.algebra().ctx());
    m.solve(target.coords()).expect("dimensions agree").is_some()
}

/// Linear equations on the flattened entries of `Δ` equivalent to
/// `Δ(point) ∈ V(point)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConstraint<F: Field> {
    pub point: Element<F>,
    /// `n - dim V(point)` rows of length `n²`.
    pub equations: Vec<Vec<F>>,
}

impl<F: Field> PointConstraint<F> {
    pub fn is_satisfied_by(&self, op: &LinearOperator<F>) -> bool {
        let flat = op.flatten();
        let ctx = op.ctx();
        self.equations.iter().all(|row| crate::arith::dot(row, &flat, ctx).is_zero())
    }
}

/// Equations from functionals `w` vanishing on `V(x)`: `Σ_{a,b} w_a x_b Δ_{a,b} = 0`.
pub fn constraint_rows<F: Field>(image: &SubspaceBasis<F>, x: &[F]) -> Vec<Vec<F>> {
    let n = x.len();
    let ctx = image.ctx();
    image
        .annihilator()
        .vectors()
        .iter()
        .map(|w| {
            let mut row = alloc::vec![F::zero(ctx); n * n];
            for (b, xb) in x.iter().enumerate() {
                if xb.is_zero() {
                    continue;
                }
                for (a, wa) in w.iter().enumerate() {
                    if !wa.is_zero() {
                        row[flat_index(n, a, b)] = wa.mul(xb);
                    }
                }
            }
            row
        })
        .collect()
}

pub fn point_constraints<F: Field>(der: &DerivationAlgebra<F>, x: &Element<F>) -> PointConstraint<F> {
    let equations = if x.is_zero() { Vec::new() } else { constraint_rows(&pointwise_image(der, x), x.coords()) };
    PointConstraint { point: x.clone(), equations }
}
