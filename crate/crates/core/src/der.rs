//! The derivation algebra and inner derivations.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{Field, Matrix, SubspaceBasis};
use crate::lie::{flat_index, Element, LieAlgebra, LinearOperator};

/// `Der(L)` as a subspace of the `n²`-dimensional operator space, in the
/// column-major coordinates of [`LinearOperator::flatten`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationAlgebra<F: Field> {
    algebra: LieAlgebra<F>,
    basis: SubspaceBasis<F>,
}

impl<F: Field> DerivationAlgebra<F> {
    pub fn algebra(&self) -> &LieAlgebra<F> {
        &self.algebra
    }

    pub fn subspace(&self) -> &SubspaceBasis<F> {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn operators(&self) -> Vec<LinearOperator<F>> {
        let n = self.algebra.dim();
        self.basis.vectors().iter().map(|v| LinearOperator::from_flat(n, v, self.algebra.ctx())).collect()
    }

    pub fn contains(&self, op: &LinearOperator<F>) -> bool {
        self.basis.contains(&op.flatten())
    }

    /// Columns `d_1(x), …, d_m(x)` over the stored basis.
    pub fn evaluate_at(&self, x: &Element<F>) -> Vec<Vec<F>> {
        let n = self.algebra.dim();
        let ctx = self.algebra.ctx();
        self.basis
            .vectors()
            .iter()
            .map(|d| {
                let mut out = vec![F::zero(ctx); n];
                for (b, xb) in x.coords().iter().enumerate() {
                    if xb.is_zero() {
                        continue;
                    }
                    for (a, o) in out.iter_mut().enumerate() {
                        let entry = &d[flat_index(n, a, b)];
                        if !entry.is_zero() {
                            *o = o.add_mul(xb, entry);
                        }
                    }
                }
                out
            })
            .collect()
    }

    /// Whether `[d1, d2]` stays inside for every pair of basis operators.
    pub fn is_closed_under_commutator(&self) -> bool {
        let ops = self.operators();
        ops.iter().enumerate().all(|(i, a)| ops[i + 1..].iter().all(|b| self.contains(&a.commutator(b))))
    }
}

/// Solve the Leibniz system `d[e_i,e_j] = [d e_i, e_j] + [e_i, d e_j]`, `i < j`,
/// in the `n²` unknown entries of `d`.
pub fn derivation_algebra<F: Field>(algebra: &LieAlgebra<F>) -> DerivationAlgebra<F> {
    let n = algebra.dim();
    let ctx = algebra.ctx();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let mut row = vec![F::zero(ctx); n * n];
                for m in 0..n {
                    // d([e_i, e_j])_k = Σ_m c_ij^m d_{k,m}
                    let c = algebra.constant(i, j, m);
                    if !c.is_zero() {
                        let idx = flat_index(n, k, m);
                        row[idx] = row[idx].add(c);
                    }
                }
                for a in 0..n {
                    // [d e_i, e_j]_k = Σ_a d_{a,i} c_aj^k
                    let c = algebra.constant(a, j, k);
                    if !c.is_zero() {
                        let idx = flat_index(n, a, i);
                        row[idx] = row[idx].sub(c);
                    }
                    // [e_i, d e_j]_k = Σ_a d_{a,j} c_ia^k
                    let c = algebra.constant(i, a, k);
                    if !c.is_zero() {
                        let idx = flat_index(n, a, j);
                        row[idx] = row[idx].sub(c);
                    }
                }
                if row.iter().any(|v| !v.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let basis = if rows.is_empty() {
        SubspaceBasis::full(n * n, ctx)
    } else {
        Matrix::from_rows(rows, n * n, ctx).expect("row width n²").nullspace()
    };
    DerivationAlgebra { algebra: algebra.clone(), basis }
}

/// Direct Leibniz check on all basis pairs, independent of the linear system.
pub fn is_derivation<F: Field>(algebra: &LieAlgebra<F>, op: &LinearOperator<F>) -> bool {
    let n = algebra.dim();
    assert_eq!(op.dim(), n, "operator dimension");
    let images: Vec<Element<F>> = (0..n).map(|i| op.image(i)).collect();
    (0..n).all(|i| {
        (i + 1..n).all(|j| {
            let (ei, ej) = (algebra.basis_element(i), algebra.basis_element(j));
            let lhs = op.apply(&algebra.bracket(&ei, &ej));
            let rhs = algebra.bracket(&images[i], &ej).add(&algebra.bracket(&ei, &images[j]));
            lhs == rhs
        })
    })
}

/// `span{ad(e_j)}` in flattened operator coordinates.
pub fn inner_derivations<F: Field>(algebra: &LieAlgebra<F>) -> SubspaceBasis<F> {
    let n = algebra.dim();
    let vectors = (0..n).map(|j| algebra.ad_basis(j).flatten()).collect();
    SubspaceBasis::span(n * n, vectors, algebra.ctx())
}

/// Whether every derivation is inner.
pub fn equals_inner<F: Field>(algebra: &LieAlgebra<F>) -> bool {
    derivation_algebra(algebra).basis == inner_derivations(algebra)
}
