use alloc::vec;
use alloc::vec::Vec;

use super::field::{dot, Field};
use super::matrix::{rref_in_place, Matrix};

/// A subspace of `F^ambient`, stored as the nonzero rows of its reduced
/// row-echelon basis. Two subspaces are equal exactly when their stored
/// bases are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis<F: Field> {
    ambient: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
    ctx: F::Ctx,
}

impl<F: Field> SubspaceBasis<F> {
    pub fn zero(ambient: usize, ctx: &F::Ctx) -> Self {
        SubspaceBasis { ambient, rows: Vec::new(), pivots: Vec::new(), ctx: ctx.clone() }
    }

    pub fn full(ambient: usize, ctx: &F::Ctx) -> Self {
        let rows = (0..ambient)
            .map(|i| {
                let mut v = vec![F::zero(ctx); ambient];
                v[i] = F::one(ctx);
                v
            })
            .collect();
        SubspaceBasis { ambient, rows, pivots: (0..ambient).collect(), ctx: ctx.clone() }
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(ambient: usize, vectors: Vec<Vec<F>>, ctx: &F::Ctx) -> Self {
        let mut rows = vectors;
        for r in &rows {
            assert_eq!(r.len(), ambient, "vector length must match ambient dimension");
        }
        let pivots = rref_in_place(&mut rows, ambient);
        rows.truncate(pivots.len());
        SubspaceBasis { ambient, rows, pivots, ctx: ctx.clone() }
    }

    pub fn row_space(m: &Matrix<F>) -> Self {
        Self::span(m.cols(), m.row_vecs(), m.ctx())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn as_matrix(&self) -> Matrix<F> {
        Matrix::from_rows(self.rows.clone(), self.ambient, &self.ctx).expect("rows have ambient width")
    }

    /// Reduce `v` against the basis; the result is zero iff `v` lies in the span.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].neg();
            for (k, rv) in row.iter().enumerate().skip(p) {
                if !rv.is_zero() {
                    out[k] = out[k].add_mul(&f, rv);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length must match ambient dimension");
        self.reduce(v).iter().all(F::is_zero)
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }

    /// Add one vector, keeping the basis reduced. Returns whether the
    /// dimension grew.
    pub fn insert(&mut self, v: &[F]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv().expect("nonzero");
        for x in r.iter_mut().skip(p) {
            *x = x.mul(&inv);
        }
        for row in &mut self.rows {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].neg();
            for (k, rv) in r.iter().enumerate().skip(p) {
                if !rv.is_zero() {
                    row[k] = row[k].add_mul(&f, rv);
                }
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, r);
        true
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for v in &other.rows {
            out.insert(v);
        }
        out
    }

    /// `{ w : <w, v> = 0 for every v in self }`.
    pub fn annihilator(&self) -> Self {
        if self.rows.is_empty() {
            return Self::full(self.ambient, &self.ctx);
        }
        self.as_matrix().nullspace()
    }

    pub fn intersect(&self, other: &Self) -> Self {
        self.annihilator().sum(&other.annihilator()).annihilator()
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Whether `<w, v> = 0` for all basis vectors `v`.
    pub fn orthogonal_to(&self, w: &[F]) -> bool {
        self.rows.iter().all(|v| dot(v, w, &self.ctx).is_zero())
    }
}
