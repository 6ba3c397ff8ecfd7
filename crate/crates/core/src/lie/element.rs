use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{Field, Matrix, SubspaceBasis};

/// Coordinates of an algebra element in the fixed basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Element<F: Field>(Vec<F>);

impl<F: Field> Element<F> {
    pub fn new(coords: Vec<F>) -> Self {
        Element(coords)
    }

    pub fn zero(dim: usize, ctx: &F::Ctx) -> Self {
        Element(vec![F::zero(ctx); dim])
    }

    /// The basis vector `e_index`.
    pub fn basis(index: usize, dim: usize, ctx: &F::Ctx) -> Self {
        let mut v = vec![F::zero(ctx); dim];
        v[index] = F::one(ctx);
        Element(v)
    }

    pub fn from_i64(coords: &[i64], ctx: &F::Ctx) -> Self {
        Element(coords.iter().map(|&c| F::from_i64(c, ctx)).collect())
    }

    /// Sparse constructor: `terms` lists `(index, coefficient)` pairs.
    pub fn from_terms(dim: usize, terms: &[(usize, i64)], ctx: &F::Ctx) -> Self {
        let mut e = Self::zero(dim, ctx);
        for &(i, c) in terms {
            e.0[i] = e.0[i].add(&F::from_i64(c, ctx));
        }
        e
    }

    pub fn coords(&self) -> &[F] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<F> {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(F::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        Element(self.0.iter().zip(&other.0).map(|(a, b)| a.add(b)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Element(self.0.iter().zip(&other.0).map(|(a, b)| a.sub(b)).collect())
    }

    pub fn scale(&self, c: &F) -> Self {
        Element(self.0.iter().map(|a| a.mul(c)).collect())
    }
}

impl<F: Field> fmt::Debug for Element<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Endomorphism of the algebra; column `j` holds the image of `e_j`.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearOperator<F: Field>(Matrix<F>);

impl<F: Field> LinearOperator<F> {
    pub fn new(matrix: Matrix<F>) -> Self {
        assert_eq!(matrix.rows(), matrix.cols(), "operators are square");
        LinearOperator(matrix)
    }

    pub fn zero(dim: usize, ctx: &F::Ctx) -> Self {
        LinearOperator(Matrix::zeros(dim, dim, ctx))
    }

    pub fn identity(dim: usize, ctx: &F::Ctx) -> Self {
        LinearOperator(Matrix::identity(dim, ctx))
    }

    /// Build from the images of the basis vectors.
    pub fn from_images(images: &[Element<F>], ctx: &F::Ctx) -> Self {
        let n = images.len();
        let cols: Vec<Vec<F>> = images.iter().map(|e| e.coords().to_vec()).collect();
        LinearOperator(Matrix::from_columns(&cols, n, ctx))
    }

    /// Diagonal operator with integer entries.
    pub fn diagonal(entries: &[i64], ctx: &F::Ctx) -> Self {
        let n = entries.len();
        let mut m = Matrix::zeros(n, n, ctx);
        for (i, &d) in entries.iter().enumerate() {
            m.set(i, i, F::from_i64(d, ctx));
        }
        LinearOperator(m)
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn ctx(&self) -> &F::Ctx {
        self.0.ctx()
    }

    pub fn entry(&self, row: usize, col: usize) -> &F {
        self.0.get(row, col)
    }

    pub fn image(&self, basis_index: usize) -> Element<F> {
        Element(self.0.column(basis_index))
    }

    pub fn apply(&self, x: &Element<F>) -> Element<F> {
        Element(self.0.mul_vec(x.coords()).expect("element dimension matches operator"))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        LinearOperator(self.0.mul(&other.0).expect("same dimension"))
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.compose(other).sub(&other.compose(self))
    }

    pub fn add(&self, other: &Self) -> Self {
        LinearOperator(self.0.add(&other.0).expect("same dimension"))
    }

    pub fn sub(&self, other: &Self) -> Self {
        LinearOperator(self.0.sub(&other.0).expect("same dimension"))
    }

    pub fn scale(&self, c: &F) -> Self {
        LinearOperator(self.0.scale(c))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::identity(self.dim(), self.ctx());
        for _ in 0..k {
            out = out.compose(self);
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.0.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Column-major flattening: entry `(i, j)` lands at index `j * n + i`,
    /// so the image of `e_j` occupies the contiguous slice `[j*n, (j+1)*n)`.
    pub fn flatten(&self) -> Vec<F> {
        let n = self.dim();
        (0..n).flat_map(|j| (0..n).map(move |i| (i, j))).map(|(i, j)| self.0.get(i, j).clone()).collect()
    }

    pub fn from_flat(n: usize, flat: &[F], ctx: &F::Ctx) -> Self {
        assert_eq!(flat.len(), n * n, "flat operator length");
        let cols: Vec<Vec<F>> = flat.chunks(n).map(<[F]>::to_vec).collect();
        LinearOperator(Matrix::from_columns(&cols, n, ctx))
    }

    /// Kernel as a subspace of the algebra.
    pub fn kernel(&self) -> SubspaceBasis<F> {
        self.0.nullspace()
    }
}

impl<F: Field> fmt::Debug for LinearOperator<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

/// Index of an operator entry in the flattened coordinates.
pub const fn flat_index(n: usize, row: usize, col: usize) -> usize {
    col * n + row
}
