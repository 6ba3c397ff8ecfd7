use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::field::{dot, Field};
use super::subspace::SubspaceBasis;
use crate::error::{Error, Result};

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
    ctx: F::Ctx,
}

/// Output of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref<F: Field> {
    pub matrix: Matrix<F>,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize, ctx: &F::Ctx) -> Self {
        Matrix { rows, cols, data: vec![F::zero(ctx); rows * cols], ctx: ctx.clone() }
    }

    pub fn identity(n: usize, ctx: &F::Ctx) -> Self {
        let mut m = Self::zeros(n, n, ctx);
        for i in 0..n {
            m.set(i, i, F::one(ctx));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>, cols: usize, ctx: &F::Ctx) -> Result<Self> {
        let n_rows = rows.len();
        let mut data = Vec::with_capacity(n_rows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: n_rows, cols, data, ctx: ctx.clone() })
    }

    /// Integer entries, convenient for tests and catalog tables.
    pub fn from_i64_rows(rows: &[&[i64]], ctx: &F::Ctx) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&v| F::from_i64(v, ctx)).collect()).collect();
        Self::from_rows(rows, cols, ctx).expect("rectangular integer rows")
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<F>], rows: usize, ctx: &F::Ctx) -> Self {
        let mut m = Self::zeros(rows, columns.len(), ctx);
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, &self.ctx);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: rhs.rows });
        }
        let mut out = Self::zeros(self.rows, rhs.cols, &self.ctx);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] = out.data[idx].add_mul(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), v, &self.ctx)).collect())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, F::add)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, F::sub)
    }

    pub fn scale(&self, c: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.mul(c)).collect(),
            ctx: self.ctx.clone(),
        }
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&F, &F) -> F) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch { expected: self.rows * self.cols, found: rhs.rows * rhs.cols });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
            ctx: self.ctx.clone(),
        })
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.cols });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols, data, ctx: self.ctx.clone() })
    }

    /// Reduced row-echelon form by Gauss-Jordan elimination with immediate
    /// normalisation of each pivot row. Zero rows are dropped from the
    /// returned matrix, so `matrix.rows() == rank`.
    pub fn rref(&self) -> Rref<F> {
        let mut rows = self.row_vecs();
        let pivots = rref_in_place(&mut rows, self.cols);
        let rank = pivots.len();
        rows.truncate(rank);
        let matrix = Matrix::from_rows(rows, self.cols, &self.ctx).expect("rref keeps width");
        Rref { matrix, pivots, rank }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Canonical basis of the right kernel `{ v : self * v = 0 }`.
    pub fn nullspace(&self) -> SubspaceBasis<F> {
        let r = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !r.pivots.contains(c)).collect();
        let vectors = free
            .iter()
            .map(|&f| {
                let mut v = vec![F::zero(&self.ctx); self.cols];
                v[f] = F::one(&self.ctx);
                for (i, &pc) in r.pivots.iter().enumerate() {
                    v[pc] = r.matrix.get(i, f).neg();
                }
                v
            })
            .collect();
        SubspaceBasis::span(self.cols, vectors, &self.ctx)
    }

    /// One exact solution of `self * x = b`, or `None` when `b` is outside
    /// the column space.
    pub fn solve(&self, b: &[F]) -> Result<Option<Vec<F>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: b.len() });
        }
        let mut rows: Vec<Vec<F>> = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(b[i].clone());
                r
            })
            .collect();
        let pivots = rref_in_place(&mut rows, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![F::zero(&self.ctx); self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = rows[i][self.cols].clone();
        }
        Ok(Some(x))
    }

    /// Apply `f` entrywise, possibly changing the field.
    pub fn try_map<G: Field>(&self, ctx: &G::Ctx, f: impl Fn(&F) -> Result<G>) -> Result<Matrix<G>> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data, ctx: ctx.clone() })
    }
}

/// Gauss-Jordan on a list of rows. Returns pivot columns; the first
/// `pivots.len()` rows end up in reduced echelon form, the rest are zero.
pub(crate) fn rref_in_place<F: Field>(rows: &mut [Vec<F>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            for v in rows[r].iter_mut().skip(c) {
                if !v.is_zero() {
                    *v = v.mul(&inv);
                }
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, tail) = tail.split_first_mut().expect("row r exists");
        for other in head.iter_mut().chain(tail.iter_mut()) {
            let factor = other[c].clone();
            if factor.is_zero() {
                continue;
            }
            let factor = factor.neg();
            for (k, pv) in pivot_row.iter().enumerate().skip(c) {
                if !pv.is_zero() {
                    other[k] = other[k].add_mul(&factor, pv);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;
    use proptest::prelude::*;

    fn q(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_i64_rows(rows, &())
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = Matrix::<Rational>::identity(3, &());
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 3);

        let z = Matrix::<Rational>::zeros(2, 2, &());
        assert_eq!(z.rref().rank, 0);
    }

    #[test]
    fn rref_rank_one() {
        // [[1,2],[2,4]] -> [[1,2],[0,0]] by R2 -= 2 R1
        let r = q(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, [0]);
        assert_eq!(r.matrix, q(&[&[1, 2]]));
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(Matrix::<Rational>::identity(3, &()).nullspace().dim(), 0);
        assert_eq!(Matrix::<Rational>::zeros(2, 3, &()).nullspace().dim(), 3);

        let m = q(&[&[1, 1, 0]]);
        let ns = m.nullspace();
        assert_eq!(ns.dim(), 2);
        for v in ns.vectors() {
            assert!(m.mul_vec(v).unwrap().iter().all(Field::is_zero));
        }
        let v: Vec<Rational> = [1, -1, 0].iter().map(|&x| Rational::integer(x)).collect();
        assert!(ns.contains(&v));
    }

    #[test]
    fn solve_examples() {
        let id = Matrix::<Rational>::identity(2, &());
        let b = [Rational::integer(3), Rational::new(1, 2)];
        assert_eq!(id.solve(&b).unwrap().unwrap(), b.to_vec());

        let z = Matrix::<Rational>::zeros(2, 2, &());
        assert_eq!(z.solve(&b).unwrap(), None);

        let a = q(&[&[1], &[2]]);
        let b = [Rational::integer(2), Rational::integer(4)];
        assert_eq!(a.solve(&b).unwrap().unwrap(), [Rational::integer(2)]);

        assert!(matches!(a.solve(&b[..1]), Err(Error::DimensionMismatch { .. })));
    }

    fn small_matrix() -> impl Strategy<Value = Matrix<Rational>> {
        (1usize..5, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c).prop_map(move |v| {
                let rows: Vec<Vec<Rational>> =
                    v.chunks(c).map(|ch| ch.iter().map(|&x| Rational::integer(x)).collect()).collect();
                Matrix::from_rows(rows, c, &()).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small_matrix()) {
            let ns = m.nullspace();
            prop_assert_eq!(m.rank() + ns.dim(), m.cols());
            for v in ns.vectors() {
                prop_assert!(m.mul_vec(v).unwrap().iter().all(Field::is_zero));
            }
        }

        #[test]
        fn rref_idempotent_and_canonical(m in small_matrix(), k in -3i64..=3) {
            let r = m.rref().matrix;
            prop_assert_eq!(r.rref().matrix, r.clone());
            // adding a multiple of row 0 to the last row keeps the row space
            let mut rows = m.row_vecs();
            let last = rows.len() - 1;
            if last > 0 {
                let first = rows[0].clone();
                for (x, y) in rows[last].iter_mut().zip(&first) {
                    *x = x.add_mul(&Rational::integer(k), y);
                }
            }
            let m2 = Matrix::from_rows(rows, m.cols(), &()).unwrap();
            prop_assert_eq!(m2.rref().matrix, r);
        }

        #[test]
        fn solve_agrees_with_column_space(m in small_matrix(), seed in proptest::collection::vec(-3i64..=3, 6)) {
            let x: Vec<Rational> = seed[..m.cols()].iter().map(|&v| Rational::integer(v)).collect();
            let b = m.mul_vec(&x).unwrap();
            let sol = m.solve(&b).unwrap().expect("b is in the column space");
            prop_assert_eq!(m.mul_vec(&sol).unwrap(), b);
        }
    }
}
