use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::element::{Element, LinearOperator};
use crate::arith::{Field, Fp, Matrix, Modulus, Rational, SubspaceBasis};
use crate::error::{Error, Result};

/// Finite-dimensional algebra given by structure constants
/// `[e_i, e_j] = Σ_k c(i, j, k) e_k`.
///
/// Construction does not enforce the Lie axioms; [`LieAlgebra::validate`]
/// reports every violation instead.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieAlgebra<F: Field> {
    labels: Vec<String>,
    constants: Vec<F>,
    ctx: F::Ctx,
}

/// Violations found by [`LieAlgebra::validate`]; empty means the table is a Lie algebra.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    /// Pairs `(i, j)`, `i <= j`, with `[e_i, e_j] + [e_j, e_i] != 0`.
    pub antisymmetry: Vec<(usize, usize)>,
    /// Triples `i < j < k` whose Jacobi sum is nonzero.
    pub jacobi: Vec<(usize, usize, usize)>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.antisymmetry.is_empty() && self.jacobi.is_empty()
    }
}

/// Incremental construction from bracket statements with antisymmetric
/// completion. Unstated products are zero.
pub struct TableBuilder<F: Field> {
    labels: Vec<String>,
    constants: Vec<F>,
    stated: Vec<bool>,
    ctx: F::Ctx,
}

impl<F: Field> TableBuilder<F> {
    pub fn new(labels: Vec<String>, ctx: &F::Ctx) -> Self {
        let n = labels.len();
        TableBuilder { labels, constants: vec![F::zero(ctx); n * n * n], stated: vec![false; n * n], ctx: ctx.clone() }
    }

    /// Labels `prefix1 .. prefixN`.
    pub fn numbered(prefix: &str, n: usize, ctx: &F::Ctx) -> Self {
        Self::new((1..=n).map(|i| format!("{prefix}{i}")).collect(), ctx)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// State `[e_i, e_j] = Σ coeff * e_k`. Restating a pair, or stating
    /// `[e_j, e_i]`, is accepted only if it agrees with what is already known.
    pub fn bracket(&mut self, i: usize, j: usize, terms: &[(usize, F)]) -> Result<&mut Self> {
        let n = self.dim();
        for &idx in [i, j].iter().chain(terms.iter().map(|(k, _)| k)) {
            if idx >= n {
                return Err(Error::IndexOutOfRange { index: idx, dim: n });
            }
        }
        let mut value = vec![F::zero(&self.ctx); n];
        for (k, c) in terms {
            value[*k] = value[*k].add(c);
        }
        if i == j {
            if value.iter().any(|c| !c.is_zero()) {
                return Err(Error::AntisymmetryConflict(i, j));
            }
            return Ok(self);
        }
        let neg: Vec<F> = value.iter().map(F::neg).collect();
        for (a, b, v) in [(i, j, &value), (j, i, &neg)] {
            let base = (a * n + b) * n;
            if self.stated[a * n + b] {
                if self.constants[base..base + n] != v[..] {
                    return Err(Error::AntisymmetryConflict(i, j));
                }
            } else {
                self.constants[base..base + n].clone_from_slice(v);
                self.stated[a * n + b] = true;
            }
        }
        Ok(self)
    }

    /// Integer-coefficient shorthand used by the catalog.
    pub fn set(&mut self, i: usize, j: usize, terms: &[(usize, i64)]) -> &mut Self {
        let terms: Vec<(usize, F)> = terms.iter().map(|&(k, c)| (k, F::from_i64(c, &self.ctx))).collect();
        self.bracket(i, j, &terms).expect("catalog tables are consistent");
        self
    }

    pub fn build(&self) -> LieAlgebra<F> {
        LieAlgebra { labels: self.labels.clone(), constants: self.constants.clone(), ctx: self.ctx.clone() }
    }
}

impl<F: Field> LieAlgebra<F> {
    /// Raw constructor taking `c(i, j, k)` at index `(i * n + j) * n + k`.
    /// No completion or checks beyond the length.
    pub fn from_raw_constants(labels: Vec<String>, constants: Vec<F>, ctx: &F::Ctx) -> Result<Self> {
        let n = labels.len();
        if constants.len() != n * n * n {
            return Err(Error::DimensionMismatch { expected: n * n * n, found: constants.len() });
        }
        Ok(LieAlgebra { labels, constants, ctx: ctx.clone() })
    }

    pub fn abelian(n: usize, ctx: &F::Ctx) -> Self {
        TableBuilder::numbered("e", n, ctx).build()
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &F {
        let n = self.dim();
        &self.constants[(i * n + j) * n + k]
    }

    /// `[e_i, e_j]` as a coordinate slice.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[F] {
        let n = self.dim();
        let base = (i * n + j) * n;
        &self.constants[base..base + n]
    }

    pub fn basis_element(&self, i: usize) -> Element<F> {
        Element::basis(i, self.dim(), &self.ctx)
    }

    pub fn zero_element(&self) -> Element<F> {
        Element::zero(self.dim(), &self.ctx)
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.iter().all(F::is_zero)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    fn bracket_coords(&self, x: &[F], y: &[F]) -> Vec<F> {
        let n = self.dim();
        let mut out = vec![F::zero(&self.ctx); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi.mul(yj);
                for (k, ck) in self.bracket_basis(i, j).iter().enumerate() {
                    if !ck.is_zero() {
                        out[k] = out[k].add_mul(&c, ck);
                    }
                }
            }
        }
        out
    }

    pub fn bracket(&self, x: &Element<F>, y: &Element<F>) -> Element<F> {
        assert_eq!(x.dim(), self.dim(), "element dimension");
        assert_eq!(y.dim(), self.dim(), "element dimension");
        Element::new(self.bracket_coords(x.coords(), y.coords()))
    }

    /// Right multiplication `ad_x(z) = [z, x]`; column `j` is `[e_j, x]`.
    pub fn ad(&self, x: &Element<F>) -> LinearOperator<F> {
        let images: Vec<Element<F>> = (0..self.dim()).map(|j| self.bracket(&self.basis_element(j), x)).collect();
        LinearOperator::from_images(&images, &self.ctx)
    }

    pub fn ad_basis(&self, i: usize) -> LinearOperator<F> {
        self.ad(&self.basis_element(i))
    }

    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let mut report = ValidationReport::default();
        for i in 0..n {
            for j in i..n {
                let ok = self.bracket_basis(i, j).iter().zip(self.bracket_basis(j, i)).all(|(a, b)| a.add(b).is_zero());
                if !ok {
                    report.antisymmetry.push((i, j));
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (ei, ej, ek) = (self.basis_element(i), self.basis_element(j), self.basis_element(k));
                    let s = self
                        .bracket(&self.bracket(&ei, &ej), &ek)
                        .add(&self.bracket(&self.bracket(&ej, &ek), &ei))
                        .add(&self.bracket(&self.bracket(&ek, &ei), &ej));
                    if !s.is_zero() {
                        report.jacobi.push((i, j, k));
                    }
                }
            }
        }
        report
    }

    pub fn full_space(&self) -> SubspaceBasis<F> {
        SubspaceBasis::full(self.dim(), &self.ctx)
    }

    /// `[A, B]`: span of brackets of basis vectors.
    pub fn product(&self, a: &SubspaceBasis<F>, b: &SubspaceBasis<F>) -> SubspaceBasis<F> {
        let mut vectors = Vec::new();
        for x in a.vectors() {
            for y in b.vectors() {
                vectors.push(self.bracket_coords(x, y));
            }
        }
        SubspaceBasis::span(self.dim(), vectors, &self.ctx)
    }

    /// `L^2 = [L, L]`.
    pub fn derived_algebra(&self) -> SubspaceBasis<F> {
        let n = self.dim();
        let mut vectors = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                vectors.push(self.bracket_basis(i, j).to_vec());
            }
        }
        SubspaceBasis::span(n, vectors, &self.ctx)
    }

    /// `L^1 = L, L^{k+1} = [L^k, L]`, until the chain stabilises. The last
    /// entry is the stable term.
    pub fn lower_central_series(&self) -> Vec<SubspaceBasis<F>> {
        let full = self.full_space();
        self.descending_chain(|prev| self.product(prev, &full))
    }

    /// `L^[1] = L, L^[s+1] = [L^[s], L^[s]]`, until the chain stabilises.
    pub fn derived_series(&self) -> Vec<SubspaceBasis<F>> {
        self.descending_chain(|prev| self.product(prev, prev))
    }

    fn descending_chain(&self, next: impl Fn(&SubspaceBasis<F>) -> SubspaceBasis<F>) -> Vec<SubspaceBasis<F>> {
        let mut chain = vec![self.full_space()];
        loop {
            let last = chain.last().expect("nonempty");
            let step = next(last);
            if step == *last {
                return chain;
            }
            chain.push(step);
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().is_some_and(SubspaceBasis::is_zero)
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(SubspaceBasis::is_zero)
    }

    /// `{ x : [x, e_j] = 0 for all j }`.
    pub fn center(&self) -> SubspaceBasis<F> {
        let n = self.dim();
        let mut m = Matrix::zeros(n * n, n, &self.ctx);
        for j in 0..n {
            for i in 0..n {
                for k in 0..n {
                    m.set(j * n + k, i, self.constant(i, j, k).clone());
                }
            }
        }
        m.nullspace()
    }

    /// Entrywise image of the structure constants in another field.
    pub fn try_map<G: Field>(&self, ctx: &G::Ctx, f: impl Fn(&F) -> Result<G>) -> Result<LieAlgebra<G>> {
        let constants = self.constants.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(LieAlgebra { labels: self.labels.clone(), constants, ctx: ctx.clone() })
    }

    /// Display `x` as a linear combination of basis labels.
    pub fn format_element(&self, x: &Element<F>) -> String {
        let mut out = String::new();
        for (c, label) in x.coords().iter().zip(&self.labels) {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mag != "1" {
                out.push_str(&mag);
                out.push('*');
            }
            out.push_str(label);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl LieAlgebra<Rational> {
    /// Entrywise reduction modulo `p`.
    pub fn reduce_mod(&self, modulus: Modulus) -> Result<LieAlgebra<Fp>> {
        self.try_map(&modulus, |c| c.reduce_mod(modulus))
    }
}
