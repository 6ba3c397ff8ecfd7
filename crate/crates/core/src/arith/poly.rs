use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::field::Field;

/// Exponent vector ordered graded-lexicographically: total degree first,
/// then lexicographically with the first variable most significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with no stored zero coefficients.
///
/// Binary operations require both operands to share the same variable
/// list and panic otherwise.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly<F: Field> {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, F>,
    ctx: F::Ctx,
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(vars: &Arc<[String]>, ctx: &F::Ctx) -> Self {
        MultiPoly { vars: vars.clone(), terms: BTreeMap::new(), ctx: ctx.clone() }
    }

    pub fn constant(c: F, vars: &Arc<[String]>) -> Self {
        let ctx = c.ctx();
        let mut p = Self::zero(vars, &ctx);
        p.add_term(Monomial(vec![0; vars.len()]), c);
        p
    }

    pub fn var(index: usize, vars: &Arc<[String]>, ctx: &F::Ctx) -> Self {
        assert!(index < vars.len(), "variable index out of range");
        let mut exps = vec![0; vars.len()];
        exps[index] = 1;
        let mut p = Self::zero(vars, ctx);
        p.add_term(Monomial(exps), F::one(ctx));
        p
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = existing.add(&c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_vars(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars,
            "polynomials over different variable sets"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_vars(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&F::one(&self.ctx).neg())
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(&self.vars, &self.ctx);
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(m, v)| (m.clone(), v.mul(c))).collect();
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_vars(other);
        let mut out = Self::zero(&self.vars, &self.ctx);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.mul(cb));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::constant(F::one(&self.ctx), &self.vars);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Substitute constants for some of the variables; the rest stay symbolic.
    pub fn substitute(&self, assignment: &[(usize, F)]) -> Self {
        let mut out = Self::zero(&self.vars, &self.ctx);
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            let mut coeff = c.clone();
            for (var, value) in assignment {
                let e = exps[*var];
                for _ in 0..e {
                    coeff = coeff.mul(value);
                }
                exps[*var] = 0;
            }
            out.add_term(Monomial(exps), coeff);
        }
        out
    }

    /// Full evaluation; `values.len()` must equal the number of variables.
    pub fn evaluate(&self, values: &[F]) -> F {
        assert_eq!(values.len(), self.vars.len(), "one value per variable");
        let assignment: Vec<(usize, F)> = values.iter().cloned().enumerate().collect();
        let reduced = self.substitute(&assignment);
        reduced.terms.into_iter().next().map_or_else(|| F::zero(&self.ctx), |(_, c)| c)
    }
}

impl<F: Field> fmt::Display for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest term first
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let is_const = m.degree() == 0;
            if is_const || !c.is_one() {
                write!(f, "{c}")?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut first = true;
            for (v, &e) in self.vars.iter().zip(m.exponents()) {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{v}")?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
