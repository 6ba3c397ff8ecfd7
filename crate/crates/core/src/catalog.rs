//! Constructors for the named algebra families and worked examples.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{Field, Fp, Modulus, Rational};
use crate::error::{Error, Result};
use crate::lie::{CharSeq, LieAlgebra, TableBuilder};
use crate::locder::JordanSpec;

/// Which of the two three-dimensional solvable examples.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThreeDim {
    /// `[e2,e1] = e2, [e3,e1] = e3`: `ad e1` diagonalizable.
    L1,
    /// `[e2,e1] = e2 + e3, [e3,e1] = e3`: `ad e1` has a 2-block.
    L2,
}

pub fn example_3_1(which: ThreeDim) -> LieAlgebra<Rational> {
    let mut b = TableBuilder::numbered("e", 3, &());
    match which {
        ThreeDim::L1 => b.set(1, 0, &[(1, 1)]).set(2, 0, &[(2, 1)]),
        ThreeDim::L2 => b.set(1, 0, &[(1, 1), (2, 1)]).set(2, 0, &[(2, 1)]),
    };
    b.build()
}

/// Basis `(x, e1..en)` with abelian `span{e}` and `[e_i, x] = λ e_i + e_{i+1}`
/// inside each Jordan block.
pub fn abelian_nilradical_algebra(spec: &JordanSpec) -> Result<LieAlgebra<Rational>> {
    if spec.blocks().iter().all(|(l, _)| l.is_zero()) {
        return Err(Error::AllEigenvaluesZero);
    }
    let n = spec.total_size();
    let mut labels = vec![String::from("x")];
    labels.extend((1..=n).map(|i| format!("e{i}")));
    let mut b = TableBuilder::new(labels, &());
    let mut offset = 1;
    for (lambda, size) in spec.blocks() {
        for i in 0..*size {
            let e = offset + i;
            let mut terms = vec![(e, lambda.clone())];
            if i + 1 < *size {
                terms.push((e + 1, Rational::integer(1)));
            }
            b.bracket(e, 0, &terms)?;
        }
        offset += size;
    }
    Ok(b.build())
}

/// Basis `(x1..xn, e1..en)` with `[e_i, x_i] = e_i` the only nonzero products.
pub fn maximal_abelian_ln(n: usize) -> Result<LieAlgebra<Rational>> {
    if n == 0 {
        return Err(Error::BadCatalogParameters(String::from("Ln needs n >= 1")));
    }
    let mut labels: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    labels.extend((1..=n).map(|i| format!("e{i}")));
    let mut b = TableBuilder::new(labels, &());
    for i in 0..n {
        b.set(n + i, i, &[(n + i, 1)]);
    }
    Ok(b.build())
}

/// Offsets `S_j = n_1 + … + n_j` with `S_0 = 0`.
fn partial_sums(cs: &CharSeq) -> Vec<usize> {
    let mut s = vec![0];
    for p in cs.parts() {
        s.push(s.last().copied().unwrap_or(0) + p);
    }
    s
}

/// Zero-based indices (within `e1..en`) of chain `j` (1-based, `j <= k`):
/// `e_{S_{j-1}+2} .. e_{S_j+1}`.
pub fn chain_indices(cs: &CharSeq, j: usize) -> core::ops::Range<usize> {
    let s = partial_sums(cs);
    // e_m has zero-based index m - 1
    (s[j - 1] + 1)..(s[j] + 1)
}

/// Model nilpotent algebra: `e1` acts as a shift along each chain.
pub fn model_nilradical(cs: &CharSeq) -> LieAlgebra<Rational> {
    let n = cs.sum();
    let mut b = TableBuilder::numbered("e", n, &());
    add_model_chains(&mut b, cs, 0);
    b.build()
}

fn add_model_chains(b: &mut TableBuilder<Rational>, cs: &CharSeq, e_offset: usize) {
    for j in 1..=cs.chains() {
        let chain = chain_indices(cs, j);
        for m in chain.start..chain.end - 1 {
            b.set(e_offset + m, e_offset, &[(e_offset + m + 1, 1)]);
        }
    }
}

/// The model nilradical extended by `x1..x_{k+1}`: `[e_i, x1] = i e_i` and
/// `x_{j+1}` acting as the identity on chain `j`.
pub fn solvable_model(cs: &CharSeq) -> LieAlgebra<Rational> {
    let n = cs.sum();
    let k = cs.chains();
    let mut labels: Vec<String> = (1..=k + 1).map(|i| format!("x{i}")).collect();
    labels.extend((1..=n).map(|i| format!("e{i}")));
    let mut b = TableBuilder::new(labels, &());
    let off = k + 1;
    add_model_chains(&mut b, cs, off);
    for i in 0..n {
        b.set(off + i, 0, &[(off + i, (i + 1) as i64)]);
    }
    for j in 1..=k {
        for m in chain_indices(cs, j) {
            b.set(off + m, j, &[(off + m, 1)]);
        }
    }
    b.build()
}

fn ex45_nil_brackets(b: &mut TableBuilder<Rational>, off: usize) {
    let e = |i: usize| off + i - 1;
    b.set(e(2), e(1), &[(e(4), 1)])
        .set(e(4), e(1), &[(e(5), 1)])
        .set(e(5), e(1), &[(e(6), 1)])
        .set(e(3), e(2), &[(e(7), 1)])
        .set(e(7), e(1), &[(e(8), 1)])
        .set(e(4), e(3), &[(e(8), -1)]);
}

/// Eight-dimensional non-model nilpotent algebra with three generators.
pub fn example_4_5_nilradical() -> LieAlgebra<Rational> {
    let mut b = TableBuilder::numbered("e", 8, &());
    ex45_nil_brackets(&mut b, 0);
    b.build()
}

fn x_then_e_labels(k: usize, n: usize) -> Vec<String> {
    let mut labels: Vec<String> = (1..=k).map(|i| format!("x{i}")).collect();
    labels.extend((1..=n).map(|i| format!("e{i}")));
    labels
}

/// Its eleven-dimensional maximal solvable extension.
pub fn example_4_5() -> LieAlgebra<Rational> {
    let mut b = TableBuilder::new(x_then_e_labels(3, 8), &());
    ex45_nil_brackets(&mut b, 3);
    let e = |i: usize| 3 + i - 1;
    let weights: [(usize, [i64; 8]); 3] =
        [(0, [1, 0, 0, 1, 2, 3, 0, 1]), (1, [0, 1, 0, 1, 1, 1, 1, 1]), (2, [0, 0, 1, 0, 0, 0, 1, 1])];
    for (x, w) in weights {
        for (i, c) in w.iter().enumerate() {
            if *c != 0 {
                b.set(e(i + 1), x, &[(e(i + 1), *c)]);
            }
        }
    }
    b.build()
}

/// Eight-dimensional extension of the five-dimensional Heisenberg algebra.
///
/// `corrected = false` reproduces the table with `[e1, x2] = e2`, which
/// violates Jacobi (e.g. on `(e1, e2, x2)`); `corrected = true` uses
/// `[e1, x2] = e1`, making `x2` act diagonally.
pub fn example_4_6(corrected: bool) -> LieAlgebra<Rational> {
    let mut b = TableBuilder::new(x_then_e_labels(3, 5), &());
    let e = |i: usize| 3 + i - 1;
    b.set(e(2), e(1), &[(e(5), 1)]).set(e(4), e(3), &[(e(5), 1)]);
    for (i, c) in [(1, 1), (2, 1), (3, 1), (4, 1), (5, 2)] {
        b.set(e(i), 0, &[(e(i), c)]);
    }
    let target = if corrected { e(1) } else { e(2) };
    b.set(e(1), 1, &[(target, 1)]);
    for (i, c) in [(2, 1), (3, 2), (5, 2)] {
        b.set(e(i), 1, &[(e(i), c)]);
    }
    for (i, c) in [(1, 2), (3, 1), (4, 1), (5, 2)] {
        b.set(e(i), 2, &[(e(i), c)]);
    }
    b.build()
}

/// Entrywise reduction of a rational algebra modulo `p`.
pub fn reduce_mod_p(algebra: &LieAlgebra<Rational>, p: u64) -> Result<LieAlgebra<Fp>> {
    algebra.reduce_mod(Modulus::new(p)?)
}

/// Structural family of a catalog entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Abelian,
    Nilpotent,
    Solvable,
    /// Table that is not a Lie algebra; kept for reporting.
    Invalid,
}

/// A named algebra with the metadata needed by the analysis layers.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub description: String,
    pub family: Family,
    pub algebra: LieAlgebra<Rational>,
    /// Set when the algebra is literally `abelian_nilradical_algebra(spec)`.
    pub jordan: Option<JordanSpec>,
    /// Set for model families.
    pub charseq: Option<CharSeq>,
}

fn entry(name: &str, description: &str, family: Family, algebra: LieAlgebra<Rational>) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        description: description.to_string(),
        family,
        algebra,
        jordan: None,
        charseq: None,
    }
}

fn parse_count(arg: &str, what: &str) -> Result<usize> {
    arg.trim()
        .parse::<usize>()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| Error::BadCatalogParameters(format!("{what}: expected a positive integer, got {arg:?}")))
}

/// Look up a catalog name. Grammar:
///
/// ```text
/// ex3.1-L1 | ex3.1-L2 | ex4.5 | ex4.5-nil | ex4.6 | ex4.6-fixed
/// Ln:N | abelian:N | model:P,P,..,1 | solvmodel:P,P,..,1 | jordan:λ^k,λ^k,..
/// ```
pub fn lookup(name: &str) -> Result<CatalogEntry> {
    let name = name.trim();
    let e = match name {
        "ex3.1-L1" => {
            let mut e =
                entry(name, "3-dim solvable, ad e1 diagonalizable", Family::Solvable, example_3_1(ThreeDim::L1));
            e.jordan = Some(JordanSpec::new(vec![(Rational::integer(1), 1), (Rational::integer(1), 1)])?);
            e
        }
        "ex3.1-L2" => {
            let mut e =
                entry(name, "3-dim solvable, ad e1 with a Jordan 2-block", Family::Solvable, example_3_1(ThreeDim::L2));
            e.jordan = Some(JordanSpec::new(vec![(Rational::integer(1), 2)])?);
            e
        }
        "ex4.5" => {
            let mut e =
                entry(name, "11-dim maximal solvable, non-model nilradical (4,3,1)", Family::Solvable, example_4_5());
            e.charseq = Some(CharSeq::new(vec![4, 3, 1])?);
            e
        }
        "ex4.5-nil" => {
            let mut e =
                entry(name, "8-dim non-model nilpotent, three generators", Family::Nilpotent, example_4_5_nilradical());
            e.charseq = Some(CharSeq::new(vec![4, 3, 1])?);
            e
        }
        "ex4.6" => entry(
            name,
            "8-dim extension of Heisenberg H5, verbatim table (fails Jacobi)",
            Family::Invalid,
            example_4_6(false),
        ),
        "ex4.6-fixed" => {
            entry(name, "8-dim extension of Heisenberg H5 with [e1,x2] = e1", Family::Solvable, example_4_6(true))
        }
        _ => {
            let (kind, arg) = name.split_once(':').ok_or_else(|| Error::UnknownCatalogEntry(name.to_string()))?;
            match kind {
                "Ln" => {
                    let n = parse_count(arg, "Ln")?;
                    entry(
                        name,
                        "direct sum of n copies of the 2-dim solvable algebra",
                        Family::Solvable,
                        maximal_abelian_ln(n)?,
                    )
                }
                "abelian" => {
                    let n = parse_count(arg, "abelian")?;
                    entry(name, "abelian", Family::Abelian, LieAlgebra::abelian(n, &()))
                }
                "model" => {
                    let cs: CharSeq = arg.parse()?;
                    let family = if cs.chains() == 0 || cs.parts().iter().all(|&p| p == 1) {
                        Family::Abelian
                    } else {
                        Family::Nilpotent
                    };
                    let mut e = entry(name, "model nilpotent algebra", family, model_nilradical(&cs));
                    e.charseq = Some(cs);
                    e
                }
                "solvmodel" => {
                    let cs: CharSeq = arg.parse()?;
                    if cs.chains() == 0 {
                        return Err(Error::InvalidSequence(format!("{cs}: needs at least one chain")));
                    }
                    let mut e = entry(
                        name,
                        "maximal solvable extension of a model nilpotent algebra",
                        Family::Solvable,
                        solvable_model(&cs),
                    );
                    e.charseq = Some(cs);
                    e
                }
                "jordan" => {
                    let spec: JordanSpec = arg.parse()?;
                    let mut e = entry(
                        name,
                        "abelian nilradical with ad x in Jordan form",
                        Family::Solvable,
                        abelian_nilradical_algebra(&spec)?,
                    );
                    e.jordan = Some(spec);
                    e
                }
                _ => return Err(Error::UnknownCatalogEntry(name.to_string())),
            }
        }
    };
    Ok(e)
}

/// Names used by property suites: every family at small parameters.
pub const STANDARD_NAMES: &[&str] = &[
    "abelian:1",
    "abelian:3",
    "ex3.1-L1",
    "ex3.1-L2",
    "Ln:1",
    "Ln:2",
    "Ln:3",
    "model:2,1",
    "model:3,1",
    "model:2,2,1",
    "model:3,2,1",
    "solvmodel:2,1",
    "solvmodel:3,1",
    "solvmodel:2,2,1",
    "jordan:1^2",
    "jordan:1^3",
    "jordan:2^3,5",
    "jordan:1,2,3",
    "ex4.5-nil",
    "ex4.5",
    "ex4.6-fixed",
];

/// Entries that are Lie algebras; `ex4.6` is listed separately because its
/// table fails validation.
pub fn standard_entries() -> Vec<CatalogEntry> {
    STANDARD_NAMES.iter().map(|n| lookup(n).expect("standard names resolve")).collect()
}
