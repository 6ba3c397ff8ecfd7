use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::algebra::LieAlgebra;
use super::element::Element;
use super::jordan::jordan_block_sizes_nilpotent;
use crate::arith::Field;
use crate::error::{Error, Result};
use crate::rng::{random_integer_vector, stream_rng};

/// Non-increasing positive parts ending in 1, e.g. `(3, 2, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharSeq(Vec<usize>);

impl CharSeq {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let bad = |why: &str| Err(Error::InvalidSequence(format!("{parts:?}: {why}")));
        if parts.is_empty() {
            return bad("empty");
        }
        if parts.contains(&0) {
            return bad("parts must be positive");
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return bad("parts must be non-increasing");
        }
        if parts.last() != Some(&1) {
            return bad("last part must be 1");
        }
        Ok(CharSeq(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of chains `k`, i.e. parts before the trailing 1.
    pub fn chains(&self) -> usize {
        self.0.len() - 1
    }

    /// Every valid sequence with the given sum, in lexicographic order.
    pub fn all_with_sum(total: usize) -> Vec<CharSeq> {
        fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<CharSeq>) {
            if rest == 1 {
                prefix.push(1);
                out.push(CharSeq(prefix.clone()));
                prefix.pop();
                return;
            }
            for p in (1..=max.min(rest - 1)).rev() {
                prefix.push(p);
                rec(rest - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if total >= 1 {
            rec(total, total, &mut Vec::new(), &mut out);
        }
        out.reverse();
        out
    }
}

impl fmt::Display for CharSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for CharSeq {
    type Err = Error;

    /// Accepts `2,2,1` or `(2,2,1)`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::InvalidSequence(String::from(s))))
            .collect::<Result<Vec<_>>>()?;
        CharSeq::new(parts)
    }
}

/// Result of [`characteristic_sequence`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharSeqEstimate<F: Field> {
    pub sequence: CharSeq,
    /// Element at which the maximum was first attained.
    pub witness: Element<F>,
    /// Always set: genericity is sampled, so the value is a lower bound.
    pub probabilistic: bool,
    pub candidates_checked: usize,
}

const RANDOM_RANGE: i64 = 10;

/// Lexicographic maximum of the Jordan block sizes of `ad_x` over
/// `x ∉ L²`: basis vectors first, then `trials` seeded random elements.
pub fn characteristic_sequence<F: Field>(
    algebra: &LieAlgebra<F>,
    trials: usize,
    seed: u64,
) -> Result<CharSeqEstimate<F>> {
    if !algebra.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let n = algebra.dim();
    let ctx = algebra.ctx();
    let derived = algebra.derived_algebra();
    let mut best: Option<(Vec<usize>, Element<F>)> = None;
    let mut checked = 0;
    let mut consider = |x: Element<F>| -> Result<()> {
        let sizes = jordan_block_sizes_nilpotent(&algebra.ad(&x))?;
        checked += 1;
        if best.as_ref().is_none_or(|(b, _)| sizes > *b) {
            best = Some((sizes, x));
        }
        Ok(())
    };
    for i in 0..n {
        let x = algebra.basis_element(i);
        if !derived.contains(x.coords()) {
            consider(x)?;
        }
    }
    // Each trial owns its stream; rejected draws (inside L²) are redrawn
    // from the same stream with a bounded number of attempts.
    for t in 0..trials {
        let mut rng = stream_rng(seed, t as u64);
        for _ in 0..64 {
            let v = random_integer_vector::<F>(&mut rng, n, RANDOM_RANGE, ctx);
            if !derived.contains(&v) {
                consider(Element::new(v))?;
                break;
            }
        }
    }
    let (sizes, witness) = match best {
        Some(b) => b,
        // only the zero algebra has L = L² among nilpotent algebras
        None => return Err(Error::InvalidSequence(String::from("algebra has no element outside L^2"))),
    };
    Ok(CharSeqEstimate { sequence: CharSeq::new(sizes)?, witness, probabilistic: true, candidates_checked: checked })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn charseq_validation() {
        assert!(CharSeq::new(vec![3, 2, 1]).is_ok());
        assert!(CharSeq::new(vec![2, 3, 1]).is_err());
        assert!(CharSeq::new(vec![2, 2]).is_err());
        assert!(CharSeq::new(vec![]).is_err());
        assert_eq!("(2,2,1)".parse::<CharSeq>().unwrap().parts(), &[2, 2, 1]);
        assert_eq!(CharSeq::new(vec![2, 1]).unwrap().to_string(), "(2,1)");
    }

    #[test]
    fn enumerate_sequences() {
        let all = CharSeq::all_with_sum(4);
        let got: Vec<&[usize]> = all.iter().map(CharSeq::parts).collect();
        assert_eq!(got, vec![&[1, 1, 1, 1][..], &[2, 1, 1], &[3, 1]]);
        assert_eq!(CharSeq::all_with_sum(1).len(), 1);
    }
}
