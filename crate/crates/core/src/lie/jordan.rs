use alloc::vec::Vec;

use super::element::LinearOperator;
use crate::arith::Field;
use crate::error::{Error, Result};

/// Rank profile `r_0 = n, r_m = rank(B^m)` until it stabilises.
fn rank_profile<F: Field>(b: &LinearOperator<F>) -> Vec<usize> {
    let mut ranks = alloc::vec![b.dim()];
    let mut power = LinearOperator::identity(b.dim(), b.ctx());
    loop {
        power = power.compose(b);
        let r = power.rank();
        let prev = *ranks.last().expect("nonempty");
        ranks.push(r);
        if r == prev {
            return ranks;
        }
    }
}

/// Block sizes from a rank profile: the number of blocks of size at least
/// `m` is `r_{m-1} - r_m`.
fn sizes_from_profile(ranks: &[usize]) -> Vec<usize> {
    let at_least = |m: usize| -> usize {
        if m == 0 || m >= ranks.len() {
            0
        } else {
            ranks[m - 1] - ranks[m]
        }
    };
    let mut sizes = Vec::new();
    for m in (1..ranks.len()).rev() {
        let exactly = at_least(m) - at_least(m + 1);
        sizes.extend(core::iter::repeat_n(m, exactly));
    }
    sizes
}

/// Jordan block sizes of a nilpotent operator, non-increasing.
pub fn jordan_block_sizes_nilpotent<F: Field>(op: &LinearOperator<F>) -> Result<Vec<usize>> {
    let ranks = rank_profile(op);
    if *ranks.last().expect("nonempty") != 0 {
        return Err(Error::NotNilpotent);
    }
    Ok(sizes_from_profile(&ranks))
}

/// Sizes of the Jordan blocks of `op` for eigenvalue `lambda`, non-increasing;
/// empty when `lambda` is not an eigenvalue.
pub fn jordan_block_sizes_at<F: Field>(op: &LinearOperator<F>, lambda: &F) -> Vec<usize> {
    let shifted = op.sub(&LinearOperator::identity(op.dim(), op.ctx()).scale(lambda));
    sizes_from_profile(&rank_profile(&shifted))
}
