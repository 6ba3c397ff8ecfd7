use super::bound::Screen;
use super::plan::{Candidates, SamplingPlan};
use super::point::is_local_at;
use crate::arith::{Field, Fp, Rational};
use crate::der::DerivationAlgebra;
use crate::error::Result;
use crate::lie::{Element, LinearOperator};

/// Search the plan's points for `x` with `Δ(x) ∉ V(x)`. A returned point is
/// verified over `Q` and proves `Δ` is not a local derivation; `None` proves
/// nothing.
pub fn find_witness(
    der: &DerivationAlgebra<Rational>,
    op: &LinearOperator<Rational>,
    plan: &SamplingPlan,
) -> Result<Option<Element<Rational>>> {
    let algebra = der.algebra();
    let screen = Screen::new(der)?;
    let modulus = screen.modulus();
    let op_p = LinearOperator::new(op.matrix().try_map(&modulus, |c| c.reduce_mod(modulus))?);
    // no early stop on a stable streak: every random draw is a fresh chance
    let plan = SamplingPlan { stable_streak: usize::MAX, ..plan.clone() };
    let mut candidates = Candidates::new(algebra, &plan);
    while let Some((_, x)) = candidates.next_point() {
        let xp = screen.reduce_point(&x)?;
        if xp.iter().all(Fp::is_zero) {
            continue;
        }
        let target = op_p.apply(&Element::new(xp.clone()));
        let image = screen.image(&xp);
        if image.contains(target.coords()) {
            continue;
        }
        let x = Element::new(x);
        if !is_local_at(der, op, &x) {
            return Ok(Some(x));
        }
    }
    Ok(None)
}
