use num_traits::{One, Zero};

use super::Context;
use crate::closure::flat_finite_cn;
use crate::error::Result;
use crate::logic::{ApproxArgument, WeightedLogic, WeightedSet};
use crate::number::{clamp_zero, int, Rational};

/// `|V(Δ) − w(β)|`, with `V` the logic's weight aggregator.
pub fn weight_gap(ctx: &Context, d: &ApproxArgument) -> Rational {
    ctx.logic.aggregate(&d.premises).distance(d.claim.weight)
}

/// Returns `(|fCN(β)|, |fCN(β) \ fCN(Δ)|)`.
pub fn closure_gap(ctx: &Context, d: &ApproxArgument) -> Result<(usize, usize)> {
    let claim_set: WeightedSet = std::iter::once(d.claim.clone()).collect();
    let claim_cn = flat_finite_cn(&ctx.logic, &claim_set, ctx.closure)?;
    let premise_cn = flat_finite_cn(&ctx.logic, &d.premises, ctx.closure)?;
    let missing = claim_cn.difference(&premise_cn).count();
    Ok((claim_cn.len(), missing))
}

pub fn inference_divided(ctx: &Context, d: &ApproxArgument, a: &Rational) -> Result<Rational> {
    if weight_gap(ctx, d) > *a {
        return Ok(Rational::zero());
    }
    let (total, missing) = closure_gap(ctx, d)?;
    if total == 0 {
        return Ok(Rational::one());
    }
    Ok(Rational::new(
        (total as i64).into(),
        ((total + missing) as i64).into(),
    ))
}

pub fn inference_penalty(ctx: &Context, d: &ApproxArgument, p: &Rational, a: &Rational) -> Result<Rational> {
    if weight_gap(ctx, d) > *a {
        return Ok(Rational::zero());
    }
    let (_, missing) = closure_gap(ctx, d)?;
    Ok(clamp_zero(Rational::one() - p * int(missing as i64)))
}
