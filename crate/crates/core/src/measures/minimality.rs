use num_traits::One;

use super::Context;
use crate::closure::entailing_subsets;
use crate::error::Result;
use crate::logic::ApproxArgument;
use crate::number::{clamp_zero, int, Rational};

pub fn minimality_divided(ctx: &Context, d: &ApproxArgument) -> Result<Rational> {
    let normal = ctx.normalize(&d.premises);
    let inf = entailing_subsets(&ctx.logic, &normal, &d.claim.formula)?;
    if inf.is_empty() {
        return Ok(Rational::one());
    }
    Ok(Rational::one() / int(inf.len() as i64))
}

/// Penalises the clauses of `N(Δ)` left over beyond the smallest entailing subset.
pub fn minimality_penalty(ctx: &Context, d: &ApproxArgument, p: &Rational) -> Result<Rational> {
    let normal = ctx.normalize(&d.premises);
    let inf = entailing_subsets(&ctx.logic, &normal, &d.claim.formula)?;
    match inf.min_size() {
        None => Ok(Rational::one()),
        Some(smallest) => {
            let excess = normal.len() - smallest;
            Ok(clamp_zero(Rational::one() - p * int(excess as i64)))
        }
    }
}
