use num_traits::One;

use super::{Context, Scope};
use crate::closure::minimal_inconsistent_subsets;
use crate::error::Result;
use crate::logic::ApproxArgument;
use crate::number::{clamp_zero, int, Rational};

/// Number of minimal inconsistent subsets of the decoding's premises
/// (strong) or of those premises joined with the enthymeme's (weak).
pub fn inconsistency_count(ctx: &Context, e: &ApproxArgument, d: &ApproxArgument, scope: Scope) -> Result<usize> {
    let pool = match scope {
        Scope::Strong => d.premises.clone(),
        Scope::Weak => d.premises.union(&e.premises),
    };
    Ok(minimal_inconsistent_subsets(&ctx.logic, &pool)?.len())
}

pub fn coherence_divided(ctx: &Context, e: &ApproxArgument, d: &ApproxArgument, scope: Scope) -> Result<Rational> {
    let k = inconsistency_count(ctx, e, d, scope)?;
    Ok(Rational::one() / int(1 + k as i64))
}

pub fn coherence_penalty(
    ctx: &Context,
    e: &ApproxArgument,
    d: &ApproxArgument,
    p: &Rational,
    scope: Scope,
) -> Result<Rational> {
    let k = inconsistency_count(ctx, e, d, scope)?;
    Ok(clamp_zero(Rational::one() - p * int(k as i64)))
}
