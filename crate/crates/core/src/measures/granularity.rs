use num_traits::One;

use super::{Context, Detail};
use crate::logic::ApproxArgument;
use crate::number::{clamp_zero, int, Rational};

/// `|N(Δ) \ N(Γ)|`: clauses the decoding adds to the enthymeme.
pub fn new_clause_count(ctx: &Context, e: &ApproxArgument, d: &ApproxArgument) -> usize {
    let given = ctx.normalize(&e.premises);
    ctx.normalize(&d.premises).difference(&given).count()
}

pub fn granularity_divided(ctx: &Context, e: &ApproxArgument, d: &ApproxArgument, detail: Detail) -> Rational {
    let g = new_clause_count(ctx, e, d);
    let concise = Rational::one() / int(g as i64 + 1);
    match detail {
        Detail::Concise => concise,
        Detail::Detailed => Rational::one() - concise,
    }
}

pub fn granularity_penalty(
    ctx: &Context,
    e: &ApproxArgument,
    d: &ApproxArgument,
    detail: Detail,
    s: u32,
    p: &Rational,
) -> Rational {
    let g = new_clause_count(ctx, e, d) as i64;
    let s = i64::from(s);
    let overshoot = match detail {
        Detail::Concise => g - s,
        Detail::Detailed => s - g,
    };
    if overshoot <= 0 {
        Rational::one()
    } else {
        clamp_zero(Rational::one() - p * int(overshoot))
    }
}
