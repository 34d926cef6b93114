use num_traits::{One, Zero};

use super::{Context, Tversky};
use crate::logic::ApproxArgument;
use crate::normal::NormalSet;
use crate::number::{int, Rational};

/// Counts `(|A ∩ B|, |A \ B|, |B \ A|)` on weighted clauses.
pub fn tversky_counts(left: &NormalSet, right: &NormalSet) -> (usize, usize, usize) {
    let common = left.intersection(right).count();
    (common, left.len() - common, right.len() - common)
}

/// The Tversky ratio `a / (a + x·b + y·c)`, equal to 1 on two empty sets.
pub fn tversky(left: &NormalSet, right: &NormalSet, coeffs: &Tversky) -> Rational {
    if left.is_empty() && right.is_empty() {
        return Rational::one();
    }
    let (a, b, c) = tversky_counts(left, right);
    if a == 0 {
        return Rational::zero();
    }
    let a = int(a as i64);
    let denominator = &a + &coeffs.x * int(b as i64) + &coeffs.y * int(c as i64);
    a / denominator
}

pub fn similarity_tversky(ctx: &Context, e: &ApproxArgument, d: &ApproxArgument, coeffs: &Tversky) -> Rational {
    tversky(&ctx.normalize(&e.premises), &ctx.normalize(&d.premises), coeffs)
}

pub fn preservation_tversky(ctx: &Context, e: &ApproxArgument, d: &ApproxArgument, coeffs: &Tversky) -> Rational {
    let premises = similarity_tversky(ctx, e, d, coeffs);
    let claims = tversky(&ctx.normalize_one(&e.claim), &ctx.normalize_one(&d.claim), coeffs);
    premises * claims
}

pub fn preservation_basic(ctx: &Context, e: &ApproxArgument, d: &ApproxArgument) -> Rational {
    let (premises, _, _) = tversky_counts(&ctx.normalize(&e.premises), &ctx.normalize(&d.premises));
    let (claims, _, _) = tversky_counts(&ctx.normalize_one(&e.claim), &ctx.normalize_one(&d.claim));
    if premises * claims > 0 {
        Rational::one()
    } else {
        Rational::zero()
    }
}
