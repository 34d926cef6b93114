use num_traits::{One, Zero};

use super::inference::weight_gap;
use super::Context;
use crate::logic::ApproxArgument;
use crate::number::Rational;

/// The weight error `Err`, or `None` for a decoding without premises.
pub fn stability_error(ctx: &Context, d: &ApproxArgument) -> Option<Rational> {
    if d.premises.is_empty() {
        None
    } else {
        Some(weight_gap(ctx, d))
    }
}

pub fn stability_strict(ctx: &Context, d: &ApproxArgument) -> Rational {
    match stability_error(ctx, d) {
        None => Rational::one(),
        Some(err) => Rational::one() - err,
    }
}

pub fn stability_lenient(ctx: &Context, d: &ApproxArgument, a: &Rational, u: &Rational) -> Rational {
    let Some(err) = stability_error(ctx, d) else {
        return Rational::one();
    };
    if err <= *a {
        Rational::one()
    } else if err >= *u {
        Rational::zero()
    } else {
        Rational::one() - (err - a) / (u - a)
    }
}
