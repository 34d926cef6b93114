//! Exact numbers: weights in the unit interval and rational scores.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational used for scores and measure parameters.
pub type Rational = BigRational;

const WEIGHT_SCALE: u32 = 1_000_000;
const WEIGHT_DIGITS: usize = 6;

/// A weight in [0, 1] stored as an integer number of millionths.
///
/// Weights are read from decimal strings with at most six fractional digits,
/// so this representation is exact and comparisons are plain integer ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(u32);

impl Weight {
    pub const ZERO: Weight = Weight(0);
    pub const ONE: Weight = Weight(WEIGHT_SCALE);
    pub const HALF: Weight = Weight(WEIGHT_SCALE / 2);

    /// Builds a weight from millionths, failing outside [0, 1].
    pub fn from_millionths(m: u32) -> Result<Weight> {
        if m > WEIGHT_SCALE {
            return Err(Error::InvalidWeight {
                value: format!("{m}e-6"),
                reason: "weights must lie in [0, 1]".into(),
            });
        }
        Ok(Weight(m))
    }

    /// The weight `k / 10`, for `k` in `0..=10`.
    pub fn tenths(k: u32) -> Weight {
        assert!(k <= 10, "tenths out of range");
        Weight(k * (WEIGHT_SCALE / 10))
    }

    pub fn millionths(self) -> u32 {
        self.0
    }

    pub fn parse(text: &str) -> Result<Weight> {
        let invalid = |reason: &str| Error::InvalidWeight {
            value: text.to_string(),
            reason: reason.to_string(),
        };
        let t = text.trim();
        let (int_part, frac_part) = match t.split_once('.') {
            Some((i, f)) => (i, f),
            None => (t, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(invalid("empty"));
        }
        if !int_part.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
        {
            return Err(invalid("expected a decimal number such as 0.75"));
        }
        if t.contains('.') && frac_part.is_empty() {
            return Err(invalid("missing digits after the decimal point"));
        }
        if frac_part.len() > WEIGHT_DIGITS {
            return Err(invalid("at most 6 fractional digits are supported"));
        }
        let int_value: u64 = if int_part.is_empty() {
            0
        } else {
            int_part
                .parse()
                .map_err(|_| invalid("weights must lie in [0, 1]"))?
        };
        let mut frac_value: u64 = 0;
        for (i, c) in frac_part.chars().enumerate() {
            let digit = c.to_digit(10).expect("checked digit") as u64;
            frac_value += digit * 10u64.pow((WEIGHT_DIGITS - 1 - i) as u32);
        }
        let total = int_value
            .checked_mul(WEIGHT_SCALE as u64)
            .and_then(|v| v.checked_add(frac_value))
            .ok_or_else(|| invalid("weights must lie in [0, 1]"))?;
        if total > WEIGHT_SCALE as u64 {
            return Err(invalid("weights must lie in [0, 1]"));
        }
        Ok(Weight(total as u32))
    }

    pub fn to_rational(self) -> Rational {
        Rational::new(BigInt::from(self.0), BigInt::from(WEIGHT_SCALE))
    }

    /// Absolute difference as an exact rational.
    pub fn distance(self, other: Weight) -> Rational {
        let d = self.0.abs_diff(other.0);
        Rational::new(BigInt::from(d), BigInt::from(WEIGHT_SCALE))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let int = self.0 / WEIGHT_SCALE;
        let frac = self.0 % WEIGHT_SCALE;
        if frac == 0 {
            return write!(f, "{int}");
        }
        let digits = format!("{frac:06}");
        write!(f, "{int}.{}", digits.trim_end_matches('0'))
    }
}

impl std::str::FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Weight> {
        Weight::parse(s)
    }
}

/// Parses a non-negative exact rational from `"3"`, `"0.125"` or `"1/8"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let invalid = |reason: &str| Error::InvalidNumber {
        value: text.to_string(),
        reason: reason.to_string(),
    };
    let t = text.trim();
    if let Some((num, den)) = t.split_once('/') {
        let n = parse_rational(num)?;
        let d = parse_rational(den)?;
        if d.is_zero() {
            return Err(invalid("division by zero"));
        }
        return Ok(n / d);
    }
    let (int_part, frac_part) = match t.split_once('.') {
        Some((i, f)) => (i, f),
        None => (t, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(invalid("empty"));
    }
    if !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return Err(invalid("expected a non-negative decimal or a fraction a/b"));
    }
    let digits = format!("{int_part}{frac_part}");
    let numer: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().map_err(|_| invalid("malformed digits"))?
    };
    let denom = num_traits::pow(BigInt::from(10u32), frac_part.len());
    Ok(Rational::new(numer, denom))
}

/// Renders a rational as `p/q`, or `p` when it is an integer.
pub fn rational_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Rounds half away from zero to `places` decimal digits and renders the result.
pub fn rational_decimal(r: &Rational, places: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10u32), places);
    let scaled = r * Rational::from_integer(scale.clone());
    let half = Rational::new(BigInt::one(), BigInt::from(2u32));
    let rounded = if scaled.is_negative() {
        -((-scaled) + half).floor()
    } else {
        (scaled + half).floor()
    }
    .to_integer();
    let negative = rounded.is_negative();
    let digits = rounded.abs().to_string();
    let body = if places == 0 {
        digits
    } else {
        let padded = format!("{digits:0>width$}", width = places + 1);
        let split = padded.len() - places;
        format!("{}.{}", &padded[..split], &padded[split..])
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `max(0, r)`.
pub fn clamp_zero(r: Rational) -> Rational {
    if r.is_negative() {
        Rational::zero()
    } else {
        r
    }
}
