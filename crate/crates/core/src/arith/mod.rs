//! Exact integer and rational arithmetic.
//!
//! Every feasibility decision in this crate is made here, on
//! arbitrary-precision integers and rationals. Comparisons against
//! thresholds of the form `a + sqrt(b)` go through [`cmp_surd`]; values that
//! live in a single real quadratic field `Q(sqrt(r))` are carried by
//! [`Surd`].

mod surd;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use surd::Surd;

use std::cmp::Ordering;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Floor square root of a nonnegative integer together with an exactness flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqrtResult {
    pub floor_root: BigInt,
    pub is_exact: bool,
}

/// Shorthand for the rational `num / den`.
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integral rational.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn big(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Binomial coefficient `C(a, b)`; zero when `b > a`.
pub fn binomial(a: u64, b: u64) -> BigInt {
    if b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        // acc * (a - i) is divisible by (i + 1) at every step.
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

/// Floor square root of `x >= 0`.
pub fn int_sqrt(x: &BigInt) -> Result<SqrtResult> {
    if x.is_negative() {
        return Err(Error::NegativeSqrt(x.to_string()));
    }
    let floor_root = x.sqrt();
    let is_exact = &floor_root * &floor_root == *x;
    Ok(SqrtResult {
        floor_root,
        is_exact,
    })
}

/// The rational square root of `x`, if numerator and denominator are both
/// perfect squares.
pub fn rational_sqrt(x: &BigRational) -> Result<Option<BigRational>> {
    if x.is_negative() {
        return Err(Error::NegativeSqrt(x.to_string()));
    }
    let num = int_sqrt(x.numer())?;
    let den = int_sqrt(x.denom())?;
    if num.is_exact && den.is_exact {
        Ok(Some(BigRational::new(num.floor_root, den.floor_root)))
    } else {
        Ok(None)
    }
}

/// Exact sign of `q - (a + sqrt(b))`.
pub fn cmp_surd(q: &BigRational, a: &BigRational, b: &BigRational) -> Result<Ordering> {
    if b.is_negative() {
        return Err(Error::NegativeSqrt(b.to_string()));
    }
    let diff = q - a;
    if diff.is_negative() {
        return Ok(Ordering::Less);
    }
    Ok((&diff * &diff).cmp(b))
}

/// Smallest integer `m` with `m >= a + sqrt(b)`.
pub fn ceil_surd(a: &BigRational, b: &BigRational) -> Result<BigInt> {
    let mut m = floor_surd(a, b)?;
    if cmp_surd(&BigRational::from_integer(m.clone()), a, b)? == Ordering::Less {
        m += 1;
    }
    Ok(m)
}

/// Largest integer `m` with `m <= a + sqrt(b)`.
pub fn floor_surd(a: &BigRational, b: &BigRational) -> Result<BigInt> {
    if b.is_negative() {
        return Err(Error::NegativeSqrt(b.to_string()));
    }
    // floor(a) + floor(sqrt(floor(b))) <= a + sqrt(b) < that + 3
    let mut m = a.floor().to_integer() + int_sqrt(&b.floor().to_integer())?.floor_root;
    while cmp_surd(&BigRational::from_integer(&m + 1), a, b)? != Ordering::Greater {
        m += 1;
    }
    Ok(m)
}

/// `Some(n)` when `x` is an integer.
pub fn as_integer(x: &BigRational) -> Option<BigInt> {
    x.is_integer().then(|| x.to_integer())
}

/// True when `x` is an odd integer.
pub fn is_odd_integer(x: &BigRational) -> bool {
    as_integer(x).is_some_and(|n| n.is_odd())
}

pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Exact rational value of a finite `f64`.
pub fn from_f64(x: f64) -> Option<BigRational> {
    BigRational::from_float(x)
}

/// Parses `"p/q"`, `"p"` or a finite decimal such as `"-0.125"` into an
/// exact rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(BigRational::new(p, q));
    }
    if let Ok(n) = s.parse::<BigInt>() {
        return Some(BigRational::from_integer(n));
    }
    parse_decimal(s)
}

fn parse_decimal(s: &str) -> Option<BigRational> {
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, body) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole
        .chars()
        .chain(frac.chars())
        .all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let digits: BigInt = format!("{whole}{frac}").parse().ok()?;
    let scale = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut value = BigRational::from_integer(digits);
    if scale >= 0 {
        value *= BigRational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        value /= BigRational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Some(if neg { -value } else { value })
}
