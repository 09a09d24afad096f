//! Helpers around `BigRational`: exact text round trip and rational
//! reconstruction from enclosing intervals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{AlgebraError, Result};

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical `num/den` form (the denominator is always written).
pub fn format_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Accepts `n`, `n/d` and the `n//d` spelling used by some CAS dumps.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || AlgebraError::Parse(format!("malformed rational {s:?}"));
    let (num, den) = if let Some((n, d)) = s.split_once("//") {
        (n, Some(d))
    } else if let Some((n, d)) = s.split_once('/') {
        (n, Some(d))
    } else {
        (s, None)
    };
    let num: BigInt = num.trim().parse().map_err(|_| bad())?;
    let den: BigInt = match den {
        Some(d) => d.trim().parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(AlgebraError::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(num, den))
}

pub fn floor(q: &BigRational) -> BigInt {
    q.numer().div_floor(q.denom())
}

/// The rational with the smallest denominator in the closed interval `[lo, hi]`
/// (Stern–Brocot descent via continued fractions).
pub fn simplest_rational_in(lo: &BigRational, hi: &BigRational) -> BigRational {
    assert!(lo <= hi, "empty interval");
    if lo.is_positive() || lo.is_zero() {
        simplest_nonneg(lo, hi)
    } else if hi.is_negative() {
        -simplest_nonneg(&-hi, &-lo)
    } else {
        BigRational::zero()
    }
}

fn simplest_nonneg(lo: &BigRational, hi: &BigRational) -> BigRational {
    let fl = floor(lo);
    let fl_q = BigRational::from_integer(fl.clone());
    if fl_q == *lo {
        return fl_q;
    }
    if BigRational::from_integer(fl.clone() + 1) <= *hi {
        return BigRational::from_integer(fl + 1);
    }
    // lo and hi share the integer part; recurse on reciprocals of the fractional parts.
    let lo_f = lo - &fl_q;
    let hi_f = hi - &fl_q;
    let inner = simplest_nonneg(&hi_f.recip(), &lo_f.recip());
    fl_q + inner.recip()
}

pub fn lcm_of_denominators<'a>(qs: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    qs.into_iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}
