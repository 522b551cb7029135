//! Exact integer and rational helpers shared by every module.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative count.
pub type BigCount = BigUint;

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(v: impl Into<BigInt>) -> Rat {
    Rat::from_integer(v.into())
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Binomial coefficient with the vanishing convention used by all the
/// closed forms: zero when `b < 0`, when `a < 0`, or when `b > a`.
///
/// A negative upper argument means a negative factorial sits in the
/// denominator of the term, so the term is dropped.
pub fn binom(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    BigInt::from(binom_u(a as u64, b as u64))
}

/// `C(n, k)` for nonnegative arguments; zero when `k > n`.
pub fn binom_u(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Generalized binomial `a (a-1) ... (a-m+1) / m!`, defined for any integer
/// upper argument. Zero for `m < 0`.
pub fn binom_general(a: i64, m: i64) -> BigInt {
    if m < 0 {
        return BigInt::zero();
    }
    if a >= 0 {
        return binom(a, m);
    }
    // C(a, m) = (-1)^m C(m - a - 1, m) for negative a.
    let v = binom(m - a - 1, m);
    if m % 2 == 0 {
        v
    } else {
        -v
    }
}

pub fn pow2(k: u64) -> BigUint {
    BigUint::one() << k
}

pub fn rat_pow(base: &Rat, exp: u64) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Converts an exact rational to a count, failing loudly when it is not a
/// nonnegative integer.
pub fn rat_to_count(
    value: &Rat,
    formula: &'static str,
    args: impl FnOnce() -> String,
) -> Result<BigCount> {
    if !value.is_integer() || value.is_negative() {
        return Err(Error::NonIntegral {
            formula,
            args: args(),
            value: value.to_string(),
        });
    }
    Ok(value
        .to_integer()
        .to_biguint()
        .expect("checked nonnegative"))
}

pub fn count_to_rat(value: &BigCount) -> Rat {
    rat_int(BigInt::from(value.clone()))
}

pub fn check_probability(p: &Rat) -> Result<()> {
    if p.is_negative() || *p > Rat::one() {
        return Err(Error::InvalidProbability(p.to_string()));
    }
    Ok(())
}

/// Parses an exact rational written as `a/b` or `a`. Decimal notation is
/// rejected so that no precision is lost on the way in.
pub fn parse_rat(text: &str) -> Result<Rat> {
    let text = text.trim();
    let bad = || Error::InvalidRational(text.to_string());
    let valid = !text.is_empty()
        && text
            .chars()
            .all(|c| c.is_ascii_digit() || c == '/' || c == '-' || c == '+')
        && text.matches('/').count() <= 1;
    if !valid {
        return Err(bad());
    }
    if let Some((_, den)) = text.split_once('/') {
        if den.trim_start_matches(['-', '+']).chars().all(|c| c == '0') {
            return Err(bad());
        }
    }
    Rat::from_str(text).map_err(|_| bad())
}

/// Parses a probability and checks it lies in `[0, 1]`.
pub fn parse_probability(text: &str) -> Result<Rat> {
    let p = parse_rat(text)?;
    check_probability(&p)?;
    Ok(p)
}

pub fn rat_to_f64(value: &Rat) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn guarded_binomial_vanishes_outside_support() {
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(5, 6), BigInt::zero());
        assert_eq!(binom(5, -1), BigInt::zero());
        assert_eq!(binom(-3, 1), BigInt::zero());
        assert_eq!(binom(0, 0), BigInt::one());
    }

    #[test]
    fn generalized_binomial_negative_upper() {
        // C(-1, m) = (-1)^m
        for m in 0..6 {
            let expected = if m % 2 == 0 { 1 } else { -1 };
            assert_eq!(binom_general(-1, m), BigInt::from(expected));
        }
        // C(-3, 2) = (-3)(-4)/2 = 6
        assert_eq!(binom_general(-3, 2), BigInt::from(6));
        assert_eq!(binom_general(-3, 3), BigInt::from(-10));
    }

    #[test]
    fn binomial_row_sums() {
        for n in 0..30u64 {
            let s: BigUint = (0..=n).map(|k| binom_u(n, k)).sum();
            assert_eq!(s, pow2(n));
        }
    }

    #[test]
    fn parse_rejects_decimals_and_bad_probabilities() {
        assert_eq!(parse_probability("1/3").unwrap(), rat(1, 3));
        assert_eq!(parse_probability("1").unwrap(), rat(1, 1));
        assert_eq!(parse_probability("2/4").unwrap(), rat(1, 2));
        assert!(parse_probability("0.5").is_err());
        assert!(parse_probability("4/3").is_err());
        assert!(parse_probability("-1/3").is_err());
        assert!(parse_probability("1/0").is_err());
        assert!(parse_probability("").is_err());
    }

    #[test]
    fn integrality_is_enforced() {
        assert!(rat_to_count(&rat(3, 2), "t", || "x".into()).is_err());
        assert!(rat_to_count(&rat(-2, 1), "t", || "x".into()).is_err());
        assert_eq!(
            rat_to_count(&rat(6, 2), "t", || "x".into()).unwrap(),
            BigUint::from(3u32)
        );
    }

    #[test]
    fn float_conversion() {
        assert_eq!(rat_to_f64(&rat(1, 2)), 0.5);
    }
}
