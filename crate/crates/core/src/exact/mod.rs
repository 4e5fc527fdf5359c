//! Exact rational arithmetic, univariate polynomial algebra, and certified
//! real-root location.

mod poly;
mod root;

pub use poly::Poly;
pub use root::{cauchy_bound, largest_real_root, sturm_count, RootInterval};

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, kept in canonical form
/// (positive denominator, gcd(|num|, den) = 1) by construction.
pub type Rat = num::BigRational;

/// Default width bound for root isolation (1e-8).
pub fn default_eps() -> Rat {
    Rat::new(BigInt::one(), BigInt::from(100_000_000u64))
}

/// Decimal digits printed alongside certified intervals.
pub const REPORT_DIGITS: usize = 6;

/// Rational from an integer pair; panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(num: i64) -> Rat {
    Rat::from_integer(BigInt::from(num))
}

/// Parses `p/q`, integer, plain decimal, or scientific notation into an
/// exact rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let input = s.trim();
    let err = || Error::InvalidRational(input.to_string());
    if input.is_empty() {
        return Err(err());
    }
    if let Some((num, den)) = input.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| err())?;
        let den: BigInt = den.trim().parse().map_err(|_| err())?;
        if den.is_zero() {
            return Err(err());
        }
        return Ok(Rat::new(num, den));
    }
    // Decimal / scientific form: optional sign, digits, optional fraction,
    // optional exponent.
    let (mantissa, exponent) = match input.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i64>().map_err(|_| err())?),
        None => (input, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    let digits: String = format!("{int_part}{frac_part}");
    let trimmed = digits.strip_prefix(['+', '-']).unwrap_or(&digits);
    if trimmed.is_empty() || !trimmed.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err());
    }
    let num: BigInt = digits.parse().map_err(|_| err())?;
    let shift = exponent - frac_part.len() as i64;
    let pow10 = BigInt::from(10u32).pow(shift.unsigned_abs() as u32);
    Ok(if shift >= 0 {
        Rat::from_integer(num * pow10)
    } else {
        Rat::new(num, pow10)
    })
}

/// Canonical `p/q` rendering; integers print without the denominator.
pub fn format_rat(x: &Rat) -> String {
    x.to_string()
}

/// Rounds to `places` decimal digits, ties to even, and renders the result
/// with a fixed number of fraction digits.
pub fn decimal_string(x: &Rat, places: usize) -> String {
    let scale = BigInt::from(10u32).pow(places as u32);
    let scaled_num = x.numer().abs() * &scale;
    let den = x.denom().abs();
    let (mut q, r) = num::Integer::div_rem(&scaled_num, &den);
    let twice = &r * BigInt::from(2);
    if twice > den || (twice == den && num::Integer::is_odd(&q)) {
        q += 1;
    }
    let sign = if x.is_negative() && !q.is_zero() { "-" } else { "" };
    let (int_part, frac_part) = num::Integer::div_rem(&q, &scale);
    if places == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part:0>places$}")
    }
}

/// Serde adapter serializing a [`Rat`] as its canonical `p/q` string.
pub mod rat_serde {
    use super::{format_rat, parse_rat, Rat};
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rat(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        parse_rat(&s).map_err(D::Error::custom)
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n as u64).map(BigInt::from).product()
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num::integer::binomial(BigInt::from(n as u64), BigInt::from(k as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_fraction_and_integers() {
        assert_eq!(parse_rat("1/6").unwrap(), rat(1, 6));
        assert_eq!(parse_rat("-3/9").unwrap(), rat(-1, 3));
        assert_eq!(parse_rat("5").unwrap(), rat_int(5));
        assert_eq!(parse_rat(" -7 ").unwrap(), rat_int(-7));
    }

    #[test]
    fn parse_decimal_and_scientific() {
        assert_eq!(parse_rat("0.5").unwrap(), rat(1, 2));
        assert_eq!(parse_rat("-4.25").unwrap(), rat(-17, 4));
        assert_eq!(parse_rat("1e-8").unwrap(), rat(1, 100_000_000));
        assert_eq!(parse_rat("2.5e2").unwrap(), rat_int(250));
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "x", "1/0", "1.2.3", "--4", "1e", "2/a"] {
            assert!(parse_rat(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn format_is_canonical() {
        assert_eq!(format_rat(&rat(4, 2)), "2");
        assert_eq!(format_rat(&rat(-1, 6)), "-1/6");
    }

    #[test]
    fn decimal_rounds_half_to_even() {
        assert_eq!(decimal_string(&rat(1, 2), 0), "0");
        assert_eq!(decimal_string(&rat(3, 2), 0), "2");
        assert_eq!(decimal_string(&rat(25, 1000), 2), "0.02");
        assert_eq!(decimal_string(&rat(35, 1000), 2), "0.04");
        assert_eq!(decimal_string(&rat(-1, 3), 6), "-0.333333");
        assert_eq!(decimal_string(&rat(64, 13), 6), "4.923077");
    }

    #[test]
    fn binomial_and_factorial() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(binomial(34, 4), BigInt::from(46376));
        assert_eq!(binomial(3, 7), BigInt::zero());
    }
}
