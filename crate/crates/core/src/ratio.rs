//! Helpers for exact rational weights and their logarithms.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Shorthand for a small rational constant.
pub fn ratio(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn is_zero(r: &BigRational) -> bool {
    r.is_zero()
}

pub fn is_one(r: &BigRational) -> bool {
    r.is_one()
}

/// Canonical `num/den` text, always with an explicit denominator.
pub fn format_ratio(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parse `num/den` (or a bare integer) into a reduced rational.
pub fn parse_ratio(text: &str) -> Result<BigRational> {
    let corrupt = || Error::CorruptRationals(text.to_string());
    let mut parts = text.splitn(2, '/');
    let numer: BigInt = parts
        .next()
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(corrupt)?;
    let denom: BigInt = match parts.next() {
        Some(s) => s.trim().parse().map_err(|_| corrupt())?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(corrupt());
    }
    Ok(BigRational::new(numer, denom))
}

/// Base-2 logarithm of a strictly positive rational, accurate to double
/// precision even when numerator or denominator exceed the `f64` range.
pub fn log2(r: &BigRational) -> f64 {
    debug_assert!(r.is_positive(), "log2 of a non-positive rational");
    log2_bigint(r.numer()) - log2_bigint(r.denom())
}

fn log2_bigint(n: &BigInt) -> f64 {
    debug_assert!(n.sign() == Sign::Plus, "log2 of a non-positive integer");
    let bits = n.bits();
    if bits <= 53 {
        n.to_f64().expect("small BigInt fits f64").log2()
    } else {
        let shift = bits - 53;
        let top = (n >> shift).to_f64().expect("53-bit BigInt fits f64");
        top.log2() + shift as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn round_trip_canonical_text() {
        let r = ratio(3, 12);
        assert_eq!(format_ratio(&r), "1/4");
        assert_eq!(parse_ratio("1/4").unwrap(), r);
        assert_eq!(parse_ratio("3/12").unwrap(), r);
        assert_eq!(parse_ratio("2").unwrap(), ratio(2, 1));
    }

    #[test]
    fn zero_denominator_is_corrupt() {
        assert!(matches!(
            parse_ratio("1/0"),
            Err(Error::CorruptRationals(_))
        ));
        assert!(matches!(parse_ratio("x/2"), Err(Error::CorruptRationals(_))));
    }

    #[test]
    fn log2_of_powers_of_two_is_exact() {
        assert_eq!(log2(&ratio(1, 2)), -1.0);
        assert_eq!(log2(&ratio(1, 4)), -2.0);
        assert_eq!(log2(&ratio(8, 1)), 3.0);
        assert_eq!(log2(&ratio(1, 1)), 0.0);
    }

    #[test]
    fn log2_handles_huge_values() {
        let big = BigRational::new(BigInt::from(1), BigInt::from(2).pow(700));
        assert_eq!(log2(&big), -700.0);
    }
}
