//! Exact rational scalars and the integer helpers the root machinery needs.
//!
//! All coefficient arithmetic in this crate runs on [`Rat`]
//! (arbitrary-precision rationals kept in lowest terms with positive
//! denominator), so every comparison and every reported value is exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Exact rational scalar. Canonical form (reduced, positive denominator)
/// is maintained by the underlying representation.
pub type Rat = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for the rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses a rational from a decimal integer string or a `p/q` string.
///
/// Whitespace is not trimmed and floating-point notation is rejected:
/// the text formats of this crate never carry decimals.
pub fn parse_rat(text: &str) -> Result<Rat, Error> {
    let bad = || Error::BadRational(text.to_string());
    match text.split_once('/') {
        None => {
            let n: BigInt = text.parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(n))
        }
        Some((num, den)) => {
            let n: BigInt = num.parse().map_err(|_| bad())?;
            let d: BigInt = den.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::BadRational(text.to_string()));
            }
            Ok(Rat::new(n, d))
        }
    }
}

/// Formats a rational as a decimal integer string or a `p/q` string.
pub fn format_rat(value: &Rat) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Floor of the square root of a non-negative integer.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of negative integer");
    n.sqrt()
}

/// Splits a positive integer as `s^2 * d` with `d` square-free.
///
/// Returns `(s, d)`. Uses trial division, which is adequate for the
/// coefficient sizes a plane-map classification produces; inputs with
/// huge prime square factors are outside this crate's operating range.
pub fn square_free_split(n: &BigInt) -> (BigInt, BigInt) {
    assert!(
        n.is_positive(),
        "square_free_split needs a positive integer"
    );
    let mut rest = n.clone();
    let mut square = BigInt::one();
    let mut free = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut exp = 0u32;
        while rest.is_multiple_of(&p) {
            rest /= &p;
            exp += 1;
        }
        if exp > 0 {
            square *= p.pow(exp / 2);
            if exp % 2 == 1 {
                free *= &p;
            }
        }
        p += 1;
    }
    if rest > BigInt::one() {
        free *= rest;
    }
    (square, free)
}

/// All positive divisors of a nonzero integer, in ascending order.
pub fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    assert!(n.is_positive(), "divisors of zero are unbounded");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            small.push(d.clone());
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for text in ["0", "-7", "22/7", "-3/5", "1000000000000000000001"] {
            let v = parse_rat(text).unwrap();
            assert_eq!(format_rat(&v), text);
        }
    }

    #[test]
    fn parse_reduces_to_canonical_form() {
        assert_eq!(format_rat(&parse_rat("6/4").unwrap()), "3/2");
        assert_eq!(format_rat(&parse_rat("5/-10").unwrap()), "-1/2");
    }

    #[test]
    fn parse_rejects_garbage() {
        for text in ["", "1/0", "1.5", "a/b", "1/2/3", "1e3"] {
            assert!(parse_rat(text).is_err(), "accepted {text:?}");
        }
    }

    #[test]
    fn square_free_split_examples() {
        let (s, d) = square_free_split(&BigInt::from(72));
        assert_eq!((s, d), (BigInt::from(6), BigInt::from(2)));
        let (s, d) = square_free_split(&BigInt::from(1));
        assert_eq!((s, d), (BigInt::one(), BigInt::one()));
        let (s, d) = square_free_split(&BigInt::from(9991));
        assert_eq!((s, d), (BigInt::one(), BigInt::from(9991)));
    }

    #[test]
    fn divisors_are_complete_and_sorted() {
        let divs = positive_divisors(&BigInt::from(-12));
        let expect: Vec<BigInt> = [1, 2, 3, 4, 6, 12]
            .iter()
            .map(|&n| BigInt::from(n))
            .collect();
        assert_eq!(divs, expect);
    }
}
