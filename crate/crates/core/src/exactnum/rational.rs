//! Arbitrary-precision rational numbers.
//!
//! The scalar type is [`num_rational::BigRational`], re-exported as
//! [`Rational`].  It already maintains the invariants we need — numerator
//! and denominator are kept coprime, the denominator is positive, and zero
//! is stored as `0/1` — so this module only adds constructors and the
//! `a/b` text round trip used by the serialization layer.

use alloc::string::String;
use alloc::string::ToString;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar: reduced fraction with positive denominator.
pub type Rational = num_rational::BigRational;

/// The integer `n` as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The fraction `a/b`.  Panics if `b == 0`.
pub fn frac(a: i64, b: i64) -> Rational {
    Rational::new(BigInt::from(a), BigInt::from(b))
}

/// Parses `"a"` or `"a/b"` (optionally signed) into a rational.
///
/// Returns `None` on malformed input or a zero denominator.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        None => {
            let n: BigInt = text.parse().ok()?;
            Some(Rational::from_integer(n))
        }
        Some((num, den)) => {
            let n: BigInt = num.trim().parse().ok()?;
            let d: BigInt = den.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
    }
}

/// Renders a rational as `"a"` when integral and `"a/b"` otherwise.
///
/// The output is accepted by [`parse_rational`], and the round trip is the
/// identity because rationals are kept in lowest terms.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        let mut s = r.numer().to_string();
        s.push('/');
        s.push_str(&r.denom().to_string());
        s
    }
}

/// True when `r` is a (possibly negative) integer.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Absolute value, exposed with the naming used elsewhere in this crate.
pub fn rational_abs(r: &Rational) -> Rational {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_is_exact() {
        // 1/3 + 1/6 must come out as exactly 1/2, not an approximation.
        assert_eq!(frac(1, 3) + frac(1, 6), frac(1, 2));
        assert_eq!(frac(2, 4), frac(1, 2));
        assert_eq!(frac(7, -3), frac(-7, 3));
        assert_eq!(rat(0), frac(0, 5));
    }

    #[test]
    fn invariants_hold_after_reduction() {
        let r = frac(-6, -4);
        assert_eq!(r, frac(3, 2));
        assert!(r.denom() > &num_bigint::BigInt::from(0));
    }

    #[test]
    fn text_round_trip() {
        for s in ["0", "5", "-5", "1/2", "-7/3", "22/7"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        // Non-canonical input parses to the reduced value.
        assert_eq!(parse_rational("4/6").unwrap(), frac(2, 3));
        assert_eq!(format_rational(&parse_rational("4/6").unwrap()), "2/3");
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("a/b").is_none());
    }
}
