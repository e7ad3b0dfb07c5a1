//! The scalar type: arbitrary-precision rationals, always in lowest terms
//! with a positive denominator, plus the few helpers the rest of the crate
//! needs (formatting, dyadicity tests, integer floor/ceil).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

/// Exact rational scalar. `BigRational` keeps values reduced with a positive
/// denominator, which is exactly the invariant the crate relies on.
pub type Rational = BigRational;

/// Shorthand for small constants: `rat(3)`, `rat((1, 4))`, `rat((-5, 8))`.
pub fn rat<T: IntoRational>(v: T) -> Rational {
    v.into_rational()
}

pub trait IntoRational {
    fn into_rational(self) -> Rational;
}

impl IntoRational for i64 {
    fn into_rational(self) -> Rational {
        Rational::from_integer(BigInt::from(self))
    }
}

impl IntoRational for (i64, i64) {
    fn into_rational(self) -> Rational {
        Rational::new(BigInt::from(self.0), BigInt::from(self.1))
    }
}

impl IntoRational for Rational {
    fn into_rational(self) -> Rational {
        self
    }
}

/// Renders `num/den`, omitting the denominator when it is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `num`, `num/den` or `-num/den`. Whitespace around the tokens is
/// accepted; a zero denominator is rejected.
pub fn parse_rational(s: &str) -> Result<Rational, RationalParseError> {
    let s = s.trim();
    let err = || RationalParseError(s.to_string());
    match s.split_once('/') {
        None => {
            let n = BigInt::from_str(s).map_err(|_| err())?;
            Ok(Rational::from_integer(n))
        }
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| err())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            Ok(Rational::new(n, d))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a rational number: {0:?}")]
pub struct RationalParseError(pub String);

/// True when the denominator is a power of two (1, 2, 4, ...).
pub fn is_dyadic(r: &Rational) -> bool {
    is_power_of_two(r.denom())
}

/// True when |r| = 2^k for some integer k (so 4, 1, 1/8, -2 all qualify).
pub fn is_pow2_magnitude(r: &Rational) -> bool {
    !r.is_zero() && is_power_of_two(&r.numer().abs()) && is_power_of_two(r.denom())
}

fn is_power_of_two(n: &BigInt) -> bool {
    if !n.is_positive() {
        return false;
    }
    let (_, bytes) = n.to_bytes_be();
    // A power of two has exactly one set bit.
    let mut ones = 0u32;
    for b in bytes {
        ones += b.count_ones();
    }
    ones == 1
}

/// ⌈r⌉ as a big integer.
pub fn ceil_int(r: &Rational) -> BigInt {
    r.ceil().to_integer()
}

/// ⌊r⌋ as a big integer.
pub fn floor_int(r: &Rational) -> BigInt {
    r.floor().to_integer()
}

/// True when r is an integer.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Least common multiple of two positive rationals' denominators scaled so
/// that `scale_to_integer(r) * r` is integral; returns the smallest positive
/// integer k with k·r ∈ ℤ.
pub fn integer_scale(r: &Rational) -> BigInt {
    r.denom().clone()
}

/// Smallest positive integer that is an integer multiple of the positive
/// rational r, i.e. the numerator of r divided by gcd fluff: k·r with
/// k = denom(r) gives numer(r); the minimal integer multiple is
/// numer(r)/gcd(numer, 1) = numer(r) after reduction.
pub fn minimal_integer_multiple(r: &Rational) -> BigInt {
    debug_assert!(r.is_positive());
    // r = a/b reduced; k·r integral ⇔ b | k; minimal k = b, giving a.
    r.numer().clone()
}

/// gcd helper on big integers, always nonnegative.
pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}
