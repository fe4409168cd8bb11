//! Exact rational scalars.
//!
//! Every coefficient in the crate is a [`Rational`]: an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator. The invariants
//! are maintained by `num`'s `Ratio` on every operation.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always reduced, denominator > 0.
pub type Rational = BigRational;

/// Shorthand for `n/d` used pervasively in tests and constructors.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// k! as a big integer.
pub fn factorial(k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=k as u64 {
        acc *= i;
    }
    acc
}

/// k! as a rational.
pub fn factorial_rat(k: u32) -> Rational {
    Rational::from_integer(factorial(k))
}

/// Parse `p/q` or `p` (decimal-free) into a rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let cleaned = text.trim();
    cleaned
        .parse::<Rational>()
        .map_err(|e| Error::InvalidArgument(format!("cannot parse rational {cleaned:?}: {e}")))
        .and_then(|r| {
            if r.denom().is_zero() {
                Err(Error::InvalidArgument("zero denominator".into()))
            } else {
                Ok(r)
            }
        })
}
