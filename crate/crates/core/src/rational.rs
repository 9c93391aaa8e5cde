//! Exact rational scalars.
//!
//! Everything in the engine — coefficients *and* exponents — is a
//! [`Rational`]: an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator. Exponents must be rational rather than integral
//! because realized powers of the Lefschetz class involve `L^(d/2)`, which is
//! a half-integer power in odd dimension.

use num::BigInt;

/// Arbitrary-precision rational number, always in canonical form
/// (reduced, denominator > 0). Backed by `num::BigRational`.
pub type Rational = num::BigRational;

/// Shorthand for an integer as a [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `p/q` as a [`Rational`].
///
/// # Panics
/// Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}
