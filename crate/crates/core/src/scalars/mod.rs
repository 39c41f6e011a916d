//! Coefficient ring: exact rationals, sparse polynomials over `Q[x1..xm]`,
//! and derivations of that ring.

mod derivation;
mod parse;
mod polynomial;

pub use derivation::Derivation;
pub use polynomial::{Monomial, Polynomial};

/// Arbitrary precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(numer.into(), denom.into())
}

pub fn integer(value: i64) -> Rational {
    Rational::from_integer(value.into())
}
