//! Coefficient-ring abstraction for series and polynomial arithmetic.
//!
//! Every coefficient ring used in this crate is a commutative Q-algebra
//! that is also an integral domain with decidable exact division: the
//! rationals, the Gaussian rationals and univariate polynomial rings over
//! either. Operations take references so that bignum values are never
//! cloned implicitly.

use crate::rational::Rat;

/// A commutative Q-algebra with exact arithmetic.
pub trait CoeffRing: Clone + PartialEq + std::fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;

    /// Multiplication by an embedded rational scalar.
    fn scale(&self, r: &Rat) -> Self;

    /// Embedding of the rationals.
    fn from_rat(r: Rat) -> Self;

    /// Multiplicative inverse, if this element is a unit.
    fn try_inv(&self) -> Option<Self>;

    /// Exact division: `Some(q)` with `self = q * d` if such `q` exists.
    fn try_exact_div(&self, d: &Self) -> Option<Self>;

    fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_integer(n.into()))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}
